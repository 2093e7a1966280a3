// dsp/fft.cc

// Copyright 2026  The dsd Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include "dsp/fft.h"

#include <cmath>

#include "util/common.h"

namespace dsd {

namespace {

bool IsPowerOfTwo(size_t n) { return n != 0 && (n & (n - 1)) == 0; }

void Transform(std::vector<Complex>* a, bool inverse) {
  const size_t n = a->size();
  // Bit-reversal permutation.
  for (size_t i = 1, j = 0; i < n; ++i) {
    size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap((*a)[i], (*a)[j]);
  }
  for (size_t len = 2; len <= n; len <<= 1) {
    const double ang = (inverse ? 2.0 : -2.0) * M_PI / static_cast<double>(len);
    const Complex wlen(std::cos(ang), std::sin(ang));
    for (size_t i = 0; i < n; i += len) {
      Complex w(1.0, 0.0);
      for (size_t j = 0; j < len / 2; ++j) {
        Complex u = (*a)[i + j];
        Complex v = (*a)[i + j + len / 2] * w;
        (*a)[i + j] = u + v;
        (*a)[i + j + len / 2] = u - v;
        w *= wlen;
      }
    }
  }
  if (inverse) {
    const double inv = 1.0 / static_cast<double>(n);
    for (Complex& x : *a) x *= inv;
  }
}

std::vector<Complex> Padded(const std::vector<Complex>& signal, size_t n) {
  DSD_REQUIRE(IsPowerOfTwo(n), "fft: size ", n, " is not a power of two");
  DSD_REQUIRE(signal.size() <= n, "fft: signal length ", signal.size(),
              " exceeds transform size ", n);
  std::vector<Complex> a(n, Complex(0.0, 0.0));
  std::copy(signal.begin(), signal.end(), a.begin());
  return a;
}

}  // namespace

std::vector<Complex> Fft(const std::vector<Complex>& signal, size_t n) {
  std::vector<Complex> a = Padded(signal, n);
  Transform(&a, false);
  return a;
}

std::vector<Complex> Ifft(const std::vector<Complex>& spectrum, size_t n) {
  std::vector<Complex> a = Padded(spectrum, n);
  Transform(&a, true);
  return a;
}

}  // namespace dsd
