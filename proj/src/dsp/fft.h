// dsp/fft.h

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

#ifndef DSD_DSP_FFT_H_
#define DSD_DSP_FFT_H_

#include <complex>
#include <vector>

namespace dsd {

using Complex = std::complex<double>;

// Radix-2 iterative DFT of length n (a power of two). The input is
// zero-padded to n; an input longer than n is a contract error.
std::vector<Complex> Fft(const std::vector<Complex>& signal, size_t n);

// Inverse transform; Ifft(Fft(x, n), n) recovers x up to rounding.
std::vector<Complex> Ifft(const std::vector<Complex>& spectrum, size_t n);

}  // namespace dsd

#endif  // DSD_DSP_FFT_H_
