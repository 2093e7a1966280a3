// dsp/features.cc

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

#include "dsp/features.h"

#include <cmath>

#include "util/common.h"

namespace dsd {

namespace {

constexpr double kMelLogFloor = 1e-10;

std::vector<double> PeriodicHann(size_t n) {
  std::vector<double> w(n);
  for (size_t i = 0; i < n; ++i)
    w[i] = 0.5 - 0.5 * std::cos(2.0 * M_PI * static_cast<double>(i) /
                                static_cast<double>(n));
  return w;
}

}  // namespace

double HzToMel(double hz) { return 2595.0 * std::log10(1.0 + hz / 700.0); }

double MelToHz(double mel) {
  return 700.0 * (std::pow(10.0, mel / 2595.0) - 1.0);
}

size_t StftFrameCount(size_t num_samples) {
  DSD_REQUIRE(num_samples >= kWindowLength, "stft: input has ", num_samples,
              " samples; at least ", kWindowLength, " are required");
  return 1 + (num_samples - kWindowLength) / kHopLength;
}

std::vector<std::vector<Complex>> Stft(const Waveform& w) {
  DSD_REQUIRE(w.sample_rate == kSampleRate, "stft: sample rate must be ",
              kSampleRate, " Hz, got ", w.sample_rate);
  const size_t frames = StftFrameCount(w.samples.size());
  static const std::vector<double> window = PeriodicHann(kWindowLength);

  std::vector<std::vector<Complex>> out(frames);
  std::vector<Complex> buf(kWindowLength);
  for (size_t t = 0; t < frames; ++t) {
    const size_t start = t * kHopLength;
    for (size_t i = 0; i < kWindowLength; ++i)
      buf[i] = Complex(w.samples[start + i] * window[i], 0.0);
    std::vector<Complex> spec = Fft(buf, kFftSize);
    spec.resize(kSpectrumBins);
    out[t] = std::move(spec);
  }
  return out;
}

std::vector<double> MelFilterbank() {
  const double mel_lo = HzToMel(0.0);
  const double mel_hi = HzToMel(static_cast<double>(kSampleRate) / 2.0);
  // 82 edge points define 80 triangles.
  std::vector<double> edges_hz(kMelBands + 2);
  for (size_t i = 0; i < edges_hz.size(); ++i)
    edges_hz[i] = MelToHz(mel_lo + (mel_hi - mel_lo) * static_cast<double>(i) /
                                       static_cast<double>(kMelBands + 1));

  std::vector<double> fb(kMelBands * kSpectrumBins, 0.0);
  const double bin_hz =
      static_cast<double>(kSampleRate) / static_cast<double>(kFftSize);
  for (size_t m = 0; m < kMelBands; ++m) {
    const double fl = edges_hz[m], fc = edges_hz[m + 1], fr = edges_hz[m + 2];
    for (size_t b = 0; b < kSpectrumBins; ++b) {
      const double f = static_cast<double>(b) * bin_hz;
      double v = 0.0;
      if (f > fl && f < fr)
        v = f <= fc ? (f - fl) / (fc - fl) : (fr - f) / (fr - fc);
      fb[m * kSpectrumBins + b] = v;
    }
  }
  return fb;
}

MelSpectrogram ComputeMelSpectrogram(const Waveform& w) {
  const std::vector<std::vector<Complex>> spec = Stft(w);
  static const std::vector<double> fb = MelFilterbank();

  MelSpectrogram mel;
  mel.frames = spec.size();
  mel.values.assign(mel.frames * kMelBands, 0.0);

  std::vector<double> power(kSpectrumBins);
  for (size_t t = 0; t < mel.frames; ++t) {
    for (size_t b = 0; b < kSpectrumBins; ++b) power[b] = std::norm(spec[t][b]);
    for (size_t m = 0; m < kMelBands; ++m) {
      const double* frow = &fb[m * kSpectrumBins];
      double acc = 0.0;
      for (size_t b = 0; b < kSpectrumBins; ++b) acc += frow[b] * power[b];
      mel.at(t, m) = std::log(acc + kMelLogFloor);
    }
  }
  return mel;
}

MelSpectrogram ZScoreNormalize(const MelSpectrogram& m) {
  DSD_REQUIRE(m.frames >= 1, "zscore: empty spectrogram");
  const size_t n = m.values.size();
  double mean = 0.0;
  for (double v : m.values) mean += v;
  mean /= static_cast<double>(n);
  double var = 0.0;
  for (double v : m.values) var += (v - mean) * (v - mean);
  var /= static_cast<double>(n);
  const double sd = std::sqrt(var);

  MelSpectrogram out;
  out.frames = m.frames;
  out.values.assign(n, 0.0);
  if (sd < 1e-8) return out;  // constant input maps to all zeros
  for (size_t i = 0; i < n; ++i) out.values[i] = (m.values[i] - mean) / sd;
  return out;
}

}  // namespace dsd
