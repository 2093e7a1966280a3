// dsp/features.h

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

#ifndef DSD_DSP_FEATURES_H_
#define DSD_DSP_FEATURES_H_

#include <vector>

#include "dsp/fft.h"

namespace dsd {

// 16 kHz analysis: 25 ms Hann window, 10 ms hop, 512-point FFT, 80 mel bands
// spanning 0..8000 Hz.
inline constexpr size_t kSampleRate = 16000;
inline constexpr size_t kWindowLength = 400;  // 25 ms
inline constexpr size_t kHopLength = 160;     // 10 ms
inline constexpr size_t kFftSize = 512;
inline constexpr size_t kSpectrumBins = kFftSize / 2 + 1;  // one-sided
inline constexpr size_t kMelBands = 80;

struct Waveform {
  std::vector<double> samples;
  size_t sample_rate = kSampleRate;
};

// Time-major [frames x 80] log-mel matrix at 100 frames/s.
struct MelSpectrogram {
  size_t frames = 0;
  std::vector<double> values;  // frames * kMelBands, row-major

  double& at(size_t t, size_t b) { return values[t * kMelBands + b]; }
  double at(size_t t, size_t b) const { return values[t * kMelBands + b]; }
};

// Number of analysis frames for n samples: 1 + floor((n - 400) / 160).
size_t StftFrameCount(size_t num_samples);

// One-sided complex spectra, [frames x 257] row-major. No center padding;
// inputs shorter than one window are a contract error.
std::vector<std::vector<Complex>> Stft(const Waveform& w);

// 80 triangular unit-peak filters on the HTK mel scale
// (mel = 2595 log10(1 + f/700)) spanning 0..8000 Hz; [80 x 257] row-major.
std::vector<double> MelFilterbank();

double HzToMel(double hz);
double MelToHz(double mel);

// |STFT|^2 -> filterbank -> log(. + 1e-10).
MelSpectrogram ComputeMelSpectrogram(const Waveform& w);

// Utterance-level z-score over all cells; if the standard deviation is
// below 1e-8 the output is all zeros.
MelSpectrogram ZScoreNormalize(const MelSpectrogram& m);

}  // namespace dsd

#endif  // DSD_DSP_FEATURES_H_
