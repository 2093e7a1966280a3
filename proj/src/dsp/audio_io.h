// dsp/audio_io.h

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

#ifndef DSD_DSP_AUDIO_IO_H_
#define DSD_DSP_AUDIO_IO_H_

#include <string>

#include "dsp/features.h"

namespace dsd {

// Single-channel 16-bit signed little-endian PCM at 16 kHz; anything else is
// rejected with a descriptive error.
Waveform ReadWav(const std::string& path);
void WriteWav(const std::string& path, const Waveform& w);

// "MELF" feature cache: magic `MELF`, u32-le frame count, u32-le band count
// (80), then frames*80 little-endian 32-bit floats row-major.
MelSpectrogram ReadMelf(const std::string& path);
void WriteMelf(const std::string& path, const MelSpectrogram& m);

}  // namespace dsd

#endif  // DSD_DSP_AUDIO_IO_H_
