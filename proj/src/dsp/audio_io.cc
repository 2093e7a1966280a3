// dsp/audio_io.cc

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

#include "dsp/audio_io.h"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>

#include "util/common.h"

namespace dsd {

namespace {

uint32_t ReadU32(const unsigned char* p) {
  return static_cast<uint32_t>(p[0]) | (static_cast<uint32_t>(p[1]) << 8) |
         (static_cast<uint32_t>(p[2]) << 16) |
         (static_cast<uint32_t>(p[3]) << 24);
}

uint16_t ReadU16(const unsigned char* p) {
  return static_cast<uint16_t>(p[0] | (p[1] << 8));
}

void PutU32(std::string* s, uint32_t v) {
  s->push_back(static_cast<char>(v & 0xff));
  s->push_back(static_cast<char>((v >> 8) & 0xff));
  s->push_back(static_cast<char>((v >> 16) & 0xff));
  s->push_back(static_cast<char>((v >> 24) & 0xff));
}

void PutU16(std::string* s, uint16_t v) {
  s->push_back(static_cast<char>(v & 0xff));
  s->push_back(static_cast<char>((v >> 8) & 0xff));
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) RuntimeFail("cannot open file: ", path);
  std::string bytes((std::istreambuf_iterator<char>(in)),
                    std::istreambuf_iterator<char>());
  return bytes;
}

void WriteFileAtomic(const std::string& path, const std::string& bytes) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) RuntimeFail("cannot open file for writing: ", tmp);
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) RuntimeFail("write failed: ", tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    RuntimeFail("rename failed: ", tmp, " -> ", path);
}

}  // namespace

Waveform ReadWav(const std::string& path) {
  const std::string bytes = ReadFile(path);
  const auto* p = reinterpret_cast<const unsigned char*>(bytes.data());
  DSD_REQUIRE(bytes.size() >= 44 && std::memcmp(p, "RIFF", 4) == 0 &&
                  std::memcmp(p + 8, "WAVE", 4) == 0,
              path, ": not a RIFF/WAVE file");

  size_t pos = 12;
  bool have_fmt = false;
  uint16_t format = 0, channels = 0, bits = 0;
  uint32_t rate = 0;
  Waveform w;
  bool have_data = false;
  while (pos + 8 <= bytes.size()) {
    const char* id = bytes.data() + pos;
    const uint32_t size = ReadU32(p + pos + 4);
    pos += 8;
    if (pos + size > bytes.size()) RuntimeFail(path, ": truncated chunk");
    if (std::memcmp(id, "fmt ", 4) == 0) {
      DSD_REQUIRE(size >= 16, path, ": malformed fmt chunk");
      format = ReadU16(p + pos);
      channels = ReadU16(p + pos + 2);
      rate = ReadU32(p + pos + 4);
      bits = ReadU16(p + pos + 14);
      have_fmt = true;
    } else if (std::memcmp(id, "data", 4) == 0) {
      DSD_REQUIRE(have_fmt, path, ": data chunk precedes fmt chunk");
      DSD_REQUIRE(format == 1, path, ": unsupported WAV encoding (format tag ",
                  format, "); only PCM (1) is supported");
      DSD_REQUIRE(channels == 1, path, ": expected mono audio, got ", channels,
                  " channels");
      DSD_REQUIRE(bits == 16, path, ": expected 16-bit samples, got ", bits);
      DSD_REQUIRE(rate == kSampleRate, path, ": expected ", kSampleRate,
                  " Hz, got ", rate);
      const size_t n = size / 2;
      w.samples.resize(n);
      for (size_t i = 0; i < n; ++i) {
        const int16_t s = static_cast<int16_t>(
            static_cast<uint16_t>(p[pos + 2 * i] | (p[pos + 2 * i + 1] << 8)));
        w.samples[i] = static_cast<double>(s) / 32768.0;
      }
      have_data = true;
    }
    pos += size + (size & 1);  // chunks are word-aligned
  }
  DSD_REQUIRE(have_data, path, ": no data chunk found");
  w.sample_rate = kSampleRate;
  return w;
}

void WriteWav(const std::string& path, const Waveform& w) {
  DSD_REQUIRE(w.sample_rate == kSampleRate, "wav write: sample rate must be ",
              kSampleRate);
  std::string out;
  const uint32_t data_size = static_cast<uint32_t>(w.samples.size() * 2);
  out.reserve(44 + data_size);
  out.append("RIFF");
  PutU32(&out, 36 + data_size);
  out.append("WAVE");
  out.append("fmt ");
  PutU32(&out, 16);
  PutU16(&out, 1);   // PCM
  PutU16(&out, 1);   // mono
  PutU32(&out, static_cast<uint32_t>(kSampleRate));
  PutU32(&out, static_cast<uint32_t>(kSampleRate * 2));  // byte rate
  PutU16(&out, 2);   // block align
  PutU16(&out, 16);  // bits
  out.append("data");
  PutU32(&out, data_size);
  for (double v : w.samples) {
    double c = std::clamp(v, -1.0, 32767.0 / 32768.0);
    const int16_t s = static_cast<int16_t>(std::lrint(c * 32768.0));
    PutU16(&out, static_cast<uint16_t>(s));
  }
  WriteFileAtomic(path, out);
}

MelSpectrogram ReadMelf(const std::string& path) {
  const std::string bytes = ReadFile(path);
  const auto* p = reinterpret_cast<const unsigned char*>(bytes.data());
  DSD_REQUIRE(bytes.size() >= 12 && std::memcmp(p, "MELF", 4) == 0, path,
              ": bad MELF magic");
  const uint32_t frames = ReadU32(p + 4);
  const uint32_t bands = ReadU32(p + 8);
  DSD_REQUIRE(bands == kMelBands, path, ": MELF band count ", bands,
              " != ", kMelBands);
  const size_t need = 12 + static_cast<size_t>(frames) * bands * 4;
  DSD_REQUIRE(bytes.size() == need, path, ": MELF payload size mismatch (",
              bytes.size(), " bytes, expected ", need, ")");
  MelSpectrogram m;
  m.frames = frames;
  m.values.resize(static_cast<size_t>(frames) * bands);
  for (size_t i = 0; i < m.values.size(); ++i) {
    uint32_t u = ReadU32(p + 12 + 4 * i);
    float f;
    std::memcpy(&f, &u, 4);
    m.values[i] = static_cast<double>(f);
  }
  return m;
}

void WriteMelf(const std::string& path, const MelSpectrogram& m) {
  std::string out;
  out.reserve(12 + m.values.size() * 4);
  out.append("MELF");
  PutU32(&out, static_cast<uint32_t>(m.frames));
  PutU32(&out, static_cast<uint32_t>(kMelBands));
  for (double v : m.values) {
    const float f = static_cast<float>(v);
    uint32_t u;
    std::memcpy(&u, &f, 4);
    PutU32(&out, u);
  }
  WriteFileAtomic(path, out);
}

}  // namespace dsd
