// core/wav.cc

// Copyright 2026  Farfield Toolkit Authors

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

#include "core/wav.h"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>
#include <vector>

namespace farfield {

namespace {

constexpr uint16_t kFormatPcm = 0x0001;
constexpr uint16_t kFormatIeeeFloat = 0x0003;
constexpr uint16_t kFormatExtensible = 0xFFFE;

uint32_t read_u32(const unsigned char* p) {
  return static_cast<uint32_t>(p[0]) | (static_cast<uint32_t>(p[1]) << 8) |
         (static_cast<uint32_t>(p[2]) << 16) |
         (static_cast<uint32_t>(p[3]) << 24);
}

uint16_t read_u16(const unsigned char* p) {
  return static_cast<uint16_t>(p[0] | (p[1] << 8));
}

void append_u32(std::vector<unsigned char>& out, uint32_t v) {
  out.push_back(v & 0xFF);
  out.push_back((v >> 8) & 0xFF);
  out.push_back((v >> 16) & 0xFF);
  out.push_back((v >> 24) & 0xFF);
}

void append_u16(std::vector<unsigned char>& out, uint16_t v) {
  out.push_back(v & 0xFF);
  out.push_back((v >> 8) & 0xFF);
}

void append_tag(std::vector<unsigned char>& out, const char* tag) {
  out.insert(out.end(), tag, tag + 4);
}

struct FmtChunk {
  uint16_t format_tag = 0;
  uint16_t channels = 0;
  uint32_t sample_rate = 0;
  uint16_t block_align = 0;
  uint16_t bits_per_sample = 0;
};

}  // namespace

AudioBuffer read_wav(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("read_wav: cannot open " + path);
  std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(in)),
                                   std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError("read_wav: read failure on " + path);

  if (bytes.size() < 12 || std::memcmp(bytes.data(), "RIFF", 4) != 0 ||
      std::memcmp(bytes.data() + 8, "WAVE", 4) != 0) {
    throw FormatError("read_wav: not a RIFF/WAVE file: " + path);
  }

  FmtChunk fmt;
  bool have_fmt = false;
  const unsigned char* data_ptr = nullptr;
  uint32_t data_size = 0;
  bool have_data = false;

  size_t pos = 12;
  while (pos + 8 <= bytes.size()) {
    const unsigned char* hdr = bytes.data() + pos;
    const uint32_t chunk_size = read_u32(hdr + 4);
    const size_t body = pos + 8;
    if (body + chunk_size > bytes.size())
      throw FormatError("read_wav: truncated chunk in " + path);
    if (std::memcmp(hdr, "fmt ", 4) == 0) {
      if (chunk_size < 16)
        throw FormatError("read_wav: fmt chunk too small in " + path);
      const unsigned char* p = bytes.data() + body;
      fmt.format_tag = read_u16(p);
      fmt.channels = read_u16(p + 2);
      fmt.sample_rate = read_u32(p + 4);
      fmt.block_align = read_u16(p + 12);
      fmt.bits_per_sample = read_u16(p + 14);
      if (fmt.format_tag == kFormatExtensible) {
        if (chunk_size < 40)
          throw FormatError("read_wav: extensible fmt chunk too small");
        // First two bytes of the SubFormat GUID carry the real format tag.
        fmt.format_tag = read_u16(p + 24);
      }
      have_fmt = true;
    } else if (std::memcmp(hdr, "data", 4) == 0) {
      data_ptr = bytes.data() + body;
      data_size = chunk_size;
      have_data = true;
    }
    pos = body + chunk_size + (chunk_size & 1);  // chunks are word-aligned
  }

  if (!have_fmt) throw FormatError("read_wav: missing fmt chunk in " + path);
  if (!have_data) throw FormatError("read_wav: missing data chunk in " + path);
  if (fmt.channels == 0 || fmt.sample_rate == 0)
    throw FormatError("read_wav: zero channels or sample rate in " + path);

  const bool pcm16 = fmt.format_tag == kFormatPcm && fmt.bits_per_sample == 16;
  const bool pcm24 = fmt.format_tag == kFormatPcm && fmt.bits_per_sample == 24;
  const bool f32 =
      fmt.format_tag == kFormatIeeeFloat && fmt.bits_per_sample == 32;
  if (!pcm16 && !pcm24 && !f32) {
    throw UnsupportedFormatError(
        "read_wav: unsupported encoding (format tag " +
        std::to_string(fmt.format_tag) + ", " +
        std::to_string(fmt.bits_per_sample) + " bits) in " + path);
  }

  const int bytes_per_sample = fmt.bits_per_sample / 8;
  const uint32_t frame_size =
      static_cast<uint32_t>(bytes_per_sample) * fmt.channels;
  if (fmt.block_align != 0 && fmt.block_align != frame_size)
    throw FormatError("read_wav: inconsistent block alignment in " + path);
  if (data_size % frame_size != 0)
    throw FormatError("read_wav: data chunk not a whole number of frames");

  const int64_t frames = data_size / frame_size;
  AudioBuffer buffer(fmt.channels, frames, static_cast<int>(fmt.sample_rate));
  for (int64_t i = 0; i < frames; ++i) {
    for (int c = 0; c < fmt.channels; ++c) {
      const unsigned char* s =
          data_ptr + i * frame_size + c * bytes_per_sample;
      double value = 0.0;
      if (pcm16) {
        int16_t v = static_cast<int16_t>(s[0] | (s[1] << 8));
        value = v / 32768.0;
      } else if (pcm24) {
        int32_t v = s[0] | (s[1] << 8) | (s[2] << 16);
        if (v & 0x800000) v |= ~0xFFFFFF;  // sign extend
        value = v / 8388608.0;
      } else {
        uint32_t u = read_u32(s);
        float f;
        std::memcpy(&f, &u, sizeof(f));
        value = f;
      }
      buffer.at(c, i) = value;
    }
  }
  buffer.check_finite("read_wav");
  return buffer;
}

void write_wav(const AudioBuffer& buffer, const std::string& path,
               WavEncoding encoding) {
  buffer.check_finite("write_wav");
  const int channels = buffer.channels();
  const int64_t frames = buffer.frames();

  int bytes_per_sample = 0;
  uint16_t format_tag = kFormatPcm;
  switch (encoding) {
    case WavEncoding::kPcm16:
      bytes_per_sample = 2;
      break;
    case WavEncoding::kPcm24:
      bytes_per_sample = 3;
      break;
    case WavEncoding::kFloat32:
      bytes_per_sample = 4;
      format_tag = kFormatIeeeFloat;
      break;
  }
  const uint32_t frame_size = bytes_per_sample * channels;
  const uint32_t data_size = static_cast<uint32_t>(frame_size * frames);

  std::vector<unsigned char> out;
  out.reserve(64 + data_size);
  append_tag(out, "RIFF");
  append_u32(out, 0);  // patched below
  append_tag(out, "WAVE");
  append_tag(out, "fmt ");
  append_u32(out, 16);
  append_u16(out, format_tag);
  append_u16(out, static_cast<uint16_t>(channels));
  append_u32(out, static_cast<uint32_t>(buffer.sample_rate()));
  append_u32(out, static_cast<uint32_t>(buffer.sample_rate()) * frame_size);
  append_u16(out, static_cast<uint16_t>(frame_size));
  append_u16(out, static_cast<uint16_t>(bytes_per_sample * 8));
  if (encoding == WavEncoding::kFloat32) {
    // fact chunk is required for non-PCM formats.
    append_tag(out, "fact");
    append_u32(out, 4);
    append_u32(out, static_cast<uint32_t>(frames));
  }
  append_tag(out, "data");
  append_u32(out, data_size);

  for (int64_t i = 0; i < frames; ++i) {
    for (int c = 0; c < channels; ++c) {
      const double x = buffer.at(c, i);
      switch (encoding) {
        case WavEncoding::kPcm16: {
          long v = std::lround(x * 32768.0);
          v = std::clamp(v, -32768L, 32767L);
          append_u16(out, static_cast<uint16_t>(static_cast<int16_t>(v)));
          break;
        }
        case WavEncoding::kPcm24: {
          long v = std::lround(x * 8388608.0);
          v = std::clamp(v, -8388608L, 8388607L);
          const auto u = static_cast<uint32_t>(static_cast<int32_t>(v));
          out.push_back(u & 0xFF);
          out.push_back((u >> 8) & 0xFF);
          out.push_back((u >> 16) & 0xFF);
          break;
        }
        case WavEncoding::kFloat32: {
          const float f = static_cast<float>(x);
          uint32_t u;
          std::memcpy(&u, &f, sizeof(u));
          append_u32(out, u);
          break;
        }
      }
    }
  }
  if (out.size() & 1) out.push_back(0);  // pad data chunk to even size

  const uint32_t riff_size = static_cast<uint32_t>(out.size()) - 8;
  out[4] = riff_size & 0xFF;
  out[5] = (riff_size >> 8) & 0xFF;
  out[6] = (riff_size >> 16) & 0xFF;
  out[7] = (riff_size >> 24) & 0xFF;

  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw IoError("write_wav: cannot open " + path + " for writing");
  os.write(reinterpret_cast<const char*>(out.data()),
           static_cast<std::streamsize>(out.size()));
  if (!os) throw IoError("write_wav: write failure on " + path);
}

}  // namespace farfield
