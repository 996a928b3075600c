// core/wav.h

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

#ifndef FARFIELD_CORE_WAV_H_
#define FARFIELD_CORE_WAV_H_

#include <string>

#include "core/audio_buffer.h"

namespace farfield {

enum class WavEncoding { kPcm16, kPcm24, kFloat32 };

/// Reads a RIFF/WAVE file. Supported encodings: PCM 16-bit, PCM 24-bit and
/// IEEE float32 (plain or WAVE_FORMAT_EXTENSIBLE). Integer samples are
/// scaled to [-1, 1) by 2^(bits-1).
AudioBuffer read_wav(const std::string& path);

/// Writes `buffer` in the given encoding. PCM encodings clip to
/// [-1, 1 - lsb] and round to nearest; float32 stores the samples narrowed
/// to single precision.
void write_wav(const AudioBuffer& buffer, const std::string& path,
               WavEncoding encoding);

}  // namespace farfield

#endif  // FARFIELD_CORE_WAV_H_
