// core/audio_buffer.cc

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

#include "core/audio_buffer.h"

#include <cmath>
#include <string>

namespace farfield {

void AudioBuffer::check_finite(const char* context) const {
  for (double s : samples_) {
    if (!std::isfinite(s)) {
      throw DataError(std::string(context) + ": non-finite sample in buffer");
    }
  }
}

double AudioBuffer::rms() const {
  if (samples_.empty()) return 0.0;
  double acc = 0.0;
  for (double s : samples_) acc += s * s;
  return std::sqrt(acc / samples_.size());
}

double AudioBuffer::mean_power(int c) const {
  if (frames_ == 0) return 0.0;
  double acc = 0.0;
  for (double s : channel(c)) acc += s * s;
  return acc / frames_;
}

}  // namespace farfield
