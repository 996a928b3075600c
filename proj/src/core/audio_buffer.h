// core/audio_buffer.h

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

#ifndef FARFIELD_CORE_AUDIO_BUFFER_H_
#define FARFIELD_CORE_AUDIO_BUFFER_H_

#include <cstdint>
#include <span>
#include <vector>

#include "core/error.h"

namespace farfield {

/// Multichannel sampled audio. Samples are stored channel-major (each
/// channel contiguous) as 64-bit reals with nominal range [-1, 1].
class AudioBuffer {
 public:
  AudioBuffer() = default;

  AudioBuffer(int channels, int64_t frames, int sample_rate)
      : channels_(channels), frames_(frames), sample_rate_(sample_rate),
        samples_(static_cast<size_t>(channels) * frames, 0.0) {
    if (channels <= 0) throw ConfigError("AudioBuffer: channels must be > 0");
    if (frames < 0) throw ConfigError("AudioBuffer: frames must be >= 0");
    if (sample_rate <= 0)
      throw ConfigError("AudioBuffer: sample_rate must be > 0");
  }

  int channels() const { return channels_; }
  int64_t frames() const { return frames_; }
  int sample_rate() const { return sample_rate_; }
  double duration_seconds() const {
    return static_cast<double>(frames_) / sample_rate_;
  }

  std::span<double> channel(int c) {
    return {samples_.data() + static_cast<size_t>(c) * frames_,
            static_cast<size_t>(frames_)};
  }
  std::span<const double> channel(int c) const {
    return {samples_.data() + static_cast<size_t>(c) * frames_,
            static_cast<size_t>(frames_)};
  }

  double& at(int c, int64_t frame) {
    return samples_[static_cast<size_t>(c) * frames_ + frame];
  }
  double at(int c, int64_t frame) const {
    return samples_[static_cast<size_t>(c) * frames_ + frame];
  }

  /// Single-channel view of one channel, copied into a new buffer.
  AudioBuffer mono(int c) const {
    AudioBuffer out(1, frames_, sample_rate_);
    auto src = channel(c);
    std::copy(src.begin(), src.end(), out.channel(0).begin());
    return out;
  }

  /// Throws DataError if any sample is non-finite.
  void check_finite(const char* context) const;

  /// RMS over all channels and frames; 0 for an empty buffer.
  double rms() const;

  /// Mean power of one channel over the full duration.
  double mean_power(int c) const;

  bool operator==(const AudioBuffer& other) const = default;

 private:
  int channels_ = 0;
  int64_t frames_ = 0;
  int sample_rate_ = 0;
  std::vector<double> samples_;
};

}  // namespace farfield

#endif  // FARFIELD_CORE_AUDIO_BUFFER_H_
