// core/stft.h

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

#ifndef FARFIELD_CORE_STFT_H_
#define FARFIELD_CORE_STFT_H_

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "core/audio_buffer.h"

namespace farfield {

enum class WindowKind { kHann, kSqrtHann, kRect };

/// Analysis/synthesis parameters. The supported configurations satisfy
/// constant-overlap-add: Hann-family windows are periodic and require
/// window_length % hop == 0 with hop <= window_length / 2.
struct StftConfig {
  int window_length = 512;
  int hop = 128;
  WindowKind window = WindowKind::kHann;
  int fft_size = 512;

  int bins() const { return fft_size / 2 + 1; }
  /// Zero samples conceptually prepended so the first window tapers in;
  /// frame t starts at original sample t * hop - pad_front().
  int pad_front() const { return window_length - hop; }

  void validate() const;
};

/// Complex time-frequency representation. Values are laid out per channel,
/// per bin, with the frame index contiguous, so one bin's time series is a
/// single span.
class Spectrogram {
 public:
  Spectrogram() = default;
  Spectrogram(int channels, int bins, int64_t frames)
      : channels_(channels), bins_(bins), frames_(frames),
        values_(static_cast<size_t>(channels) * bins * frames) {}

  int channels() const { return channels_; }
  int bins() const { return bins_; }
  int64_t frames() const { return frames_; }

  std::complex<double>& at(int c, int bin, int64_t t) {
    return values_[(static_cast<size_t>(c) * bins_ + bin) * frames_ + t];
  }
  std::complex<double> at(int c, int bin, int64_t t) const {
    return values_[(static_cast<size_t>(c) * bins_ + bin) * frames_ + t];
  }
  std::span<std::complex<double>> bin_series(int c, int bin) {
    return {values_.data() + (static_cast<size_t>(c) * bins_ + bin) * frames_,
            static_cast<size_t>(frames_)};
  }
  std::span<const std::complex<double>> bin_series(int c, int bin) const {
    return {values_.data() + (static_cast<size_t>(c) * bins_ + bin) * frames_,
            static_cast<size_t>(frames_)};
  }

 private:
  int channels_ = 0;
  int bins_ = 0;
  int64_t frames_ = 0;
  std::vector<std::complex<double>> values_;
};

/// The analysis window of a config, window_length samples.
std::vector<double> make_window(const StftConfig& config);

/// Number of analysis frames for a signal of `frames` samples.
int64_t stft_frame_count(const StftConfig& config, int64_t frames);

/// Windowed short-time transform. Edges are zero-padded (pad_front() in
/// front, enough at the back) so every input sample is fully covered.
Spectrogram stft(const AudioBuffer& buffer, const StftConfig& config);

/// Weighted overlap-add inverse, normalized by the accumulated squared
/// window; output truncated or zero-padded to `length` frames.
AudioBuffer istft(const Spectrogram& spec, const StftConfig& config,
                  int64_t length, int sample_rate);

}  // namespace farfield

#endif  // FARFIELD_CORE_STFT_H_
