// core/stft.cc

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

#include "core/stft.h"

#include <algorithm>
#include <cmath>

#include "core/fft.h"

namespace farfield {

void StftConfig::validate() const {
  if (window_length <= 0) throw ConfigError("stft: window_length must be > 0");
  if (hop <= 0) throw ConfigError("stft: hop must be > 0");
  if (hop > window_length)
    throw ConfigError("stft: hop must not exceed window_length");
  if (fft_size < window_length)
    throw ConfigError("stft: fft_size must be >= window_length");
  if (window == WindowKind::kHann || window == WindowKind::kSqrtHann) {
    if (window_length % hop != 0 || hop > window_length / 2) {
      throw ConfigError(
          "stft: Hann windows require window_length % hop == 0 and "
          "hop <= window_length / 2 for constant overlap-add");
    }
  }
}

std::vector<double> make_window(const StftConfig& config) {
  std::vector<double> w(config.window_length);
  switch (config.window) {
    case WindowKind::kRect:
      std::fill(w.begin(), w.end(), 1.0);
      break;
    case WindowKind::kHann:
    case WindowKind::kSqrtHann:
      for (int n = 0; n < config.window_length; ++n) {
        // Periodic Hann.
        double v = 0.5 - 0.5 * std::cos(2.0 * M_PI * n / config.window_length);
        w[n] = config.window == WindowKind::kHann ? v : std::sqrt(v);
      }
      break;
  }
  return w;
}

int64_t stft_frame_count(const StftConfig& config, int64_t frames) {
  if (frames <= 0) return 0;
  const int64_t last_padded = config.pad_front() + frames - 1;
  return last_padded / config.hop + 1;
}

Spectrogram stft(const AudioBuffer& buffer, const StftConfig& config) {
  config.validate();
  const int L = config.window_length;
  const int H = config.hop;
  const int N = config.fft_size;
  const int64_t T = stft_frame_count(config, buffer.frames());
  const std::vector<double> window = make_window(config);

  Spectrogram spec(buffer.channels(), config.bins(), T);
  std::vector<double> frame(N);
  for (int c = 0; c < buffer.channels(); ++c) {
    auto samples = buffer.channel(c);
    for (int64_t t = 0; t < T; ++t) {
      const int64_t start = t * H - config.pad_front();
      std::fill(frame.begin(), frame.end(), 0.0);
      for (int n = 0; n < L; ++n) {
        const int64_t idx = start + n;
        if (idx >= 0 && idx < buffer.frames()) {
          frame[n] = window[n] * samples[idx];
        }
      }
      auto bins = rfft(frame);
      for (int k = 0; k < config.bins(); ++k) spec.at(c, k, t) = bins[k];
    }
  }
  return spec;
}

AudioBuffer istft(const Spectrogram& spec, const StftConfig& config,
                  int64_t length, int sample_rate) {
  config.validate();
  if (spec.bins() != config.bins())
    throw DataError("istft: spectrogram bin count does not match config");
  const int L = config.window_length;
  const int H = config.hop;
  const int N = config.fft_size;
  const int64_t T = spec.frames();
  const std::vector<double> window = make_window(config);

  AudioBuffer out(std::max(spec.channels(), 1), length, sample_rate);
  if (T == 0 || length == 0) return out;

  const int64_t padded_len = (T - 1) * H + L;
  std::vector<double> acc(padded_len);
  std::vector<double> norm(padded_len);
  std::vector<std::complex<double>> bins(config.bins());

  for (int c = 0; c < spec.channels(); ++c) {
    std::fill(acc.begin(), acc.end(), 0.0);
    std::fill(norm.begin(), norm.end(), 0.0);
    for (int64_t t = 0; t < T; ++t) {
      for (int k = 0; k < config.bins(); ++k) bins[k] = spec.at(c, k, t);
      const std::vector<double> frame = irfft(bins, N);
      const int64_t start = t * H;
      for (int n = 0; n < L; ++n) {
        acc[start + n] += window[n] * frame[n];
        norm[start + n] += window[n] * window[n];
      }
    }
    auto dst = out.channel(c);
    for (int64_t i = 0; i < length; ++i) {
      const int64_t p = i + config.pad_front();
      if (p < padded_len && norm[p] > 1e-12) dst[i] = acc[p] / norm[p];
    }
  }
  return out;
}

}  // namespace farfield
