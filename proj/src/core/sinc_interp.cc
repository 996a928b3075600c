// core/sinc_interp.cc

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

#include "core/sinc_interp.h"

#include <cmath>

namespace farfield {

double sinc_norm(double x) {
  if (std::abs(x) < 1e-12) return 1.0;
  const double px = M_PI * x;
  return std::sin(px) / px;
}

double bessel_i0(double x) {
  // Power series sum_k ((x/2)^k / k!)^2; converges quickly for |x| <= ~20.
  const double half = 0.5 * x;
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k < 64; ++k) {
    term *= (half / k) * (half / k);
    sum += term;
    if (term < 1e-18 * sum) break;
  }
  return sum;
}

double kaiser(double u, double beta) {
  if (u < -1.0 || u > 1.0) return 0.0;
  return bessel_i0(beta * std::sqrt(1.0 - u * u)) / bessel_i0(beta);
}

double sinc_interp_at(std::span<const double> x, double pos, int half_width,
                      double fc, double beta) {
  // Kernel widens by 1/fc when low-passed so the transition band stays put.
  const double extent = half_width / fc;
  const auto lo = static_cast<int64_t>(std::ceil(pos - extent));
  const auto hi = static_cast<int64_t>(std::floor(pos + extent));
  double acc = 0.0;
  for (int64_t k = lo; k <= hi; ++k) {
    if (k < 0 || k >= static_cast<int64_t>(x.size())) continue;
    const double t = pos - static_cast<double>(k);
    acc += x[k] * fc * sinc_norm(fc * t) * kaiser(t / extent, beta);
  }
  return acc;
}

std::vector<double> shift_fractional(std::span<const double> x, double advance,
                                     int half_width) {
  std::vector<double> out(x.size(), 0.0);
  const double rounded = std::round(advance);
  if (std::abs(advance - rounded) < 1e-9) {
    const auto shift = static_cast<int64_t>(rounded);
    for (int64_t n = 0; n < static_cast<int64_t>(x.size()); ++n) {
      const int64_t src = n + shift;
      if (src >= 0 && src < static_cast<int64_t>(x.size())) out[n] = x[src];
    }
    return out;
  }
  for (int64_t n = 0; n < static_cast<int64_t>(x.size()); ++n) {
    out[n] = sinc_interp_at(x, static_cast<double>(n) + advance, half_width,
                            1.0);
  }
  return out;
}

std::vector<double> resample_sinc(std::span<const double> x, double step,
                                  double offset, int64_t out_len,
                                  int half_width) {
  const double fc = step > 1.0 ? 1.0 / step : 1.0;
  std::vector<double> out(out_len);
  for (int64_t n = 0; n < out_len; ++n) {
    out[n] = sinc_interp_at(x, offset + step * static_cast<double>(n),
                            half_width, fc);
  }
  return out;
}

}  // namespace farfield
