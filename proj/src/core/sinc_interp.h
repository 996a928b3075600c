// core/sinc_interp.h

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

#ifndef FARFIELD_CORE_SINC_INTERP_H_
#define FARFIELD_CORE_SINC_INTERP_H_

#include <cstdint>
#include <span>
#include <vector>

namespace farfield {

/// sin(pi x) / (pi x), 1 at x = 0.
double sinc_norm(double x);

/// Zeroth-order modified Bessel function of the first kind (power series).
double bessel_i0(double x);

/// Kaiser window value for u in [-1, 1]; 0 outside.
double kaiser(double u, double beta);

/// Band-limited evaluation of x at fractional position `pos` (samples).
/// Kaiser-windowed sinc, `half_width` taps each side, cutoff `fc` relative
/// to Nyquist (1.0 = full band). Out-of-range taps read as zero.
double sinc_interp_at(std::span<const double> x, double pos, int half_width,
                      double fc, double beta = 8.0);

/// y[n] = x(n + advance) for n in [0, x.size()): fractional shift of a whole
/// signal. Integral advances are exact copies.
std::vector<double> shift_fractional(std::span<const double> x, double advance,
                                     int half_width = 32);

/// y[n] = x(offset + n * step) for n in [0, out_len): band-limited
/// resampling with anti-alias cutoff min(1, 1/step).
std::vector<double> resample_sinc(std::span<const double> x, double step,
                                  double offset, int64_t out_len,
                                  int half_width = 32);

}  // namespace farfield

#endif  // FARFIELD_CORE_SINC_INTERP_H_
