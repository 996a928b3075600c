// core/fft.cc

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

#include "core/fft.h"

#include <fftw3.h>

#include <mutex>
#include <unordered_map>

#include "core/error.h"

namespace farfield {

namespace {

// FFTW plan creation is not thread-safe; executing distinct plans (or the
// same plan via the new-array interface) is. Plans are created with
// FFTW_UNALIGNED so they apply to any array.
class PlanCache {
 public:
  static PlanCache& instance() {
    static PlanCache cache;
    return cache;
  }

  fftw_plan r2c(size_t n) {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = r2c_.find(n);
    if (it != r2c_.end()) return it->second;
    std::vector<double> in(n);
    std::vector<std::complex<double>> out(n / 2 + 1);
    fftw_plan p = fftw_plan_dft_r2c_1d(
        static_cast<int>(n), in.data(),
        reinterpret_cast<fftw_complex*>(out.data()),
        FFTW_ESTIMATE | FFTW_UNALIGNED);
    r2c_.emplace(n, p);
    return p;
  }

  fftw_plan c2r(size_t n) {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = c2r_.find(n);
    if (it != c2r_.end()) return it->second;
    std::vector<std::complex<double>> in(n / 2 + 1);
    std::vector<double> out(n);
    fftw_plan p = fftw_plan_dft_c2r_1d(
        static_cast<int>(n), reinterpret_cast<fftw_complex*>(in.data()),
        out.data(), FFTW_ESTIMATE | FFTW_UNALIGNED);
    c2r_.emplace(n, p);
    return p;
  }

  fftw_plan c2c(size_t n, int sign) {
    std::lock_guard<std::mutex> lock(mu_);
    auto& map = sign == FFTW_FORWARD ? fwd_ : bwd_;
    auto it = map.find(n);
    if (it != map.end()) return it->second;
    std::vector<std::complex<double>> buf(n);
    fftw_plan p = fftw_plan_dft_1d(
        static_cast<int>(n), reinterpret_cast<fftw_complex*>(buf.data()),
        reinterpret_cast<fftw_complex*>(buf.data()), sign,
        FFTW_ESTIMATE | FFTW_UNALIGNED);
    map.emplace(n, p);
    return p;
  }

 private:
  std::mutex mu_;
  std::unordered_map<size_t, fftw_plan> r2c_, c2r_, fwd_, bwd_;
};

}  // namespace

std::vector<std::complex<double>> rfft(std::span<const double> input) {
  const size_t n = input.size();
  if (n == 0) throw ConfigError("rfft: empty input");
  std::vector<double> in(input.begin(), input.end());
  std::vector<std::complex<double>> out(n / 2 + 1);
  fftw_execute_dft_r2c(PlanCache::instance().r2c(n), in.data(),
                       reinterpret_cast<fftw_complex*>(out.data()));
  return out;
}

std::vector<double> irfft(std::span<const std::complex<double>> bins,
                          size_t n) {
  if (n == 0) throw ConfigError("irfft: empty output length");
  if (bins.size() != n / 2 + 1)
    throw DataError("irfft: bin count does not match output length");
  // c2r destroys its input, so work on a copy.
  std::vector<std::complex<double>> in(bins.begin(), bins.end());
  std::vector<double> out(n);
  fftw_execute_dft_c2r(PlanCache::instance().c2r(n),
                       reinterpret_cast<fftw_complex*>(in.data()), out.data());
  const double scale = 1.0 / static_cast<double>(n);
  for (double& v : out) v *= scale;
  return out;
}

void fft_inplace(std::span<std::complex<double>> data) {
  if (data.empty()) throw ConfigError("fft_inplace: empty input");
  auto* p = reinterpret_cast<fftw_complex*>(data.data());
  fftw_execute_dft(PlanCache::instance().c2c(data.size(), FFTW_FORWARD), p, p);
}

void ifft_inplace(std::span<std::complex<double>> data) {
  if (data.empty()) throw ConfigError("ifft_inplace: empty input");
  auto* p = reinterpret_cast<fftw_complex*>(data.data());
  fftw_execute_dft(PlanCache::instance().c2c(data.size(), FFTW_BACKWARD), p, p);
  const double scale = 1.0 / static_cast<double>(data.size());
  for (auto& v : data) v *= scale;
}

size_t next_pow2(size_t n) {
  size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

}  // namespace farfield
