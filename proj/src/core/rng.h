// core/rng.h

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

#ifndef FARFIELD_CORE_RNG_H_
#define FARFIELD_CORE_RNG_H_

#include <cstdint>
#include <random>
#include <string>
#include <string_view>

namespace farfield {

/// Deterministic random stream identified by (master_seed, stream_id).
/// Identical identities yield identical draw sequences on any platform:
/// the engine is mt19937_64 (sequence fixed by the standard) and all
/// distributions are implemented here rather than taken from <random>,
/// whose distribution algorithms are implementation-defined.
class SeededRng {
 public:
  SeededRng(uint64_t master_seed, std::string_view stream_id);

  uint64_t master_seed() const { return master_seed_; }
  const std::string& stream_id() const { return stream_id_; }

  /// Child stream with id "<stream_id>/<name>", independent of this one.
  SeededRng derive(std::string_view name) const;

  uint64_t next_u64() { return engine_(); }

  /// Uniform on [0, 1) with 53-bit resolution.
  double uniform01();

  /// Uniform on [lo, hi).
  double uniform(double lo, double hi);

  /// Uniform on {lo, ..., hi} inclusive.
  int64_t uniform_int(int64_t lo, int64_t hi);

  /// Standard normal via Box-Muller (one value per two uniform draws, no
  /// cached state, so copies of the stream stay in lockstep).
  double gaussian();
  double gaussian(double mean, double stddev);

 private:
  uint64_t master_seed_;
  std::string stream_id_;
  std::mt19937_64 engine_;
};

/// FNV-1a 64-bit over arbitrary bytes; stable across platforms.
uint64_t fnv1a64(const void* data, size_t len, uint64_t seed = 0xcbf29ce484222325ULL);

}  // namespace farfield

#endif  // FARFIELD_CORE_RNG_H_
