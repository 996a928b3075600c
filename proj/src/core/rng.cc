// core/rng.cc

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

#include "core/rng.h"

#include <cmath>

#include "core/error.h"

namespace farfield {

uint64_t fnv1a64(const void* data, size_t len, uint64_t seed) {
  const auto* p = static_cast<const unsigned char*>(data);
  uint64_t h = seed;
  for (size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ULL;
  }
  return h;
}

namespace {

uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

uint64_t stream_seed(uint64_t master_seed, std::string_view stream_id) {
  unsigned char master_bytes[8];
  for (int i = 0; i < 8; ++i) {
    master_bytes[i] = static_cast<unsigned char>(master_seed >> (8 * i));
  }
  uint64_t h = fnv1a64(master_bytes, sizeof(master_bytes));
  h = fnv1a64(stream_id.data(), stream_id.size(), h);
  return splitmix64(h);
}

}  // namespace

SeededRng::SeededRng(uint64_t master_seed, std::string_view stream_id)
    : master_seed_(master_seed), stream_id_(stream_id),
      engine_(stream_seed(master_seed, stream_id)) {}

SeededRng SeededRng::derive(std::string_view name) const {
  return SeededRng(master_seed_, stream_id_ + "/" + std::string(name));
}

double SeededRng::uniform01() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double SeededRng::uniform(double lo, double hi) {
  return lo + (hi - lo) * uniform01();
}

int64_t SeededRng::uniform_int(int64_t lo, int64_t hi) {
  if (lo > hi) throw ConfigError("uniform_int: empty range");
  const uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<int64_t>(next_u64());  // full 64-bit range
  // Rejection sampling to avoid modulo bias.
  const uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  uint64_t v;
  do {
    v = next_u64();
  } while (v >= limit);
  return lo + static_cast<int64_t>(v % span);
}

double SeededRng::gaussian() {
  // Box-Muller; u1 kept away from 0 so the log is finite.
  double u1 = uniform01();
  double u2 = uniform01();
  if (u1 <= 0.0) u1 = 0x1.0p-53;
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

double SeededRng::gaussian(double mean, double stddev) {
  return mean + stddev * gaussian();
}

}  // namespace farfield
