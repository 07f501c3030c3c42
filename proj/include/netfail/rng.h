// Copyright 2026 The netfail Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NETFAIL_RNG_H_
#define NETFAIL_RNG_H_

#include <cmath>
#include <cstdint>
#include <random>

namespace netfail::rng {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Seed of the independent substream `index` under `master`. Trial i always
// sees the same stream regardless of trial count or worker count.
inline std::uint64_t substream_seed(std::uint64_t master, std::uint64_t index) {
  return splitmix64(splitmix64(master) ^ splitmix64(index + 0x632be59bd9b4e019ULL));
}

// Uniform in [0, 1) with 53 random bits.
inline double to_unit(std::uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

// Counter-based uniform draw: a pure function of (seed, counter).
inline double counter_uniform(std::uint64_t seed, std::uint64_t counter) {
  return to_unit(splitmix64(seed ^ splitmix64(counter)));
}

// Thin wrapper over mt19937_64. Distributions are implemented here rather than
// through <random> so streams are identical across standard libraries.
class Stream {
 public:
  explicit Stream(std::uint64_t seed) : engine_(seed) {}
  Stream(std::uint64_t master, std::uint64_t index)
      : engine_(substream_seed(master, index)) {}

  std::uint64_t next() { return engine_(); }
  double uniform() { return to_unit(engine_()); }
  // Uniform in (0, 1].
  double uniform_positive() { return 1.0 - uniform(); }
  bool bernoulli(double p) { return uniform() < p; }

  double exponential(double rate) { return -std::log(uniform_positive()) / rate; }

  // Uniform integer in [0, bound); bound > 0. Lemire's multiply-shift.
  std::uint64_t below(std::uint64_t bound) {
    __uint128_t m = static_cast<__uint128_t>(engine_()) * bound;
    auto low = static_cast<std::uint64_t>(m);
    if (low < bound) {
      const std::uint64_t threshold = -bound % bound;
      while (low < threshold) {
        m = static_cast<__uint128_t>(engine_()) * bound;
        low = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

  // Failures before the next success of a Bernoulli(p) sequence, 0 < p <= 1.
  double geometric_gap(double log1m_p) {
    return std::floor(std::log(uniform_positive()) / log1m_p);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace netfail::rng

#endif  // NETFAIL_RNG_H_
