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

#ifndef NETFAIL_FRONTAL_H_
#define NETFAIL_FRONTAL_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "netfail/matrix.h"
#include "netfail/parallel.h"

namespace netfail::frontal {

// Inputs X (r elements) and Y (k elements) wired at random into a frontal
// layer A of N elements. x_links is N x r, y_links is N x k; every entry is an
// independent Bernoulli(p).
struct FrontalSystem {
  std::size_t r = 0;
  std::size_t k = 0;
  std::size_t n = 0;
  double p = 0.0;
  BitMatrix x_links;
  BitMatrix y_links;
};

// Probability that one frontal element links to at least one element of X and
// at least one of Y: (1 - (1-p)^r)(1 - (1-p)^k), evaluated through
// log1p/expm1 so it keeps full precision for tiny p.
double connection_probability(double p, std::size_t r, std::size_t k);

// Leading term r k p^2, valid as p -> 0.
double connection_probability_approx(double p, std::size_t r, std::size_t k);

// (N r)^{-1/2}, clamped to 1. With this choice about k frontal elements link
// X to Y.
double default_p(std::size_t n, std::size_t r);

struct MonteCarloStats {
  std::size_t trials = 0;
  double mean = 0.0;
  double variance = 0.0;         // unbiased sample variance
  double mean_stderr = 0.0;      // sqrt(variance / trials)
  double variance_stderr = 0.0;  // sqrt(2 / (trials - 1)) * variance
};

struct ActivationStats {
  double p_c = 0.0;
  double expected_active = 0.0;  // N p_c
  double variance = 0.0;         // N p_c (1 - p_c)
  std::optional<MonteCarloStats> empirical;
};

ActivationStats activation_stats(std::size_t n, double p, std::size_t r, std::size_t k);

FrontalSystem generate(std::size_t n, std::size_t r, std::size_t k, double p,
                       std::uint64_t rng_seed);

// Frontal elements linked to both inputs: F(X) intersect F(Y).
std::vector<std::size_t> active_set(const FrontalSystem& sys);
std::size_t active_count(const FrontalSystem& sys);

// |active_set| over `trials` independent systems; trial i is generated with
// substream_seed(rng_seed, i).
MonteCarloStats monte_carlo_stats(std::size_t n, std::size_t r, std::size_t k, double p,
                                  std::size_t trials, std::uint64_t rng_seed,
                                  Execution exec = Execution::kParallel);

// Redraws the incidence rows of the damaged frontal elements at the system's
// p. All other rows are left bit-identical.
FrontalSystem regenerate_after_damage(const FrontalSystem& sys,
                                      std::span<const std::size_t> damaged,
                                      std::uint64_t rng_seed);

// Expected size of the intersection of two independent active sets, N p_c^2.
// This is a derived quantity, not one of the closed forms above.
double overlap_estimate(std::size_t n, double p, std::size_t r, std::size_t k);

struct RegenerationStats {
  double damage_fraction = 0.0;
  MonteCarloStats before;      // active count of the fresh system
  MonteCarloStats damaged;     // number of elements damaged
  MonteCarloStats after;       // active count after regeneration
  double expected_after = 0.0; // exact E[after] under this damage rule
};

// Per trial: generate, damage ceil(fraction * |active|) active elements
// (chosen uniformly), regenerate their rows, and count the active set again.
RegenerationStats regeneration_cycle(std::size_t n, std::size_t r, std::size_t k, double p,
                                     double damage_fraction, std::size_t trials,
                                     std::uint64_t rng_seed,
                                     Execution exec = Execution::kParallel);

// Sample mean/variance of per-trial counts, reduced in trial order.
MonteCarloStats summarize(std::span<const double> samples);

}  // namespace netfail::frontal

#endif  // NETFAIL_FRONTAL_H_
