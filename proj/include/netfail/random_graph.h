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

#ifndef NETFAIL_RANDOM_GRAPH_H_
#define NETFAIL_RANDOM_GRAPH_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "netfail/graph.h"
#include "netfail/parallel.h"

namespace netfail::random_graph {

// G(n, p). Pair {i, j} is kept iff counter_uniform(rng_seed, pair index) < p,
// so the graph does not depend on iteration order.
Graph gnp(std::size_t n, double p, std::uint64_t rng_seed);

// min(1, c ln n / n). Throws std::invalid_argument for n < 2 or c <= 0.
double critical_p(std::size_t n, double c);

// The connectivity guarantee is stated for c > 3.
inline bool in_theorem_regime(double c) { return c > 3.0; }

struct ThresholdReport {
  std::size_t n = 0;
  double c = 0.0;
  double p = 0.0;
  std::size_t trials = 0;
  std::size_t connected_count = 0;
  double empirical_probability = 0.0;
  double bound = 0.0;           // 1 - 1/n
  double sampling_slack = 0.0;  // 3 sqrt((1/n)(1 - 1/n) / trials)
  bool pass = false;            // empirical >= bound - slack
};

// Trial i samples gnp(n, critical_p(n, c), substream_seed(rng_seed, i)).
ThresholdReport threshold_experiment(std::size_t n, double c, std::size_t trials,
                                     std::uint64_t rng_seed,
                                     Execution exec = Execution::kParallel);

std::vector<ThresholdReport> threshold_sweep(std::size_t n, std::span<const double> c_grid,
                                             std::size_t trials, std::uint64_t rng_seed);

}  // namespace netfail::random_graph

#endif  // NETFAIL_RANDOM_GRAPH_H_
