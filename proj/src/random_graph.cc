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

#include "netfail/random_graph.h"

#include <cmath>
#include <stdexcept>

#include "netfail/rng.h"

namespace netfail::random_graph {

Graph gnp(std::size_t n, double p, std::uint64_t rng_seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("gnp: p must lie in [0, 1]");
  std::vector<Edge> edges;
  std::uint64_t pair = 0;
  for (VertexId i = 0; i < n; ++i)
    for (VertexId j = i + 1; j < n; ++j, ++pair)
      if (rng::counter_uniform(rng_seed, pair) < p) edges.emplace_back(i, j);
  return Graph::from_edges(n, edges);
}

double critical_p(std::size_t n, double c) {
  if (n < 2) throw std::invalid_argument("critical_p: n must be >= 2");
  if (!(c > 0.0)) throw std::invalid_argument("critical_p: c must be > 0");
  return std::min(1.0, c * std::log(static_cast<double>(n)) / static_cast<double>(n));
}

ThresholdReport threshold_experiment(std::size_t n, double c, std::size_t trials,
                                     std::uint64_t rng_seed, Execution exec) {
  if (trials < 1) throw std::invalid_argument("threshold_experiment: trials must be >= 1");
  ThresholdReport report;
  report.n = n;
  report.c = c;
  report.p = critical_p(n, c);
  report.trials = trials;

  const auto total = static_cast<std::ptrdiff_t>(trials);
  std::size_t connected = 0;
  if (exec == Execution::kSerial) {
    for (std::ptrdiff_t i = 0; i < total; ++i)
      connected += is_connected(gnp(n, report.p, rng::substream_seed(rng_seed, i)));
  } else {
#pragma omp parallel for schedule(dynamic, 1) reduction(+ : connected)
    for (std::ptrdiff_t i = 0; i < total; ++i)
      connected += is_connected(gnp(n, report.p, rng::substream_seed(rng_seed, i)));
  }

  const double inv_n = 1.0 / static_cast<double>(n);
  report.connected_count = connected;
  report.empirical_probability = static_cast<double>(connected) / static_cast<double>(trials);
  report.bound = 1.0 - inv_n;
  report.sampling_slack = 3.0 * std::sqrt(inv_n * (1.0 - inv_n) / static_cast<double>(trials));
  report.pass = report.empirical_probability >= report.bound - report.sampling_slack;
  return report;
}

std::vector<ThresholdReport> threshold_sweep(std::size_t n, std::span<const double> c_grid,
                                             std::size_t trials, std::uint64_t rng_seed) {
  std::vector<ThresholdReport> out;
  out.reserve(c_grid.size());
  for (std::size_t i = 0; i < c_grid.size(); ++i)
    out.push_back(threshold_experiment(n, c_grid[i], trials, rng_seed));
  return out;
}

}  // namespace netfail::random_graph
