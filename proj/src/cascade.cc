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

#include "netfail/cascade.h"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "netfail/errors.h"

namespace netfail::cascade {

Matrix WalkCounts::to_matrix() const {
  Matrix m(n_, n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) m(i, j) = counts_[i * n_ + j].convert_to<double>();
  return m;
}

WalkCounts walk_count_matrix(const Graph& g, unsigned t, Execution exec) {
  const std::size_t n = g.vertex_count();
  WalkCounts current(n, 0);
  for (std::size_t i = 0; i < n; ++i) current(i, i) = 1;

  if (exec == Execution::kSerial) {
    // Reference: dense products with the 0/1 adjacency matrix.
    const Matrix c = adjacency_matrix(g);
    for (unsigned s = 0; s < t; ++s) {
      WalkCounts next(n, s + 1);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          BigInt sum = 0;
          for (std::size_t k = 0; k < n; ++k)
            if (c(k, j) != 0.0) sum += current(i, k);
          next(i, j) = std::move(sum);
        }
      current = std::move(next);
    }
    return current;
  }

  // (C^s C)(i,j) = sum over neighbours k of j of C^s(i,k).
  for (unsigned s = 0; s < t; ++s) {
    WalkCounts next(n, s + 1);
    const auto rows = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic, 4)
    for (std::ptrdiff_t i = 0; i < rows; ++i)
      for (VertexId j = 0; j < n; ++j) {
        BigInt sum = 0;
        for (VertexId k : g.neighbors(j)) sum += current(i, k);
        next(i, j) = std::move(sum);
      }
    current = std::move(next);
  }
  return current;
}

namespace {

BitMatrix one_step_matrix(const Graph& g) {
  BitMatrix step = BitMatrix::identity(g.vertex_count());
  for (auto [u, v] : g.edges()) {
    step.set(u, v);
    step.set(v, u);
  }
  return step;
}

void check_vertex(const Graph& g, VertexId v) {
  if (v >= g.vertex_count())
    throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
}

}  // namespace

ReachabilityMatrix cumulative_matrix(const Graph& g, unsigned t, Execution exec) {
  const BitMatrix step = one_step_matrix(g);
  BitMatrix reach = BitMatrix::identity(g.vertex_count());
  for (unsigned s = 0; s < t; ++s) {
    BitMatrix next = boolean_product(reach, step, exec);
    if (next == reach) break;  // saturated: T(s) = T(s+1) = ... = T(t)
    reach = std::move(next);
  }
  return {t, std::move(reach)};
}

Steps damage_time(const Graph& g, VertexId source) {
  check_vertex(g, source);
  const std::size_t n = g.vertex_count();
  // Row `source` of T(t), advanced one multiplication by (I + C) per step.
  std::vector<bool> row(n, false);
  row[source] = true;
  std::size_t damaged = 1;
  std::vector<VertexId> frontier{source};
  Steps t = 0;
  while (damaged < n) {
    std::vector<VertexId> next;
    for (VertexId u : frontier)
      for (VertexId w : g.neighbors(u))
        if (!row[w]) {
          row[w] = true;
          next.push_back(w);
        }
    if (next.empty()) return kInfinite;
    damaged += next.size();
    frontier = std::move(next);
    ++t;
  }
  return t;
}

std::vector<Steps> damage_times(const Graph& g, Execution exec) {
  const auto n = static_cast<std::ptrdiff_t>(g.vertex_count());
  std::vector<Steps> times(g.vertex_count());
  if (exec == Execution::kSerial) {
    for (std::ptrdiff_t v = 0; v < n; ++v) times[v] = damage_time(g, static_cast<VertexId>(v));
    return times;
  }
#pragma omp parallel for schedule(dynamic, 8)
  for (std::ptrdiff_t v = 0; v < n; ++v) times[v] = damage_time(g, static_cast<VertexId>(v));
  return times;
}

namespace {

template <typename Better>
Extremum extremum(const Graph& g, const char* what, Better better) {
  if (g.vertex_count() == 0) throw std::invalid_argument(std::string(what) + ": empty graph");
  const auto times = damage_times(g);
  Extremum best{times[0], 0};
  for (VertexId v = 0; v < times.size(); ++v) {
    if (times[v] == kInfinite) throw DisconnectedGraphError(what);
    if (better(times[v], best.steps)) best = {times[v], v};
  }
  return best;
}

}  // namespace

Extremum min_damage_time(const Graph& g) {
  return extremum(g, "min_damage_time", [](Steps a, Steps b) { return a < b; });
}

Extremum max_damage_time(const Graph& g) {
  return extremum(g, "max_damage_time", [](Steps a, Steps b) { return a > b; });
}

std::size_t DamageTimeline::damaged_count() const {
  std::size_t c = 0;
  for (const auto& w : waves) c += w.size();
  return c;
}

DamageTimeline simulate_cascade(const Graph& g, std::span<const VertexId> seeds) {
  if (seeds.empty()) throw std::invalid_argument("simulate_cascade: seed set is empty");
  const auto dist = bfs_distances(g, seeds);

  DamageTimeline out;
  out.seeds.assign(seeds.begin(), seeds.end());
  std::sort(out.seeds.begin(), out.seeds.end());
  out.seeds.erase(std::unique(out.seeds.begin(), out.seeds.end()), out.seeds.end());

  bool survivor = false;
  for (VertexId v = 0; v < dist.size(); ++v) {
    if (dist[v] == kInfinite) {
      survivor = true;
      continue;
    }
    if (dist[v] >= out.waves.size()) out.waves.resize(dist[v] + 1);
    out.waves[dist[v]].push_back(v);
  }
  out.total_time = survivor ? kInfinite : out.waves.size() - 1;
  return out;
}

}  // namespace netfail::cascade
