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

#ifndef NETFAIL_CASCADE_H_
#define NETFAIL_CASCADE_H_

#include <span>
#include <vector>

#include "netfail/bigint.h"
#include "netfail/graph.h"
#include "netfail/matrix.h"
#include "netfail/parallel.h"

namespace netfail::cascade {

// Exact walk counts; entry (i,j) of C^t for adjacency matrix C.
class WalkCounts {
 public:
  WalkCounts(std::size_t n, unsigned t) : n_(n), t_(t), counts_(n * n) {}

  std::size_t size() const { return n_; }
  unsigned steps() const { return t_; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return counts_[i * n_ + j]; }
  BigInt& operator()(std::size_t i, std::size_t j) { return counts_[i * n_ + j]; }

  Matrix to_matrix() const;

  bool operator==(const WalkCounts&) const = default;

 private:
  std::size_t n_;
  unsigned t_;
  std::vector<BigInt> counts_;
};

WalkCounts walk_count_matrix(const Graph& g, unsigned t,
                             Execution exec = Execution::kParallel);

// Nonzero pattern of T(t) = I + C + ... + C^t: reach(i,j) iff some walk of
// length <= t joins i and j, i.e. j is damaged by step t when the cascade
// starts at i.
class ReachabilityMatrix {
 public:
  ReachabilityMatrix(unsigned t, BitMatrix reach) : t_(t), reach_(std::move(reach)) {}

  unsigned steps() const { return t_; }
  std::size_t size() const { return reach_.rows(); }
  bool reaches(VertexId i, VertexId j) const { return reach_.test(i, j); }
  bool row_saturated(VertexId i) const { return reach_.row_all(i); }
  const BitMatrix& bits() const { return reach_; }

 private:
  unsigned t_;
  BitMatrix reach_;
};

// Iterates T(s+1) = T(s) (x) (I + C) in the boolean semiring, stopping early
// once the pattern stops changing.
ReachabilityMatrix cumulative_matrix(const Graph& g, unsigned t,
                                     Execution exec = Execution::kParallel);

// First t at which row `source` of T(t) is all nonzero; kInfinite when part
// of the graph is unreachable from source.
Steps damage_time(const Graph& g, VertexId source);

// Damage time of every start vertex.
std::vector<Steps> damage_times(const Graph& g, Execution exec = Execution::kParallel);

struct Extremum {
  Steps steps;
  VertexId vertex;

  bool operator==(const Extremum&) const = default;
};

// Fastest total damage (graph radius); ties go to the lowest vertex index.
// Throws DisconnectedGraphError.
Extremum min_damage_time(const Graph& g);
// Slowest total damage (graph diameter); ties go to the lowest vertex index.
Extremum max_damage_time(const Graph& g);

struct DamageTimeline {
  std::vector<VertexId> seeds;
  std::vector<std::vector<VertexId>> waves;  // waves[s]: first damaged at step s
  Steps total_time = 0;                      // kInfinite if some vertex survives

  std::size_t damaged_count() const;
};

// Frontier expansion from the seed set. Throws std::invalid_argument for an
// empty seed set and std::out_of_range for an invalid seed.
DamageTimeline simulate_cascade(const Graph& g, std::span<const VertexId> seeds);

}  // namespace netfail::cascade

#endif  // NETFAIL_CASCADE_H_
