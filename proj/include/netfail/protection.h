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

#ifndef NETFAIL_PROTECTION_H_
#define NETFAIL_PROTECTION_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "netfail/bigint.h"
#include "netfail/graph.h"
#include "netfail/parallel.h"

namespace netfail::protection {

inline constexpr std::size_t kDefaultTreeCap = 100000;

// A spanning tree of some parent graph together with its hop-distance table
// and minimax center.
struct SpanningTree {
  Graph tree;
  std::size_t index = 0;  // position in an enumeration, or sample number
  std::vector<std::vector<Steps>> pairwise_times;
  Steps radius = 0;
  VertexId center = 0;
};

// Computes the distance table, radius and center of `tree`. Throws
// std::invalid_argument if `tree` is not a tree.
SpanningTree make_spanning_tree(Graph tree, std::size_t index);

// All spanning trees in lexicographic order of their sorted edge lists.
// Throws DisconnectedGraphError, or CapExceededError once more than `cap`
// trees exist.
std::vector<SpanningTree> enumerate_spanning_trees(const Graph& g,
                                                   std::size_t cap = kDefaultTreeCap);

// Same enumeration order, edge lists only.
std::vector<std::vector<Edge>> enumerate_tree_edge_sets(const Graph& g, std::size_t cap);

// Kirchhoff count: determinant of a reduced Laplacian, computed exactly by
// fraction-free elimination.
BigInt count_spanning_trees(const Graph& g);

// Uniform spanning tree by Wilson's loop-erased random walk.
SpanningTree random_spanning_tree(const Graph& g, std::uint64_t rng_seed);

struct Minimax {
  Steps steps;
  VertexId center;
};

// min_i max_j t_ij over the tree; lowest-index center on ties.
Minimax tree_minimax_time(const SpanningTree& tree);

enum class Mode { kExact, kSampled };

struct ProtectionPlan {
  SpanningTree chosen_tree;
  Steps t_tilde = 0;
  VertexId protected_vertex = 0;
  Mode mode = Mode::kExact;
  std::size_t trees_examined = 0;
  // Sampled mode only sees part of the tree space, so t_tilde is a lower bound.
  bool lower_bound = false;
};

// The spanning tree whose center is farthest from its leaves, i.e. the tree
// maximising its own radius. Exact mode examines every spanning tree and
// throws CapExceededError past `budget`; sampled mode draws `budget` uniform
// trees. Ties keep the earliest tree.
ProtectionPlan select_protection_tree(const Graph& g, Mode mode, std::size_t budget,
                                      std::uint64_t rng_seed,
                                      Execution exec = Execution::kParallel);

// Protecting a vertex takes it out of the cascade graph.
InducedSubgraph protect_vertex(const Graph& g, VertexId v);

struct ComponentDamage {
  std::vector<VertexId> vertices;  // ids in the original graph
  Steps t_min = 0;
  Steps t_max = 0;
};

struct ImpactReport {
  VertexId protected_vertex = 0;
  std::optional<Steps> t_min_before;  // empty when g is disconnected
  std::optional<Steps> t_max_before;
  std::optional<Steps> t_min_after;   // empty when the remainder is disconnected
  std::optional<Steps> t_max_after;
  bool disconnected_after = false;
  std::vector<ComponentDamage> components;
};

ImpactReport protection_impact(const Graph& g, VertexId v);

}  // namespace netfail::protection

#endif  // NETFAIL_PROTECTION_H_
