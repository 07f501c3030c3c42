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

#ifndef NETFAIL_GRAPH_H_
#define NETFAIL_GRAPH_H_

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "netfail/matrix.h"

namespace netfail {

using VertexId = std::uint32_t;
using Edge = std::pair<VertexId, VertexId>;

// Hop count or step count; kInfinite marks "never reached".
using Steps = std::size_t;
inline constexpr Steps kInfinite = std::numeric_limits<Steps>::max();

// Undirected simple graph. The edge list (each edge stored once with
// first < second, sorted lexicographically) is the source of truth; sorted
// adjacency lists are derived at construction. Immutable afterwards.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : adjacency_(n) {}

  // Throws std::out_of_range for an endpoint >= n and std::invalid_argument
  // for a self-loop. Duplicate pairs (in either orientation) collapse.
  static Graph from_edges(std::size_t n, std::span<const Edge> pairs);

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const VertexId> neighbors(VertexId v) const { return adjacency_[v]; }
  std::size_t degree(VertexId v) const { return adjacency_[v].size(); }
  bool has_edge(VertexId u, VertexId v) const;

  // Index of edge {u,v} in edges(), or edge_count() if absent.
  std::size_t edge_index(VertexId u, VertexId v) const;

  bool operator==(const Graph& other) const { return edges_ == other.edges_ &&
      adjacency_.size() == other.adjacency_.size(); }

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<VertexId>> adjacency_;
};

inline Graph from_edge_list(std::size_t n, std::span<const Edge> pairs) {
  return Graph::from_edges(n, pairs);
}

// Symmetric 0/1 matrix with zero diagonal.
Matrix adjacency_matrix(const Graph& g);

// Hop distances from `source`; unreachable vertices get kInfinite.
std::vector<Steps> bfs_distances(const Graph& g, VertexId source);

// Multi-source variant: distance to the nearest seed.
std::vector<Steps> bfs_distances(const Graph& g, std::span<const VertexId> sources);

struct SuperSource {
  Graph graph;
  VertexId source;
};

// Appends a fictitious vertex n adjacent exactly to `seeds`, so that a
// multi-seed cascade becomes a single-seed cascade delayed by one step.
SuperSource add_super_source(const Graph& g, std::span<const VertexId> seeds);

// One vertex per edge of g, numbered in g.edges() order; two vertices are
// adjacent iff their edges share an endpoint. Used to turn edge damage into
// vertex damage.
Graph line_graph(const Graph& g);

// Graphs with 0 or 1 vertices count as connected.
bool is_connected(const Graph& g);

// Components as sorted vertex lists, ordered by smallest member.
std::vector<std::vector<VertexId>> connected_components(const Graph& g);

struct InducedSubgraph {
  Graph graph;
  std::vector<VertexId> original;  // new index -> index in the parent graph
};

InducedSubgraph induced_subgraph(const Graph& g, std::span<const VertexId> keep);

// Largest finite BFS distance from v; kInfinite if some vertex is unreachable.
Steps eccentricity(const Graph& g, VertexId v);

}  // namespace netfail

#endif  // NETFAIL_GRAPH_H_
