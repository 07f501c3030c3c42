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

#include "netfail/graph.h"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>

namespace netfail {

Graph Graph::from_edges(std::size_t n, std::span<const Edge> pairs) {
  Graph g(n);
  g.edges_.reserve(pairs.size());
  for (auto [u, v] : pairs) {
    if (u >= n || v >= n)
      throw std::out_of_range("edge (" + std::to_string(u) + "," + std::to_string(v) +
                              ") has an endpoint >= n=" + std::to_string(n));
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    g.edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());
  for (auto [u, v] : g.edges_) {
    g.adjacency_[u].push_back(v);
    g.adjacency_[v].push_back(u);
  }
  for (auto& list : g.adjacency_) std::sort(list.begin(), list.end());
  return g;
}

bool Graph::has_edge(VertexId u, VertexId v) const {
  if (u >= vertex_count() || v >= vertex_count()) return false;
  const auto& list = adjacency_[u];
  return std::binary_search(list.begin(), list.end(), v);
}

std::size_t Graph::edge_index(VertexId u, VertexId v) const {
  const Edge key{std::min(u, v), std::max(u, v)};
  const auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return edges_.size();
  return static_cast<std::size_t>(it - edges_.begin());
}

Matrix adjacency_matrix(const Graph& g) {
  Matrix c(g.vertex_count(), g.vertex_count());
  for (auto [u, v] : g.edges()) {
    c(u, v) = 1.0;
    c(v, u) = 1.0;
  }
  return c;
}

std::vector<Steps> bfs_distances(const Graph& g, std::span<const VertexId> sources) {
  std::vector<Steps> dist(g.vertex_count(), kInfinite);
  std::deque<VertexId> queue;
  for (VertexId s : sources) {
    if (s >= g.vertex_count())
      throw std::out_of_range("source vertex " + std::to_string(s) + " out of range");
    if (dist[s] != 0) {
      dist[s] = 0;
      queue.push_back(s);
    }
  }
  while (!queue.empty()) {
    const VertexId u = queue.front();
    queue.pop_front();
    for (VertexId w : g.neighbors(u)) {
      if (dist[w] == kInfinite) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::vector<Steps> bfs_distances(const Graph& g, VertexId source) {
  return bfs_distances(g, std::span<const VertexId>(&source, 1));
}

SuperSource add_super_source(const Graph& g, std::span<const VertexId> seeds) {
  if (seeds.empty()) throw std::invalid_argument("seed set is empty");
  const auto n = static_cast<VertexId>(g.vertex_count());
  std::vector<Edge> edges = g.edges();
  for (VertexId s : seeds) {
    if (s >= n) throw std::out_of_range("seed vertex " + std::to_string(s) + " out of range");
    edges.emplace_back(s, n);
  }
  return {Graph::from_edges(g.vertex_count() + 1, edges), n};
}

Graph line_graph(const Graph& g) {
  // Edges incident to each vertex, as indices into g.edges().
  std::vector<std::vector<VertexId>> incident(g.vertex_count());
  const auto& edges = g.edges();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    incident[edges[e].first].push_back(static_cast<VertexId>(e));
    incident[edges[e].second].push_back(static_cast<VertexId>(e));
  }
  std::vector<Edge> out;
  for (const auto& list : incident)
    for (std::size_t a = 0; a < list.size(); ++a)
      for (std::size_t b = a + 1; b < list.size(); ++b) out.emplace_back(list[a], list[b]);
  return Graph::from_edges(edges.size(), out);
}

bool is_connected(const Graph& g) {
  if (g.vertex_count() <= 1) return true;
  const auto dist = bfs_distances(g, VertexId{0});
  return std::none_of(dist.begin(), dist.end(), [](Steps d) { return d == kInfinite; });
}

std::vector<std::vector<VertexId>> connected_components(const Graph& g) {
  std::vector<std::vector<VertexId>> components;
  std::vector<bool> seen(g.vertex_count(), false);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (seen[v]) continue;
    std::vector<VertexId> comp{v};
    seen[v] = true;
    for (std::size_t head = 0; head < comp.size(); ++head)
      for (VertexId w : g.neighbors(comp[head]))
        if (!seen[w]) {
          seen[w] = true;
          comp.push_back(w);
        }
    std::sort(comp.begin(), comp.end());
    components.push_back(std::move(comp));
  }
  return components;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const VertexId> keep) {
  std::vector<VertexId> original(keep.begin(), keep.end());
  std::sort(original.begin(), original.end());
  original.erase(std::unique(original.begin(), original.end()), original.end());
  constexpr VertexId kDropped = ~VertexId{0};
  std::vector<VertexId> index(g.vertex_count(), kDropped);
  for (std::size_t i = 0; i < original.size(); ++i) {
    if (original[i] >= g.vertex_count())
      throw std::out_of_range("vertex " + std::to_string(original[i]) + " out of range");
    index[original[i]] = static_cast<VertexId>(i);
  }
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges())
    if (index[u] != kDropped && index[v] != kDropped) edges.emplace_back(index[u], index[v]);
  return {Graph::from_edges(original.size(), edges), std::move(original)};
}

Steps eccentricity(const Graph& g, VertexId v) {
  const auto dist = bfs_distances(g, v);
  Steps ecc = 0;
  for (Steps d : dist) {
    if (d == kInfinite) return kInfinite;
    ecc = std::max(ecc, d);
  }
  return ecc;
}

}  // namespace netfail
