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

#include "netfail/protection.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "netfail/cascade.h"
#include "netfail/errors.h"
#include "netfail/rng.h"

namespace netfail::protection {
namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[std::max(a, b)] = std::min(a, b);
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

void require_connected(const Graph& g, const char* what) {
  if (!is_connected(g)) throw DisconnectedGraphError(what);
}

// Eccentricities of all vertices, via one BFS per vertex.
std::vector<Steps> all_eccentricities(const Graph& tree) {
  std::vector<Steps> ecc(tree.vertex_count());
  for (VertexId v = 0; v < tree.vertex_count(); ++v) ecc[v] = eccentricity(tree, v);
  return ecc;
}

Minimax minimax_of(const std::vector<Steps>& ecc) {
  Minimax best{kInfinite, 0};
  for (VertexId v = 0; v < ecc.size(); ++v)
    if (ecc[v] < best.steps) best = {ecc[v], v};
  if (ecc.empty()) best.steps = 0;
  return best;
}

class TreeEnumerator {
 public:
  TreeEnumerator(const Graph& g, std::size_t cap) : g_(g), cap_(cap) {}

  std::vector<std::vector<Edge>> run() {
    if (g_.vertex_count() <= 1) return {{}};
    chosen_.reserve(g_.vertex_count() - 1);
    recurse(0, DisjointSets(g_.vertex_count()));
    return std::move(trees_);
  }

 private:
  // True if the chosen edges plus edges[from..] still span the graph.
  bool can_span(std::size_t from) const {
    DisjointSets ds(g_.vertex_count());
    std::size_t merges = 0;
    for (const auto& e : chosen_) merges += ds.unite(e.first, e.second);
    for (std::size_t i = from; i < g_.edge_count(); ++i)
      merges += ds.unite(g_.edges()[i].first, g_.edges()[i].second);
    return merges == g_.vertex_count() - 1;
  }

  void recurse(std::size_t next, DisjointSets components) {
    if (chosen_.size() == g_.vertex_count() - 1) {
      if (trees_.size() == cap_)
        throw CapExceededError("more than " + std::to_string(cap_) + " spanning trees");
      trees_.push_back(chosen_);
      return;
    }
    if (next == g_.edge_count()) return;
    const Edge e = g_.edges()[next];
    if (components.find(e.first) != components.find(e.second)) {
      DisjointSets with = components;
      with.unite(e.first, e.second);
      chosen_.push_back(e);
      recurse(next + 1, std::move(with));
      chosen_.pop_back();
    }
    if (can_span(next + 1)) recurse(next + 1, std::move(components));
  }

  const Graph& g_;
  std::size_t cap_;
  std::vector<Edge> chosen_;
  std::vector<std::vector<Edge>> trees_;
};

}  // namespace

SpanningTree make_spanning_tree(Graph tree, std::size_t index) {
  const std::size_t n = tree.vertex_count();
  if ((n > 0 && tree.edge_count() != n - 1) || !is_connected(tree))
    throw std::invalid_argument("make_spanning_tree: input is not a tree");
  SpanningTree out;
  out.index = index;
  out.pairwise_times.reserve(n);
  std::vector<Steps> ecc(n);
  for (VertexId v = 0; v < n; ++v) {
    out.pairwise_times.push_back(bfs_distances(tree, v));
    ecc[v] = *std::max_element(out.pairwise_times.back().begin(), out.pairwise_times.back().end());
  }
  const auto mm = minimax_of(ecc);
  out.radius = mm.steps;
  out.center = mm.center;
  out.tree = std::move(tree);
  return out;
}

std::vector<std::vector<Edge>> enumerate_tree_edge_sets(const Graph& g, std::size_t cap) {
  if (g.vertex_count() == 0) throw std::invalid_argument("enumerate_spanning_trees: empty graph");
  require_connected(g, "enumerate_spanning_trees");
  return TreeEnumerator(g, cap).run();
}

std::vector<SpanningTree> enumerate_spanning_trees(const Graph& g, std::size_t cap) {
  const auto edge_sets = enumerate_tree_edge_sets(g, cap);
  std::vector<SpanningTree> trees;
  trees.reserve(edge_sets.size());
  for (std::size_t k = 0; k < edge_sets.size(); ++k)
    trees.push_back(make_spanning_tree(Graph::from_edges(g.vertex_count(), edge_sets[k]), k));
  return trees;
}

BigInt count_spanning_trees(const Graph& g) {
  if (g.vertex_count() == 0) throw std::invalid_argument("count_spanning_trees: empty graph");
  require_connected(g, "count_spanning_trees");
  const std::size_t m = g.vertex_count() - 1;  // drop the last row and column
  if (m == 0) return 1;
  std::vector<std::vector<BigInt>> a(m, std::vector<BigInt>(m, 0));
  for (VertexId v = 0; v < m; ++v) a[v][v] = static_cast<long>(g.degree(v));
  for (auto [u, v] : g.edges())
    if (u < m && v < m) {
      a[u][v] -= 1;
      a[v][u] -= 1;
    }

  // Bareiss fraction-free elimination; every division is exact.
  BigInt previous = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < m; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < m && a[swap_row][k] == 0) ++swap_row;
      if (swap_row == m) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < m; ++i) {
      for (std::size_t j = k + 1; j < m; ++j)
        a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / previous;
      a[i][k] = 0;
    }
    previous = a[k][k];
  }
  return sign * a[m - 1][m - 1];
}

SpanningTree random_spanning_tree(const Graph& g, std::uint64_t rng_seed) {
  if (g.vertex_count() == 0) throw std::invalid_argument("random_spanning_tree: empty graph");
  require_connected(g, "random_spanning_tree");
  const std::size_t n = g.vertex_count();
  rng::Stream stream(rng_seed);
  std::vector<bool> in_tree(n, false);
  std::vector<VertexId> next(n, 0);
  in_tree[0] = true;
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (VertexId start = 0; start < n; ++start) {
    // Random walk until the tree is hit; overwriting next[] erases loops.
    VertexId u = start;
    while (!in_tree[u]) {
      const auto nbrs = g.neighbors(u);
      next[u] = nbrs[stream.below(nbrs.size())];
      u = next[u];
    }
    for (u = start; !in_tree[u]; u = next[u]) {
      in_tree[u] = true;
      edges.emplace_back(u, next[u]);
    }
  }
  return make_spanning_tree(Graph::from_edges(n, edges), 0);
}

Minimax tree_minimax_time(const SpanningTree& tree) {
  std::vector<Steps> ecc(tree.pairwise_times.size());
  for (std::size_t i = 0; i < ecc.size(); ++i)
    ecc[i] = *std::max_element(tree.pairwise_times[i].begin(), tree.pairwise_times[i].end());
  return minimax_of(ecc);
}

namespace {

// Radius of each candidate tree; the kernel fans trees out across workers.
template <typename MakeTree>
std::vector<Steps> tree_radii(std::size_t count, MakeTree&& make_tree, Execution exec) {
  std::vector<Steps> radii(count);
  const auto total = static_cast<std::ptrdiff_t>(count);
  if (exec == Execution::kSerial) {
    for (std::ptrdiff_t k = 0; k < total; ++k) radii[k] = minimax_of(all_eccentricities(make_tree(k))).steps;
    return radii;
  }
#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t k = 0; k < total; ++k) radii[k] = minimax_of(all_eccentricities(make_tree(k))).steps;
  return radii;
}

std::size_t first_max(const std::vector<Steps>& radii) {
  std::size_t best = 0;
  for (std::size_t k = 1; k < radii.size(); ++k)
    if (radii[k] > radii[best]) best = k;
  return best;
}

}  // namespace

ProtectionPlan select_protection_tree(const Graph& g, Mode mode, std::size_t budget,
                                      std::uint64_t rng_seed, Execution exec) {
  if (g.vertex_count() == 0) throw std::invalid_argument("select_protection_tree: empty graph");
  require_connected(g, "select_protection_tree");
  ProtectionPlan plan;
  plan.mode = mode;
  const std::size_t n = g.vertex_count();

  if (mode == Mode::kExact) {
    if (count_spanning_trees(g) > budget)
      throw CapExceededError("exact mode: more than " + std::to_string(budget) +
                             " spanning trees; use sampled mode");
    const auto edge_sets = enumerate_tree_edge_sets(g, budget);
    const auto radii = tree_radii(
        edge_sets.size(), [&](std::size_t k) { return Graph::from_edges(n, edge_sets[k]); }, exec);
    const std::size_t best = first_max(radii);
    plan.chosen_tree = make_spanning_tree(Graph::from_edges(n, edge_sets[best]), best);
    plan.trees_examined = edge_sets.size();
  } else {
    if (budget == 0) throw std::invalid_argument("sampled mode needs a budget of at least 1");
    const auto radii = tree_radii(
        budget,
        [&](std::size_t k) { return random_spanning_tree(g, rng::substream_seed(rng_seed, k)).tree; },
        exec);
    const std::size_t best = first_max(radii);
    plan.chosen_tree = random_spanning_tree(g, rng::substream_seed(rng_seed, best));
    plan.chosen_tree.index = best;
    plan.trees_examined = budget;
    plan.lower_bound = true;
  }
  plan.t_tilde = plan.chosen_tree.radius;
  plan.protected_vertex = plan.chosen_tree.center;
  return plan;
}

InducedSubgraph protect_vertex(const Graph& g, VertexId v) {
  if (v >= g.vertex_count()) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
  std::vector<VertexId> keep;
  keep.reserve(g.vertex_count() - 1);
  for (VertexId u = 0; u < g.vertex_count(); ++u)
    if (u != v) keep.push_back(u);
  return induced_subgraph(g, keep);
}

ImpactReport protection_impact(const Graph& g, VertexId v) {
  ImpactReport report;
  report.protected_vertex = v;
  const auto remainder = protect_vertex(g, v);
  if (is_connected(g)) {
    report.t_min_before = cascade::min_damage_time(g).steps;
    report.t_max_before = cascade::max_damage_time(g).steps;
  }
  const auto components = connected_components(remainder.graph);
  report.disconnected_after = components.size() > 1;
  if (!report.disconnected_after && remainder.graph.vertex_count() > 0) {
    report.t_min_after = cascade::min_damage_time(remainder.graph).steps;
    report.t_max_after = cascade::max_damage_time(remainder.graph).steps;
  }
  for (const auto& comp : components) {
    const auto sub = induced_subgraph(remainder.graph, comp);
    ComponentDamage cd;
    for (VertexId local : comp) cd.vertices.push_back(remainder.original[local]);
    cd.t_min = cascade::min_damage_time(sub.graph).steps;
    cd.t_max = cascade::max_damage_time(sub.graph).steps;
    report.components.push_back(std::move(cd));
  }
  return report;
}

}  // namespace netfail::protection
