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

#include <boost/math/distributions/chi_squared.hpp>
#include <map>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "netfail/cascade.h"
#include "netfail/errors.h"
#include "netfail/graph.h"
#include "netfail/protection.h"
#include "support/corpus.h"
#include "support/oracles.h"

namespace netfail {
namespace {

using namespace protection;
using testing::complete;
using testing::cycle;
using testing::path;
using testing::star;
using testing::wheel;

std::vector<Edge> edges_of(const SpanningTree& t) {
  return {t.tree.edges().begin(), t.tree.edges().end()};
}

const Graph& two_edges() {
  static const Graph g = [] {
    const std::vector<Edge> e{{0, 1}, {2, 3}};
    return from_edge_list(4, e);
  }();
  return g;
}

TEST_CASE("enumerate_spanning_trees examples") {
  const auto p5 = enumerate_spanning_trees(path(5));
  REQUIRE(p5.size() == 1);
  CHECK(p5[0].tree == path(5));

  const auto c4 = enumerate_spanning_trees(cycle(4));
  CHECK(c4.size() == 4);
  for (const auto& t : c4) {
    CHECK(t.tree.edge_count() == 3);
    CHECK(t.radius == 2);
  }
  CHECK(enumerate_spanning_trees(complete(4)).size() == 16);

  CHECK_THROWS_AS(enumerate_spanning_trees(two_edges()), DisconnectedGraphError);
  CHECK_THROWS_AS(enumerate_spanning_trees(complete(5), 100), CapExceededError);
  CHECK(enumerate_spanning_trees(complete(5), 125).size() == 125);
}

TEST_CASE("enumeration order is lexicographic and duplicate free") {
  const auto sets = enumerate_tree_edge_sets(complete(5), kDefaultTreeCap);
  CHECK(sets.size() == 125);
  for (std::size_t i = 1; i < sets.size(); ++i) CHECK(sets[i - 1] < sets[i]);
}

TEST_CASE("enumeration matches brute force and the Kirchhoff count") {
  for (const auto& [name, g] : testing::small_connected_corpus()) {
    const auto trees = enumerate_tree_edge_sets(g, 1'000'000);
    auto brute = testing::brute_force_spanning_trees(g);
    std::sort(brute.begin(), brute.end());
    CHECK_MESSAGE(trees == brute, name);
    if (g.vertex_count() >= 2) CHECK(count_spanning_trees(g) == trees.size());
  }
}

TEST_CASE("count_spanning_trees examples") {
  CHECK(count_spanning_trees(path(6)) == 1);
  CHECK(count_spanning_trees(star(4)) == 1);
  CHECK(count_spanning_trees(cycle(5)) == 5);
  CHECK(count_spanning_trees(complete(4)) == 16);
  // Cayley's formula well beyond double precision.
  BigInt cayley = 1;
  for (int i = 0; i < 28; ++i) cayley *= 30;
  CHECK(count_spanning_trees(complete(30)) == cayley);
  CHECK_THROWS_AS(count_spanning_trees(two_edges()), DisconnectedGraphError);
}

TEST_CASE("every enumerated tree is a spanning tree of the parent") {
  const Graph g = testing::wheel(6);
  for (const auto& t : enumerate_spanning_trees(g)) {
    CHECK(t.tree.vertex_count() == g.vertex_count());
    CHECK(t.tree.edge_count() == g.vertex_count() - 1);
    CHECK(is_connected(t.tree));
    for (auto [u, v] : t.tree.edges()) CHECK(g.has_edge(u, v));
    const Steps diam = cascade::max_damage_time(t.tree).steps;
    CHECK(t.radius <= diam);
    CHECK(diam <= 2 * t.radius);
    CHECK(t.pairwise_times[t.center] == bfs_distances(t.tree, t.center));
  }
}

TEST_CASE("make_spanning_tree rejects non-trees") {
  CHECK_THROWS_AS(make_spanning_tree(cycle(4), 0), std::invalid_argument);
  CHECK_THROWS_AS(make_spanning_tree(two_edges(), 0), std::invalid_argument);
  CHECK_NOTHROW(make_spanning_tree(path(4), 0));
}

TEST_CASE("random_spanning_tree") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) CHECK(random_spanning_tree(star(5), seed).tree == star(5));
  CHECK(random_spanning_tree(complete(6), 17).tree == random_spanning_tree(complete(6), 17).tree);
  CHECK_THROWS_AS(random_spanning_tree(two_edges(), 0), DisconnectedGraphError);
}

// Pearson statistic of Wilson samples against the uniform law on the enumerated trees.
double uniformity_p_value(const Graph& g, std::size_t samples, std::uint64_t base) {
  const auto trees = enumerate_tree_edge_sets(g, kDefaultTreeCap);
  std::map<std::vector<Edge>, std::size_t> counts;
  for (const auto& t : trees) counts[t] = 0;
  for (std::size_t s = 0; s < samples; ++s) {
    const auto it = counts.find(edges_of(random_spanning_tree(g, base + s)));
    REQUIRE(it != counts.end());
    ++it->second;
  }
  const double expected = static_cast<double>(samples) / static_cast<double>(trees.size());
  double chi2 = 0.0;
  for (const auto& [edges, c] : counts) chi2 += (c - expected) * (c - expected) / expected;
  boost::math::chi_squared dist(static_cast<double>(trees.size() - 1));
  return boost::math::cdf(boost::math::complement(dist, chi2));
}

TEST_CASE("Wilson sampler is uniform on C4 and K4") {
  CHECK(uniformity_p_value(cycle(4), 4000, 0) > 0.01);
  CHECK(uniformity_p_value(complete(4), 16000, 1u << 20) > 0.01);
}

TEST_CASE("tree_minimax_time examples") {
  const auto s = tree_minimax_time(make_spanning_tree(star(4), 0));
  CHECK(s.steps == 1);
  CHECK(s.center == 0);
  const auto p5 = tree_minimax_time(make_spanning_tree(path(5), 0));
  CHECK(p5.steps == 2);
  CHECK(p5.center == 2);
  const auto p4 = tree_minimax_time(make_spanning_tree(path(4), 0));
  CHECK(p4.steps == 2);
  CHECK(p4.center == 1);
}

TEST_CASE("select_protection_tree examples") {
  const auto c5 = select_protection_tree(cycle(5), Mode::kExact, kDefaultTreeCap, 0);
  CHECK(c5.t_tilde == 2);
  CHECK(c5.trees_examined == 5);
  CHECK_FALSE(c5.lower_bound);

  const auto k4 = select_protection_tree(complete(4), Mode::kExact, kDefaultTreeCap, 0);
  CHECK(k4.t_tilde == 2);
  CHECK(k4.chosen_tree.radius == 2);
  CHECK(k4.protected_vertex == k4.chosen_tree.center);
  // The winner is a path, not a star.
  std::size_t max_degree = 0;
  for (VertexId v = 0; v < 4; ++v) max_degree = std::max(max_degree, k4.chosen_tree.tree.degree(v));
  CHECK(max_degree == 2);

  const auto tree = select_protection_tree(path(6), Mode::kExact, kDefaultTreeCap, 0);
  CHECK(tree.chosen_tree.tree == path(6));
  CHECK(tree.t_tilde == 3);

  CHECK_THROWS_AS(select_protection_tree(two_edges(), Mode::kExact, kDefaultTreeCap, 0),
                  DisconnectedGraphError);
  CHECK_THROWS_AS(select_protection_tree(complete(6), Mode::kExact, 100, 0), CapExceededError);
  CHECK_THROWS_AS(select_protection_tree(cycle(5), Mode::kSampled, 0, 0), std::invalid_argument);
}

TEST_CASE("exact selection is the brute-force maximum radius") {
  for (const auto& [name, g] : testing::small_connected_corpus()) {
    if (g.vertex_count() > 7) continue;
    Steps best = 0;
    for (const auto& edges : testing::brute_force_spanning_trees(g))
      best = std::max(best, testing::radius_by_floyd(from_edge_list(g.vertex_count(), edges)));
    const auto plan = select_protection_tree(g, Mode::kExact, kDefaultTreeCap, 0);
    CHECK_MESSAGE(plan.t_tilde == best, name);
    CHECK(plan.t_tilde == plan.chosen_tree.radius);
  }
}

TEST_CASE("sampled selection is a lower bound that closes with budget") {
  for (const auto& [name, g] : testing::small_connected_corpus()) {
    if (g.vertex_count() < 5 || g.vertex_count() > 6) continue;
    const auto exact = select_protection_tree(g, Mode::kExact, kDefaultTreeCap, 0);
    const auto few = select_protection_tree(g, Mode::kSampled, 3, 11);
    CHECK(few.lower_bound);
    CHECK(few.mode == Mode::kSampled);
    CHECK(few.t_tilde <= exact.t_tilde);
    if (count_spanning_trees(g) <= 16) {
      const auto many = select_protection_tree(g, Mode::kSampled, 2000, 11);
      CHECK_MESSAGE(many.t_tilde == exact.t_tilde, name);
    }
  }
}

TEST_CASE("selection does not depend on execution mode") {
  const Graph g = testing::wheel(7);
  const auto a = select_protection_tree(g, Mode::kExact, kDefaultTreeCap, 0, Execution::kSerial);
  const auto b = select_protection_tree(g, Mode::kExact, kDefaultTreeCap, 0, Execution::kParallel);
  CHECK(a.chosen_tree.index == b.chosen_tree.index);
  CHECK(a.chosen_tree.tree == b.chosen_tree.tree);
  const auto c = select_protection_tree(g, Mode::kSampled, 300, 5, Execution::kSerial);
  const auto d = select_protection_tree(g, Mode::kSampled, 300, 5, Execution::kParallel);
  CHECK(c.chosen_tree.tree == d.chosen_tree.tree);
  CHECK(c.chosen_tree.index == d.chosen_tree.index);
}

TEST_CASE("protect_vertex") {
  const auto s = protect_vertex(star(5), 0);
  CHECK(s.graph.vertex_count() == 5);
  CHECK(s.graph.edge_count() == 0);
  CHECK(s.original == std::vector<VertexId>{1, 2, 3, 4, 5});

  const auto w = protect_vertex(wheel(10), 0);
  CHECK(w.graph == cycle(10));
  CHECK(cascade::max_damage_time(wheel(10)).steps == 2);
  CHECK(cascade::max_damage_time(w.graph).steps == 5);

  const auto p3 = protect_vertex(path(3), 1);
  CHECK(p3.graph.edge_count() == 0);
  CHECK(p3.original == std::vector<VertexId>{0, 2});

  CHECK_THROWS_AS(protect_vertex(path(3), 3), std::out_of_range);
}

TEST_CASE("protection_impact") {
  const auto k4 = protection_impact(complete(4), 2);
  CHECK(k4.t_max_before == 1);
  CHECK(k4.t_max_after == 1);
  CHECK_FALSE(k4.disconnected_after);
  REQUIRE(k4.components.size() == 1);
  CHECK(k4.components[0].vertices == std::vector<VertexId>{0, 1, 3});

  for (std::size_t rim : {5, 10, 11}) {
    const auto w = protection_impact(wheel(rim), 0);
    CHECK(w.t_max_before == 2);
    // Bidirectional spread around an N-ring takes floor(N/2) steps from every start.
    CHECK(w.t_max_after == rim / 2);
    CHECK(w.t_min_after == rim / 2);
  }

  const auto s = protection_impact(star(4), 0);
  CHECK(s.disconnected_after);
  CHECK_FALSE(s.t_max_after.has_value());
  CHECK(s.components.size() == 4);
  for (const auto& c : s.components) {
    CHECK(c.t_max == 0);
    CHECK(c.vertices.size() == 1);
  }
  CHECK_THROWS_AS(protection_impact(path(3), 7), std::out_of_range);
}

}  // namespace
}  // namespace netfail
