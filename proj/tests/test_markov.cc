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

#include <bit>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "netfail/errors.h"
#include "netfail/graph.h"
#include "netfail/markov.h"
#include "netfail/random_graph.h"
#include "netfail/rng.h"
#include "support/corpus.h"

namespace netfail {
namespace {

using namespace markov;
using testing::complete;
using testing::cycle;
using testing::path;

Matrix from_rows(std::initializer_list<std::initializer_list<double>> rows) {
  Matrix m(rows.size(), rows.begin()->size());
  std::size_t i = 0;
  for (const auto& r : rows) {
    std::size_t j = 0;
    for (double v : r) m(i, j++) = v;
    ++i;
  }
  return m;
}

StateVector distribution(std::vector<double> p) { return {std::move(p), Semantics::kDistribution}; }

double sum(const StateVector& s) { return std::accumulate(s.probabilities.begin(), s.probabilities.end(), 0.0); }

Matrix random_generator(std::size_t n, std::uint64_t seed) {
  rng::Stream s(seed);
  Matrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || s.uniform() < 0.4) continue;
      a(i, j) = 2.0 * s.uniform();
      row += a(i, j);
    }
    a(i, i) = -row;
  }
  return a;
}

TEST_CASE("evolve_continuous examples") {
  const auto pi0 = distribution({0.2, 0.3, 0.5});
  const auto flat = evolve_continuous(pi0, RateMatrix(Matrix(3, 3), RateKind::kGenerator), 4.0);
  CHECK(flat.probabilities == pi0.probabilities);

  const RateMatrix two(from_rows({{-1, 1}, {0, 0}}), RateKind::kGenerator);
  const auto half = evolve_continuous(StateVector::point_mass(2, 0), two, std::numbers::ln2);
  CHECK(std::abs(half.probabilities[0] - 0.5) <= 1e-12);
  CHECK(std::abs(half.probabilities[1] - 0.5) <= 1e-12);
  for (double t : {0.1, 0.7, 3.0, 12.0}) {
    const auto p = evolve_continuous(StateVector::point_mass(2, 0), two, t);
    CHECK(std::abs(p.probabilities[0] - std::exp(-t)) <= 1e-12);
    CHECK(std::abs(p.probabilities[1] + std::expm1(-t)) <= 1e-12);
  }

  CHECK_THROWS_AS(evolve_continuous(pi0, two, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(evolve_continuous(StateVector::point_mass(2, 0), two, -1.0), std::invalid_argument);
}

TEST_CASE("rate and transition matrices are validated") {
  CHECK_THROWS_AS(RateMatrix(from_rows({{-1, 0.5}, {0, 0}}), RateKind::kGenerator), std::invalid_argument);
  CHECK_THROWS_AS(RateMatrix(from_rows({{1, -1}, {0, 0}}), RateKind::kGenerator), std::invalid_argument);
  CHECK_NOTHROW(RateMatrix(from_rows({{1, -1}, {0, 0}}), RateKind::kGeneral));
  CHECK_THROWS_AS(TransitionMatrix(from_rows({{0.5, 0.4}, {0, 1}})), std::invalid_argument);
  CHECK_THROWS_AS(TransitionMatrix(from_rows({{1.5, -0.5}, {0, 1}})), std::invalid_argument);
  CHECK_THROWS_AS(distribution({0.5, 0.6}).validate(), std::invalid_argument);
  CHECK_NOTHROW(StateVector({0.5, 0.6}, Semantics::kMarginal).validate());
}

TEST_CASE("generator evolution stays on the simplex") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const std::size_t n = 2 + seed % 19;
    const RateMatrix a(random_generator(n, seed), RateKind::kGenerator);
    rng::Stream s(1000 + seed);
    std::vector<double> w(n);
    for (double& x : w) x = s.uniform();
    const double total = std::accumulate(w.begin(), w.end(), 0.0);
    for (double& x : w) x /= total;
    for (double t : {0.1, 1.0, 10.0}) {
      const auto p = evolve_continuous(distribution(w), a, t);
      CHECK(std::abs(sum(p) - 1.0) <= 1e-9);
      CHECK(*std::min_element(p.probabilities.begin(), p.probabilities.end()) >= -1e-9);
    }
  }
}

TEST_CASE("evolve_continuous semigroup") {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    const RateMatrix a(random_generator(6, 40 + seed), RateKind::kGenerator);
    const auto pi0 = StateVector::point_mass(6, seed % 6);
    const auto direct = evolve_continuous(pi0, a, 1.7);
    const auto split = evolve_continuous(evolve_continuous(pi0, a, 0.5), a, 1.2);
    for (std::size_t i = 0; i < 6; ++i)
      CHECK(std::abs(direct.probabilities[i] - split.probabilities[i]) <= 1e-8);
  }
}

TEST_CASE("general rate matrices evolve marginals") {
  const StateVector m({0.1, 0.0, 0.0}, Semantics::kMarginal);
  const auto out = evolve_continuous(m, RateMatrix(Matrix(3, 3), RateKind::kGeneral), 2.0);
  CHECK(out.probabilities == m.probabilities);
  CHECK(out.semantics == Semantics::kMarginal);
}

TEST_CASE("evolve_discrete examples") {
  const auto pi0 = distribution({0.25, 0.75});
  CHECK(evolve_discrete(pi0, TransitionMatrix(Matrix::identity(2)), 9).probabilities == pi0.probabilities);

  const auto swapped = evolve_discrete(StateVector::point_mass(2, 0), TransitionMatrix(from_rows({{0, 1}, {1, 0}})), 1);
  CHECK(swapped.probabilities == std::vector<double>{0.0, 1.0});

  const TransitionMatrix absorbing(from_rows({{0.5, 0.5}, {0, 1}}));
  for (std::size_t steps : {1, 5, 20, 60}) {
    const auto p = evolve_discrete(StateVector::point_mass(2, 0), absorbing, steps);
    CHECK(p.probabilities[0] == doctest::Approx(std::pow(0.5, steps)).epsilon(1e-12));
    CHECK(std::abs(sum(p) - 1.0) <= 1e-12);
  }
}

TEST_CASE("ergodic classes examples") {
  using Classes = std::vector<std::vector<std::size_t>>;
  const auto id = ergodic_classes(TransitionMatrix(Matrix::identity(3)));
  CHECK(id.recurrent == Classes{{0}, {1}, {2}});
  CHECK(id.transient.empty());

  const auto absorb = ergodic_classes(TransitionMatrix(from_rows({{0, 1}, {0, 1}})));
  CHECK(absorb.recurrent == Classes{{1}});
  CHECK(absorb.transient == std::vector<std::size_t>{0});

  const auto cycles = ergodic_classes(
      TransitionMatrix(from_rows({{0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, 1, 0, 0}})));
  CHECK(cycles.recurrent == Classes{{0, 2}, {1, 3}});
}

TEST_CASE("recurrent classes are closed and the partition is complete") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const std::size_t n = 3 + seed % 10;
    rng::Stream s(seed);
    Matrix p(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<std::size_t> targets;
      for (std::size_t j = 0; j < n; ++j)
        if (s.uniform() < 0.2) targets.push_back(j);
      if (targets.empty()) targets.push_back(i);
      for (std::size_t j : targets) p(i, j) = 1.0 / static_cast<double>(targets.size());
    }
    const auto part = ergodic_classes(TransitionMatrix(p));
    std::vector<int> owner(n, -1);
    std::size_t covered = part.transient.size();
    for (std::size_t c = 0; c < part.recurrent.size(); ++c) {
      covered += part.recurrent[c].size();
      for (std::size_t v : part.recurrent[c]) owner[v] = static_cast<int>(c);
    }
    CHECK(covered == n);
    CHECK_FALSE(part.recurrent.empty());
    for (std::size_t i = 0; i < n; ++i)
      if (owner[i] >= 0)
        for (std::size_t j = 0; j < n; ++j)
          if (p(i, j) > 0.0) CHECK(owner[j] == owner[i]);
  }
}

TEST_CASE("damage rate") {
  CHECK(damage_rate(adjacency_matrix(complete(5))) == doctest::Approx(4.0).epsilon(1e-9));
  CHECK(damage_rate(adjacency_matrix(cycle(6))) == doctest::Approx(2.0).epsilon(1e-9));
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const double lambda = damage_rate(adjacency_matrix(random_graph::gnp(200, 0.05, seed)));
    CHECK(lambda >= 10.0 - 3.0 * std::sqrt(10.0));
    CHECK(lambda <= 10.0 + 3.0 * std::sqrt(10.0));
  }
}

TEST_CASE("exact chain construction") {
  const auto k2 = exact_state_chain(complete(2), 1.5, std::vector<VertexId>{0});
  CHECK(k2.states == std::vector<std::uint32_t>{0b01, 0b11});
  const Matrix gen = k2.generator().entries();
  CHECK(gen(0, 0) == -1.5);
  CHECK(gen(0, 1) == 1.5);
  CHECK(gen(1, 0) == 0.0);
  CHECK(gen(1, 1) == 0.0);

  const auto single = exact_state_chain(Graph::from_edges(1, {}), 1.0, std::vector<VertexId>{0});
  CHECK(single.states.size() == 1);
  CHECK(single.transitions.empty());

  // S -> S + {v} at rate * |edges between v and S|.
  const auto k3 = exact_state_chain(complete(3), 1.0, std::vector<VertexId>{0});
  for (const auto& tr : k3.transitions) {
    const std::uint32_t from = k3.states[tr.from], to = k3.states[tr.to];
    CHECK(std::popcount(to) == std::popcount(from) + 1);
    CHECK(tr.rate == static_cast<double>(std::popcount(from)));
  }

  CHECK_THROWS_AS(exact_state_chain(path(15), 1.0, std::vector<VertexId>{0}), CapExceededError);
  CHECK_THROWS_AS(exact_state_chain(path(3), 1.0, std::vector<VertexId>{}), std::invalid_argument);
}

TEST_CASE("exact chain full-damage probability is non-decreasing") {
  const Graph g = testing::random_connected(7, 0.4, 2);
  const auto chain = exact_state_chain(g, 1.0, std::vector<VertexId>{0});
  const RateMatrix a = chain.generator();
  double previous = 0.0;
  for (double t = 0.0; t <= 6.0; t += 0.25) {
    const auto p = evolve_continuous(chain.initial, a, t);
    const double full = p.probabilities.back();  // the all-damaged mask sorts last
    CHECK(full >= previous - 1e-12);
    previous = full;
  }
  CHECK(previous > 0.9);
}

TEST_CASE("uniformization agrees with the dense exponential") {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const Graph g = testing::random_connected(8, 0.35, 70 + seed);
    const auto chain = exact_state_chain(g, 1.3, std::vector<VertexId>{static_cast<VertexId>(seed)});
    for (double t : {0.0, 0.4, 1.0, 3.0}) {
      const auto dense = evolve_continuous(chain.initial, chain.generator(), t);
      const auto unif = evolve_uniformized(chain, t);
      for (std::size_t i = 0; i < dense.probabilities.size(); ++i)
        CHECK(std::abs(dense.probabilities[i] - unif.probabilities[i]) <= 1e-10);
    }
  }
}

EpidemicParams params(std::vector<VertexId> seeds, double rate, std::vector<double> times,
                      std::size_t trials, std::uint64_t seed) {
  EpidemicParams p;
  p.rates = TransmissionRates::uniform(rate);
  p.seeds = std::move(seeds);
  p.sample_times = std::move(times);
  p.trials = trials;
  p.rng_seed = seed;
  return p;
}

TEST_CASE("epidemic examples") {
  const auto none = simulate_epidemic(path(4), params({1}, 0.0, {0.5, 5.0}, 200, 3));
  for (const auto& row : none.probabilities) CHECK(row == std::vector<double>{0, 1, 0, 0});

  const auto k2 = simulate_epidemic(complete(2), params({0}, 1.0, {1.0}, 10000, 1));
  const double exact = -std::expm1(-1.0);
  CHECK(std::abs(k2.probabilities[0][1] - exact) <= 3.0 * std::sqrt(exact * (1 - exact) / 10000));
  CHECK(k2.standard_errors[0][1] ==
        doctest::Approx(std::sqrt(k2.probabilities[0][1] * (1 - k2.probabilities[0][1]) / 10000)));

  const auto chain = exact_state_chain(path(3), 1.0, std::vector<VertexId>{0});
  const auto mc = simulate_epidemic(path(3), params({0}, 1.0, {0.5, 1.0, 2.0}, 10000, 2));
  for (std::size_t k = 0; k < 3; ++k) {
    const double p = chain.vertex_marginals(evolve_continuous(chain.initial, chain.generator(), mc.times[k]))[2];
    CHECK(std::abs(mc.probabilities[k][2] - p) <= 3.0 * std::sqrt(p * (1 - p) / 10000));
  }

  CHECK_THROWS_AS(simulate_epidemic(path(3), params({}, 1.0, {1.0}, 10, 0)), std::invalid_argument);
  CHECK_THROWS_AS(simulate_epidemic(path(3), params({0}, -1.0, {1.0}, 10, 0)), std::invalid_argument);
  CHECK_THROWS_AS(simulate_epidemic(path(3), params({0}, 1.0, {1.0}, 0, 0)), std::invalid_argument);
  CHECK_THROWS_AS(simulate_epidemic(path(3), params({5}, 1.0, {1.0}, 10, 0)), std::out_of_range);
}

TEST_CASE("per-edge rates") {
  // Only the edge {1,2} transmits.
  EpidemicParams p = params({1}, 0.0, {3.0}, 400, 8);
  p.rates = TransmissionRates::per_edge({0.0, 2.0});
  const auto out = simulate_epidemic(path(3), p);
  CHECK(out.probabilities[0][0] == 0.0);
  CHECK(out.probabilities[0][2] > 0.9);
  p.rates = TransmissionRates::per_edge({1.0});
  CHECK_THROWS_AS(simulate_epidemic(path(3), p), std::invalid_argument);
}

TEST_CASE("epidemic is reproducible for a fixed seed") {
  const Graph g = testing::random_connected(8, 0.3, 12);
  const auto a = simulate_epidemic(g, params({0}, 1.0, {1.0}, 500, 4));
  const auto b = simulate_epidemic(g, params({0}, 1.0, {1.0}, 500, 4));
  CHECK(a.probabilities == b.probabilities);
  const auto c = simulate_epidemic(g, params({0}, 1.0, {1.0}, 500, 5));
  CHECK(a.probabilities != c.probabilities);
}

TEST_CASE("higher rates never lower damage probabilities") {
  const Graph g = testing::random_connected(10, 0.3, 5);
  const std::vector<double> times{0.25, 0.5, 1.0};
  const auto slow = simulate_epidemic(g, params({0}, 0.5, times, 4000, 9));
  const auto fast = simulate_epidemic(g, params({0}, 1.5, times, 4000, 9));
  for (std::size_t k = 0; k < times.size(); ++k)
    for (std::size_t v = 0; v < 10; ++v) {
      const double noise = 3.0 * std::hypot(slow.standard_errors[k][v], fast.standard_errors[k][v]);
      CHECK(fast.probabilities[k][v] >= slow.probabilities[k][v] - noise);
    }
}

}  // namespace
}  // namespace netfail
