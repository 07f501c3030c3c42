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

#include <Eigen/Dense>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "doctest.h"
#include "netfail/cascade.h"
#include "netfail/errors.h"
#include "netfail/graph.h"
#include "netfail/random_graph.h"
#include "netfail/rng.h"
#include "netfail/spectral.h"
#include "support/corpus.h"
#include "support/oracles.h"

namespace netfail {
namespace {

using spectral::dominant_eigenvalue;
using spectral::eig_symmetric;
using spectral::matrix_exponential;
using spectral::spectral_power;

Matrix random_symmetric(std::size_t n, std::uint64_t seed) {
  rng::Stream s(seed);
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = 2.0 * s.uniform() - 1.0;
  return m;
}

Matrix random_square(std::size_t n, double scale, std::uint64_t seed) {
  rng::Stream s(seed);
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = scale * (2.0 * s.uniform() - 1.0);
  return m;
}

TEST_CASE("eig_symmetric on closed-form spectra") {
  const auto id = eig_symmetric(Matrix::identity(3));
  for (double l : id.eigenvalues) CHECK(l == doctest::Approx(1.0).epsilon(1e-12));

  const auto k2 = eig_symmetric(adjacency_matrix(testing::complete(2)));
  CHECK(k2.eigenvalues[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(k2.eigenvalues[1] == doctest::Approx(-1.0).epsilon(1e-12));

  const auto k3 = eig_symmetric(adjacency_matrix(testing::complete(3)));
  CHECK(k3.eigenvalues[0] == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(k3.eigenvalues[1] == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(k3.eigenvalues[2] == doctest::Approx(-1.0).epsilon(1e-12));
}

TEST_CASE("eig_symmetric reconstructs and is orthogonal") {
  for (std::size_t n : {1, 2, 5, 17, 33, 50}) {
    const Matrix m = random_symmetric(n, n);
    const auto eig = eig_symmetric(m);
    CHECK(max_abs(eig.reconstruct() - m) <= 1e-8);
    const Matrix btb = multiply(eig.basis.transpose(), eig.basis);
    CHECK(max_abs(btb - Matrix::identity(n)) <= 1e-10);
    CHECK(std::is_sorted(eig.eigenvalues.rbegin(), eig.eigenvalues.rend()));
  }
}

TEST_CASE("eig_symmetric agrees with Eigen's self-adjoint solver") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Matrix m = random_symmetric(20, 100 + seed);
    Eigen::MatrixXd e(20, 20);
    for (int i = 0; i < 20; ++i)
      for (int j = 0; j < 20; ++j) e(i, j) = m(i, j);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(e);
    const auto ours = eig_symmetric(m);
    for (int i = 0; i < 20; ++i)
      CHECK(ours.eigenvalues[i] == doctest::Approx(solver.eigenvalues()(19 - i)).epsilon(1e-10));
  }
}

TEST_CASE("eig_symmetric rejects non-symmetric input") {
  Matrix m(2, 2);
  m(0, 1) = 1.0;
  CHECK_THROWS_AS(eig_symmetric(m), std::invalid_argument);
  CHECK_THROWS_AS(eig_symmetric(Matrix(2, 3)), std::invalid_argument);
}

TEST_CASE("spectral_power") {
  const Matrix any = random_symmetric(4, 9);
  CHECK(spectral_power(any, 0) == Matrix::identity(4));

  const Matrix k3sq = spectral_power(adjacency_matrix(testing::complete(3)), 2);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      CHECK(k3sq(i, j) == doctest::Approx(i == j ? 2.0 : 1.0).epsilon(1e-12));

  const Matrix p3sq = spectral_power(adjacency_matrix(testing::path(3)), 2);
  CHECK(p3sq(0, 2) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("spectral_power matches iterated multiplication") {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const Matrix c = adjacency_matrix(random_graph::gnp(30, 0.15, seed));
    Matrix iterated = Matrix::identity(30);
    for (unsigned t = 1; t <= 10; ++t) {
      iterated = multiply(iterated, c, Execution::kSerial);
      const Matrix spectral = spectral_power(c, t);
      const double scale = std::max(1.0, max_abs(iterated));
      CHECK(max_abs(spectral - iterated) / scale <= 1e-6);
    }
  }
}

TEST_CASE("dominant eigenvalue on known spectra") {
  for (std::size_t n : {2, 3, 5, 8, 12})
    CHECK(dominant_eigenvalue(adjacency_matrix(testing::complete(n))) ==
          doctest::Approx(static_cast<double>(n - 1)).epsilon(1e-9));
  // Bipartite: +2 and -2 tie in magnitude.
  CHECK(dominant_eigenvalue(adjacency_matrix(testing::cycle(4))) == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(dominant_eigenvalue(adjacency_matrix(testing::star(3))) ==
        doctest::Approx(std::sqrt(3.0)).epsilon(1e-9));
  CHECK(dominant_eigenvalue(adjacency_matrix(testing::cycle(7))) == doctest::Approx(2.0).epsilon(1e-9));
  CHECK_THROWS_AS(dominant_eigenvalue(Matrix(3, 3)), std::invalid_argument);

  // A negative dominant eigenvalue, as in a rate generator.
  Matrix gen(2, 2);
  gen(0, 0) = -2.0;
  gen(0, 1) = 2.0;
  CHECK(dominant_eigenvalue(gen) == doctest::Approx(-2.0).epsilon(1e-8));
}

TEST_CASE("dominant eigenvalue agrees with Jacobi and the Perron bound") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const Graph g = random_graph::gnp(30, 0.15, seed);
    if (g.edge_count() == 0) continue;
    const Matrix c = adjacency_matrix(g);
    const double lambda = dominant_eigenvalue(c);
    const auto eig = eig_symmetric(c);
    CHECK(lambda == doctest::Approx(eig.eigenvalues.front()).epsilon(1e-9));
    CHECK(lambda <= norm_inf(c) + 1e-12);
  }
}

TEST_CASE("matrix exponential closed forms") {
  CHECK(max_abs(matrix_exponential(Matrix(3, 3), 5.0) - Matrix::identity(3)) == 0.0);

  const double diag_values[] = {0.3, -1.7};
  const Matrix d = Matrix::diagonal(diag_values);
  const Matrix ed = matrix_exponential(d, 2.0);
  CHECK(ed(0, 0) == doctest::Approx(std::exp(0.6)).epsilon(1e-13));
  CHECK(ed(1, 1) == doctest::Approx(std::exp(-3.4)).epsilon(1e-13));
  CHECK(ed(0, 1) == 0.0);

  Matrix two_state(2, 2);
  two_state(0, 0) = -1.0;
  two_state(0, 1) = 1.0;
  const Matrix e = matrix_exponential(two_state, std::numbers::ln2);
  CHECK(std::abs(e(0, 0) - 0.5) <= 1e-12);
  CHECK(std::abs(e(0, 1) - 0.5) <= 1e-12);
}

TEST_CASE("matrix exponential agrees with an RK4 integration oracle") {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const Matrix m = random_square(6, 0.8, seed);
    for (double t : {0.1, 1.0, 3.0}) {
      const Matrix ours = matrix_exponential(m, t);
      const Matrix oracle = testing::rk4_propagate(Matrix::identity(6), m, t, 4000);
      CHECK(max_abs(ours - oracle) / std::max(1.0, max_abs(oracle)) <= 1e-8);
    }
  }
}

TEST_CASE("matrix exponential semigroup property") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const std::size_t n = 2 + seed % 9;
    Matrix m = random_square(n, 1.0, 50 + seed);
    m *= 1.0 / std::max(1.0, norm_1(m));  // ||M|| <= 1
    const double s = 0.3 + 0.1 * static_cast<double>(seed % 5), t = 1.1;
    const Matrix lhs = matrix_exponential(m, s + t);
    const Matrix rhs = multiply(matrix_exponential(m, s), matrix_exponential(m, t));
    CHECK(max_abs(lhs - rhs) <= 1e-8);
  }
}

TEST_CASE("matrix exponential reports overflow") {
  Matrix m(1, 1);
  m(0, 0) = 1.0;
  CHECK_THROWS_AS(matrix_exponential(m, 1000.0), std::overflow_error);
}

}  // namespace
}  // namespace netfail
