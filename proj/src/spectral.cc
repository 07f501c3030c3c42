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

#include "netfail/spectral.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "netfail/errors.h"
#include "netfail/rng.h"

namespace netfail::spectral {

Matrix EigenDecomposition::reconstruct() const {
  const std::size_t n = eigenvalues.size();
  Matrix scaled = basis;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) scaled(i, j) *= eigenvalues[j];
  return multiply(scaled, basis.transpose());
}

namespace {

double frobenius(const Matrix& m) {
  double s = 0.0;
  for (double v : m.values()) s += v * v;
  return std::sqrt(s);
}

double off_diagonal_norm(const Matrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) s += a(i, j) * a(i, j);
  return std::sqrt(s);
}

// Applies the rotation that zeroes a(p,q) to a (both sides) and to v (right).
void rotate(Matrix& a, Matrix& v, std::size_t p, std::size_t q) {
  const double apq = a(p, q);
  const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
  const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;
  const std::size_t n = a.rows();
  for (std::size_t k = 0; k < n; ++k) {
    const double akp = a(k, p);
    const double akq = a(k, q);
    a(k, p) = c * akp - s * akq;
    a(k, q) = s * akp + c * akq;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const double apk = a(p, k);
    const double aqk = a(q, k);
    a(p, k) = c * apk - s * aqk;
    a(q, k) = s * apk + c * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double vkp = v(k, p);
    const double vkq = v(k, q);
    v(k, p) = c * vkp - s * vkq;
    v(k, q) = s * vkp + c * vkq;
  }
}

}  // namespace

EigenDecomposition eig_symmetric(const Matrix& m, double tol) {
  if (!m.square()) throw std::invalid_argument("eig_symmetric: matrix is not square");
  const double scale = std::max(1.0, frobenius(m));
  if (!is_symmetric(m, tol * scale))
    throw std::invalid_argument("eig_symmetric: matrix is not symmetric");

  const std::size_t n = m.rows();
  Matrix a = m;
  // Symmetrize away sub-tolerance asymmetry so rotations stay consistent.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) a(i, j) = a(j, i) = 0.5 * (m(i, j) + m(j, i));
  Matrix v = Matrix::identity(n);

  const double target = tol * scale;
  int sweep = 0;
  while (off_diagonal_norm(a) > target) {
    if (++sweep > kJacobiMaxSweeps)
      throw ConvergenceError("eig_symmetric: no convergence after " +
                             std::to_string(kJacobiMaxSweeps) + " sweeps");
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q)
        if (a(p, q) != 0.0) rotate(a, v, p, q);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a(x, x) > a(y, y); });
  EigenDecomposition out{std::vector<double>(n), Matrix(n, n)};
  for (std::size_t c = 0; c < n; ++c) {
    out.eigenvalues[c] = a(order[c], order[c]);
    for (std::size_t r = 0; r < n; ++r) out.basis(r, c) = v(r, order[c]);
  }
  return out;
}

Matrix spectral_power(const Matrix& m, unsigned t, double tol) {
  if (t == 0) {
    if (!m.square()) throw std::invalid_argument("spectral_power: matrix is not square");
    return Matrix::identity(m.rows());
  }
  auto eig = eig_symmetric(m, tol);
  for (double& lambda : eig.eigenvalues) lambda = std::pow(lambda, static_cast<double>(t));
  return eig.reconstruct();
}

namespace {

struct PowerResult {
  double value;
  bool converged;
};

PowerResult shifted_power_iteration(const Matrix& m, double shift,
                                    const PowerIterationOptions& opts) {
  const std::size_t n = m.rows();
  rng::Stream stream(opts.seed);
  std::vector<double> x(n);
  for (double& xi : x) xi = 0.5 + stream.uniform();
  auto normalize = [](std::vector<double>& y) {
    double s = 0.0;
    for (double yi : y) s += yi * yi;
    s = std::sqrt(s);
    for (double& yi : y) yi /= s;
  };
  normalize(x);

  const double scale = std::max(1.0, norm_inf(m));
  std::vector<double> y(n);
  double estimate = 0.0;
  for (std::size_t iter = 0; iter < opts.max_iter; ++iter) {
    for (std::size_t i = 0; i < n; ++i) {
      double s = 0.0;
      const auto row = m.row(i);
      for (std::size_t j = 0; j < n; ++j) s += row[j] * x[j];
      y[i] = s;
    }
    // Rayleigh quotient of the unshifted matrix and its residual.
    estimate = std::inner_product(x.begin(), x.end(), y.begin(), 0.0);
    double residual = 0.0;
    for (std::size_t i = 0; i < n; ++i) residual += (y[i] - estimate * x[i]) * (y[i] - estimate * x[i]);
    residual = std::sqrt(residual);
    if (residual <= opts.tol * scale) return {estimate, true};
    for (std::size_t i = 0; i < n; ++i) y[i] += shift * x[i];
    double norm = 0.0;
    for (double yi : y) norm += yi * yi;
    if (norm == 0.0) return {estimate, true};
    x.swap(y);
    normalize(x);
  }
  return {estimate, false};
}

}  // namespace

double dominant_eigenvalue(const Matrix& m, const PowerIterationOptions& opts) {
  if (!m.square() || m.rows() == 0)
    throw std::invalid_argument("dominant_eigenvalue: matrix must be square and non-empty");
  if (max_abs(m) == 0.0) throw std::invalid_argument("dominant_eigenvalue: zero matrix");
  const double shift = 0.05 * norm_inf(m);
  const auto plus = shifted_power_iteration(m, shift, opts);
  const auto minus = shifted_power_iteration(m, -shift, opts);
  if (!plus.converged && !minus.converged)
    throw ConvergenceError("dominant_eigenvalue: power iteration did not converge");
  if (!minus.converged) return plus.value;
  if (!plus.converged) return minus.value;
  const double slack = std::sqrt(opts.tol) * std::max(1.0, std::abs(plus.value));
  return std::abs(minus.value) > std::abs(plus.value) + slack ? minus.value : plus.value;
}

Matrix matrix_exponential(const Matrix& m, double t) {
  if (!m.square()) throw std::invalid_argument("matrix_exponential: matrix is not square");
  if (!all_finite(m) || !std::isfinite(t))
    throw std::invalid_argument("matrix_exponential: non-finite input");
  const std::size_t n = m.rows();
  Matrix a = t * m;
  const double norm = norm_1(a);
  int squarings = 0;
  if (norm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
  if (squarings > 1000) throw std::overflow_error("matrix_exponential: ||M t|| too large");
  a *= std::ldexp(1.0, -squarings);

  // Taylor series; with ||a||_1 <= 1/2 the terms fall below 2^-53 well before
  // 30 terms.
  Matrix result = Matrix::identity(n);
  Matrix term = Matrix::identity(n);
  for (int k = 1; k <= 30; ++k) {
    term = multiply(term, a);
    term *= 1.0 / k;
    result += term;
    if (norm_1(term) <= 1e-18 * norm_1(result)) break;
  }
  for (int s = 0; s < squarings; ++s) {
    result = multiply(result, result);
    if (!all_finite(result)) break;
  }
  if (!all_finite(result)) throw std::overflow_error("matrix_exponential: result overflowed");
  return result;
}

}  // namespace netfail::spectral
