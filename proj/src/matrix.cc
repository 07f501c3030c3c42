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

#include "netfail/matrix.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace netfail {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::diagonal(std::span<const double> values) {
  Matrix m(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix& Matrix::operator*=(double s) {
  for (auto& v : data_) v *= s;
  return *this;
}

Matrix& Matrix::operator+=(const Matrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw std::invalid_argument("matrix dimension mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw std::invalid_argument("matrix dimension mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

Matrix operator*(double s, Matrix m) { return m *= s; }
Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }

namespace {

void multiply_row(const Matrix& a, const Matrix& b, std::size_t i, Matrix& out) {
  auto dst = out.row(i);
  for (std::size_t k = 0; k < a.cols(); ++k) {
    const double aik = a(i, k);
    if (aik == 0.0) continue;
    const auto src = b.row(k);
    for (std::size_t j = 0; j < dst.size(); ++j) dst[j] += aik * src[j];
  }
}

}  // namespace

Matrix multiply(const Matrix& a, const Matrix& b, Execution exec) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix dimension mismatch");
  Matrix out(a.rows(), b.cols());
  const auto rows = static_cast<std::ptrdiff_t>(a.rows());
  if (exec == Execution::kSerial) {
    // Reference: textbook dot products, same k order as the kernel.
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) {
        double s = 0.0;
        for (std::size_t k = 0; k < a.cols(); ++k) s += a(i, k) * b(k, j);
        out(i, j) = s;
      }
    return out;
  }
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < rows; ++i) multiply_row(a, b, i, out);
  return out;
}

std::vector<double> left_multiply(std::span<const double> x, const Matrix& m) {
  if (x.size() != m.rows()) throw std::invalid_argument("vector/matrix dimension mismatch");
  std::vector<double> y(m.cols(), 0.0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0.0) continue;
    const auto src = m.row(i);
    for (std::size_t j = 0; j < y.size(); ++j) y[j] += x[i] * src[j];
  }
  return y;
}

double max_abs(const Matrix& m) {
  double best = 0.0;
  for (double v : m.values()) best = std::max(best, std::abs(v));
  return best;
}

double norm_1(const Matrix& m) {
  double best = 0.0;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i) s += std::abs(m(i, j));
    best = std::max(best, s);
  }
  return best;
}

double norm_inf(const Matrix& m) {
  double best = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    double s = 0.0;
    for (double v : m.row(i)) s += std::abs(v);
    best = std::max(best, s);
  }
  return best;
}

bool all_finite(const Matrix& m) {
  return std::all_of(m.values().begin(), m.values().end(),
                     [](double v) { return std::isfinite(v); });
}

bool is_symmetric(const Matrix& m, double tol) {
  if (!m.square()) return false;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i + 1; j < m.cols(); ++j)
      if (std::abs(m(i, j) - m(j, i)) > tol) return false;
  return true;
}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

bool BitMatrix::row_any(std::size_t i) const {
  const auto w = row_words(i);
  return std::any_of(w.begin(), w.end(), [](std::uint64_t x) { return x != 0; });
}

bool BitMatrix::row_all(std::size_t i) const {
  return row_count(i) == cols_;
}

std::size_t BitMatrix::row_count(std::size_t i) const {
  std::size_t c = 0;
  for (std::uint64_t x : row_words(i)) c += static_cast<std::size_t>(std::popcount(x));
  return c;
}

std::size_t BitMatrix::count() const {
  std::size_t c = 0;
  for (std::uint64_t x : bits_) c += static_cast<std::size_t>(std::popcount(x));
  return c;
}

void BitMatrix::clear_row(std::size_t i) {
  for (auto& w : row_words(i)) w = 0;
}

namespace {

// Row i of a (x) b: OR of the rows of b selected by the bits of row i of a.
void boolean_row(const BitMatrix& a, const BitMatrix& b, std::size_t i, BitMatrix& out) {
  auto dst = out.row_words(i);
  const auto sel = a.row_words(i);
  for (std::size_t w = 0; w < sel.size(); ++w) {
    std::uint64_t bits = sel[w];
    while (bits != 0) {
      const std::size_t k = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
      bits &= bits - 1;
      const auto src = b.row_words(k);
      for (std::size_t x = 0; x < dst.size(); ++x) dst[x] |= src[x];
    }
  }
}

}  // namespace

BitMatrix boolean_product(const BitMatrix& a, const BitMatrix& b, Execution exec) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix dimension mismatch");
  BitMatrix out(a.rows(), b.cols());
  const auto rows = static_cast<std::ptrdiff_t>(a.rows());
  if (exec == Execution::kSerial) {
    // Reference: entry by entry, no word-level tricks.
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j)
        for (std::size_t k = 0; k < a.cols(); ++k)
          if (a.test(i, k) && b.test(k, j)) {
            out.set(i, j);
            break;
          }
    return out;
  }
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < rows; ++i) boolean_row(a, b, i, out);
  return out;
}

}  // namespace netfail
