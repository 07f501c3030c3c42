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

#ifndef NETFAIL_MATRIX_H_
#define NETFAIL_MATRIX_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "netfail/parallel.h"

namespace netfail {

// Dense row-major real matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n);
  static Matrix diagonal(std::span<const double> values);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<double> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const double> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }
  std::span<const double> values() const { return data_; }

  Matrix transpose() const;
  Matrix& operator*=(double s);
  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

Matrix operator*(double s, Matrix m);
Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);

// Matrix product. The parallel kernel splits rows across workers; every
// output entry is accumulated in the same order as the serial reference.
Matrix multiply(const Matrix& a, const Matrix& b,
                Execution exec = Execution::kParallel);

// Row vector times matrix.
std::vector<double> left_multiply(std::span<const double> x, const Matrix& m);

double max_abs(const Matrix& m);
double norm_1(const Matrix& m);     // max column sum
double norm_inf(const Matrix& m);   // max row sum
bool all_finite(const Matrix& m);
bool is_symmetric(const Matrix& m, double tol);

// Dense boolean matrix with bit-packed rows.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), words_((cols + 63) / 64),
        bits_(rows * words_, 0) {}

  static BitMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t words_per_row() const { return words_; }

  bool test(std::size_t i, std::size_t j) const {
    return (bits_[i * words_ + j / 64] >> (j % 64)) & 1U;
  }
  void set(std::size_t i, std::size_t j, bool value = true) {
    auto& w = bits_[i * words_ + j / 64];
    const std::uint64_t mask = std::uint64_t{1} << (j % 64);
    w = value ? (w | mask) : (w & ~mask);
  }

  std::span<std::uint64_t> row_words(std::size_t i) {
    return {bits_.data() + i * words_, words_};
  }
  std::span<const std::uint64_t> row_words(std::size_t i) const {
    return {bits_.data() + i * words_, words_};
  }

  bool row_any(std::size_t i) const;
  bool row_all(std::size_t i) const;
  std::size_t row_count(std::size_t i) const;
  std::size_t count() const;
  void clear_row(std::size_t i);

  bool operator==(const BitMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

// Boolean-semiring product: out(i,j) = OR_k a(i,k) AND b(k,j).
BitMatrix boolean_product(const BitMatrix& a, const BitMatrix& b,
                          Execution exec = Execution::kParallel);

}  // namespace netfail

#endif  // NETFAIL_MATRIX_H_
