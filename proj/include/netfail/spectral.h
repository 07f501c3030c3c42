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

#ifndef NETFAIL_SPECTRAL_H_
#define NETFAIL_SPECTRAL_H_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "netfail/matrix.h"

namespace netfail::spectral {

// M = B * diag(eigenvalues) * B^T with B orthogonal. Eigenvalues are sorted
// in descending order; column i of `basis` belongs to eigenvalues[i].
struct EigenDecomposition {
  std::vector<double> eigenvalues;
  Matrix basis;

  Matrix reconstruct() const;
};

inline constexpr double kJacobiTolerance = 1e-10;
inline constexpr int kJacobiMaxSweeps = 100;

// Cyclic Jacobi rotations. Stops once the off-diagonal Frobenius norm of
// B^T M B is below tol * max(1, ||M||_F). Throws std::invalid_argument for a
// non-square or non-symmetric matrix and ConvergenceError past the sweep cap.
EigenDecomposition eig_symmetric(const Matrix& m, double tol = kJacobiTolerance);

// B * diag(lambda^t) * B^T.
Matrix spectral_power(const Matrix& m, unsigned t, double tol = kJacobiTolerance);

struct PowerIterationOptions {
  double tol = 1e-10;
  std::size_t max_iter = 100000;
  std::uint64_t seed = 0x5eed;
};

// Largest-magnitude real eigenvalue by shifted power iteration with a
// Rayleigh-quotient estimate. Two runs with shifts +s and -s are made so a
// +/- lambda pair (bipartite graphs) cannot stall convergence; of equal
// magnitudes the positive one is returned.
double dominant_eigenvalue(const Matrix& m, const PowerIterationOptions& opts = {});

inline constexpr double kExpTolerance = 1e-8;

// e^{M t} by scaling and squaring: M t is scaled by 2^-s until its 1-norm is
// at most 1/2, a Taylor series is summed to machine precision, and the result
// is squared s times. Throws std::overflow_error when the result is not
// finite.
Matrix matrix_exponential(const Matrix& m, double t);

}  // namespace netfail::spectral

#endif  // NETFAIL_SPECTRAL_H_
