// Copyright 2026 The strobo Authors
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

#pragma once

// Dense complex linear-algebra kernels shared by every other module:
// column-stacking vectorization, the Hilbert-Schmidt geometry, numerical
// rank, the matrix exponential and the minimal-polynomial degree.

#include <complex>
#include <cstddef>
#include <string_view>

#include <Eigen/Dense>

namespace strobo {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

inline constexpr double kDefaultRankTolerance = 1e-10;

/// Relative singular-value threshold used to decide numerical rank.
/// A singular value s counts when s > value * s_max * max(rows, cols).
class RankTolerance {
public:
  constexpr RankTolerance() = default;
  explicit RankTolerance(double value);

  constexpr double value() const { return value_; }

private:
  double value_ = kDefaultRankTolerance;
};

bool all_finite(const ComplexMatrix& m);
void require_square(const ComplexMatrix& m, std::string_view what);
void require_finite(const ComplexMatrix& m, std::string_view what);
void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, std::string_view what);

/// Column-stacked coordinates: column 0 top-to-bottom, then column 1, ...
ComplexVector vectorize(const ComplexMatrix& m);
/// Inverse of vectorize; the length must be a perfect square.
ComplexMatrix devectorize(const ComplexVector& v);

/// Tr(A^dagger B).
Complex hs_inner(const ComplexMatrix& a, const ComplexMatrix& b);
double hs_norm(const ComplexMatrix& m);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix identity(std::size_t n);

/// Matrix exponential by scaling and squaring with a degree-13 Pade
/// approximant. Throws RangeError when the input norm or the result is not
/// representable.
ComplexMatrix expm(const ComplexMatrix& m);

/// Singular-value cutoff shared by the rank and least-squares routines.
double rank_cutoff(double s_max, Eigen::Index rows, Eigen::Index cols, RankTolerance tol);

std::size_t numerical_rank(const ComplexMatrix& m, RankTolerance tol = {});
std::size_t numerical_rank(const RealMatrix& m, RankTolerance tol = {});

struct MinimalPolynomialDegree {
  std::size_t degree = 1;
  /// Set when the deciding residual lies within a factor of 10 of the cutoff.
  bool ambiguous = false;
};

/// Degree of the minimal polynomial, found as the grade of the identity in
/// the Krylov sequence I, M, M^2, ... (Arnoldi with full re-orthogonalization).
/// A new power is accepted when its residual against the previous ones
/// exceeds tol * ||M||_2 * dim.
MinimalPolynomialDegree minimal_poly_degree(const ComplexMatrix& m, RankTolerance tol = {});

namespace pauli {
ComplexMatrix x();
ComplexMatrix y();
ComplexMatrix z();
}  // namespace pauli

}  // namespace strobo
