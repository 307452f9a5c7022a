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

#include "strobo/density_matrix.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "strobo/errors.hpp"

namespace strobo {

double hermiticity_defect(const ComplexMatrix& m) {
  if (m.size() == 0) return 0.0;
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

ComplexMatrix hermitian_part(const ComplexMatrix& m) { return 0.5 * (m + m.adjoint()); }

double min_hermitian_eigenvalue(const ComplexMatrix& m) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(hermitian_part(m), Eigen::EigenvaluesOnly);
  return eig.eigenvalues()(0);
}

bool is_density_matrix(const ComplexMatrix& m) {
  if (m.rows() != m.cols() || m.rows() == 0 || !all_finite(m)) return false;
  if (hermiticity_defect(m) > kDensityHermiticityTol) return false;
  if (std::abs(m.trace() - Complex(1.0)) > kDensityTraceTol) return false;
  return min_hermitian_eigenvalue(m) >= kDensityMinEigenvalue;
}

DensityMatrix::DensityMatrix(ComplexMatrix m) : matrix_(std::move(m)) {
  require_square(matrix_, "DensityMatrix");
  if (matrix_.rows() == 0) throw DimensionError("DensityMatrix: empty matrix");
  require_finite(matrix_, "DensityMatrix");
  const double defect = hermiticity_defect(matrix_);
  if (defect > kDensityHermiticityTol) {
    throw ValidationError("DensityMatrix: not Hermitian (defect " + std::to_string(defect) + ")");
  }
  const Complex trace = matrix_.trace();
  if (std::abs(trace - Complex(1.0)) > kDensityTraceTol) {
    throw ValidationError("DensityMatrix: trace " + std::to_string(trace.real()) + " != 1");
  }
  const double lowest = min_hermitian_eigenvalue(matrix_);
  if (lowest < kDensityMinEigenvalue) {
    throw ValidationError("DensityMatrix: negative eigenvalue " + std::to_string(lowest));
  }
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t n) {
  if (n == 0) throw DimensionError("maximally_mixed: n must be positive");
  return DensityMatrix(identity(n) / static_cast<double>(n));
}

DensityMatrix DensityMatrix::pure(const ComplexVector& psi) {
  const double norm2 = psi.squaredNorm();
  if (!(norm2 > 0.0)) throw ValidationError("DensityMatrix::pure: zero vector");
  return DensityMatrix(hermitian_part(psi * psi.adjoint() / norm2));
}

DensityMatrix DensityMatrix::qubit(double x, double y, double z) {
  return DensityMatrix(0.5 * (identity(2) + x * pauli::x() + y * pauli::y() + z * pauli::z()));
}

double DensityMatrix::min_eigenvalue() const { return min_hermitian_eigenvalue(matrix_); }

}  // namespace strobo
