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

#include <cstddef>

#include "strobo/matcore.hpp"

namespace strobo {

inline constexpr double kDensityHermiticityTol = 1e-13;
inline constexpr double kDensityTraceTol = 1e-12;
inline constexpr double kDensityMinEigenvalue = -1e-10;

/// A validated quantum state: Hermitian, unit trace, positive semidefinite
/// (up to the tolerances above).
class DensityMatrix {
public:
  explicit DensityMatrix(ComplexMatrix m);

  static DensityMatrix maximally_mixed(std::size_t n);
  /// |psi><psi| / <psi|psi>.
  static DensityMatrix pure(const ComplexVector& psi);
  /// (I + x sx + y sy + z sz) / 2.
  static DensityMatrix qubit(double x, double y, double z);

  const ComplexMatrix& matrix() const { return matrix_; }
  std::size_t dim() const { return static_cast<std::size_t>(matrix_.rows()); }
  double min_eigenvalue() const;

private:
  ComplexMatrix matrix_;
};

/// Largest entrywise deviation |M - M^dagger|.
double hermiticity_defect(const ComplexMatrix& m);
/// (M + M^dagger) / 2.
ComplexMatrix hermitian_part(const ComplexMatrix& m);
/// Smallest eigenvalue of the Hermitian part of m.
double min_hermitian_eigenvalue(const ComplexMatrix& m);

/// Checks the DensityMatrix invariants without throwing.
bool is_density_matrix(const ComplexMatrix& m);

}  // namespace strobo
