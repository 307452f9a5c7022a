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

// GKLS generators and both pictures of the evolution they generate:
//   L rho  = -i[H, rho] + sum_k g_k (V_k rho V_k^+ - 1/2 {V_k^+ V_k, rho})
//   L* Q   =  i[H, Q]   + sum_k g_k (V_k^+ Q V_k - 1/2 {V_k^+ V_k, Q})
// with hbar = 1 and rates in inverse time units.

#include <cstddef>
#include <memory>
#include <vector>

#include "strobo/density_matrix.hpp"
#include "strobo/hermdecomp.hpp"
#include "strobo/matcore.hpp"

namespace strobo {

struct Dissipator {
  ComplexMatrix op;
  double rate = 0.0;
};

enum class Picture { schrodinger, heisenberg };

struct Superoperator {
  std::size_t dim = 0;  ///< Hilbert-space dimension n; matrix is n^2 x n^2
  ComplexMatrix matrix;
  Picture picture = Picture::schrodinger;
};

/// Immutable generator. Copies share a lazily built superoperator cache.
class GklsGenerator {
public:
  GklsGenerator(HermitianObservable hamiltonian, std::vector<Dissipator> dissipators);

  std::size_t dim() const { return hamiltonian_.dim(); }
  const HermitianObservable& hamiltonian() const { return hamiltonian_; }
  const std::vector<Dissipator>& dissipators() const { return dissipators_; }

  /// Matrix of L in column-stacked coordinates.
  const Superoperator& schrodinger() const;
  /// Matrix of L*, the Hilbert-Schmidt adjoint.
  const Superoperator& heisenberg() const;

  /// Returns a copy with the Hamiltonian and every rate multiplied by c > 0.
  GklsGenerator scaled(double c) const;

private:
  struct Cache;

  HermitianObservable hamiltonian_;
  std::vector<Dissipator> dissipators_;
  std::shared_ptr<Cache> cache_;
};

/// Validates dimensions, rates and Hermiticity, then builds the generator.
GklsGenerator build_gkls(const HermitianObservable& hamiltonian, std::vector<Dissipator> dissipators);

/// Defining action L(rho) on an arbitrary square matrix.
ComplexMatrix apply(const GklsGenerator& gen, const ComplexMatrix& rho);
/// Adjoint action L*(Q).
ComplexMatrix apply_adjoint(const GklsGenerator& gen, const ComplexMatrix& q);

Superoperator schrodinger_superop(const GklsGenerator& gen);
Superoperator heisenberg_superop(const GklsGenerator& gen);

/// e^{L t} rho0. The matrix is Hermitian with unit trace; `physical` is false
/// when positivity fails (possible only for t < 0).
struct PropagatedState {
  ComplexMatrix matrix;
  bool physical = true;

  DensityMatrix density() const { return DensityMatrix(matrix); }
};

PropagatedState propagate_state(const GklsGenerator& gen, const DensityMatrix& rho0, double t);
HermitianObservable propagate_observable(const GklsGenerator& gen, const HermitianObservable& q,
                                         double t);

}  // namespace strobo
