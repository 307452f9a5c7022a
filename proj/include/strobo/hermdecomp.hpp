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

// Hermitian decomposition of arbitrary complex matrices, generalized
// (complex) mean values, the generalized Gell-Mann operator basis and the
// real/complex span comparison built on it.

#include <cstddef>
#include <span>
#include <vector>

#include "strobo/density_matrix.hpp"
#include "strobo/matcore.hpp"

namespace strobo {

inline constexpr double kHermiticityTol = 1e-13;

/// Square matrix certified Hermitian to kHermiticityTol (absolute, entrywise).
/// Construction rejects anything else; use force_hermitize to symmetrize on
/// purpose.
class HermitianObservable {
public:
  explicit HermitianObservable(ComplexMatrix m);

  static HermitianObservable zero(std::size_t n);

  const ComplexMatrix& matrix() const { return matrix_; }
  std::size_t dim() const { return static_cast<std::size_t>(matrix_.rows()); }

private:
  ComplexMatrix matrix_;
};

HermitianObservable force_hermitize(const ComplexMatrix& m);

struct HermitianPair {
  HermitianObservable q;  ///< Hermitian ("real") part
  HermitianObservable r;  ///< Hermitian "imaginary" part, A = Q + iR
};

/// Splits A into the unique Hermitian pair with A = Q + iR using the
/// entrywise formulas
///   q_ij = (Re a_ij + Re a_ji)/2 + i (Im a_ij - Im a_ji)/2
///   r_ij = (Im a_ij + Im a_ji)/2 + i (Re a_ji - Re a_ij)/2.
HermitianPair decompose(const ComplexMatrix& a);

/// Q + iR.
ComplexMatrix recompose(const HermitianObservable& q, const HermitianObservable& r);

/// An arbitrary complex matrix treated as a measurable operator through its
/// two Hermitian channels.
class GeneralizedObservable {
public:
  explicit GeneralizedObservable(ComplexMatrix a);

  const ComplexMatrix& matrix() const { return a_; }
  const HermitianObservable& q1() const { return parts_.q; }
  const HermitianObservable& q2() const { return parts_.r; }
  std::size_t dim() const { return static_cast<std::size_t>(a_.rows()); }

private:
  ComplexMatrix a_;
  HermitianPair parts_;
};

/// Tr(Q rho); real for Hermitian Q.
double mean_value(const HermitianObservable& q, const DensityMatrix& rho);
/// Tr(M rho) for any square M of matching size.
Complex trace_product(const ComplexMatrix& m, const ComplexMatrix& rho);
/// <A> = Tr(A rho) = <Q1> + i <Q2>.
Complex complex_mean(const GeneralizedObservable& a, const DensityMatrix& rho);

/// Generalized Gell-Mann basis of the Hermitian n x n matrices. Ordering:
/// symmetric pairs E_jk + E_kj (j < k, lexicographic), antisymmetric pairs
/// -i(E_jk - E_kj), the n-1 traceless diagonal generators, identity last.
/// Elements are Hilbert-Schmidt orthogonal but not normalized.
class HermitianBasis {
public:
  explicit HermitianBasis(std::size_t n);

  std::size_t dim() const { return n_; }
  std::size_t size() const { return elements_.size(); }
  const HermitianObservable& operator[](std::size_t k) const { return elements_[k]; }
  const std::vector<HermitianObservable>& elements() const { return elements_; }
  double norm(std::size_t k) const { return norms_[k]; }

  /// Real coordinates of a Hermitian matrix in the normalized basis.
  RealVector coordinates(const ComplexMatrix& hermitian) const;
  /// Complex coordinates z_k with A = sum_k z_k lambda_k (lambda_k unnormalized).
  ComplexVector complex_coordinates(const ComplexMatrix& a) const;
  /// Inverse of coordinates().
  ComplexMatrix from_coordinates(const RealVector& coords) const;

private:
  std::size_t n_;
  std::vector<HermitianObservable> elements_;
  std::vector<double> norms_;
};

HermitianBasis hermitian_basis(std::size_t n);

/// Dimension of the real-linear span inside the Hermitian matrices.
std::size_t real_span_dim(std::span<const HermitianObservable> set, RankTolerance tol = {});
/// Dimension of the complex-linear span inside all n x n matrices.
std::size_t complex_span_dim(std::span<const ComplexMatrix> set, RankTolerance tol = {});
std::size_t complex_span_dim(std::span<const HermitianObservable> set, RankTolerance tol = {});

}  // namespace strobo
