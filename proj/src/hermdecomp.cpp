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

#include "strobo/hermdecomp.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "strobo/errors.hpp"

namespace strobo {

HermitianObservable::HermitianObservable(ComplexMatrix m) : matrix_(std::move(m)) {
  require_square(matrix_, "HermitianObservable");
  require_finite(matrix_, "HermitianObservable");
  const double defect = hermiticity_defect(matrix_);
  if (defect > kHermiticityTol) {
    throw ValidationError("HermitianObservable: matrix is not Hermitian (max |M - M^dagger| = " +
                          std::to_string(defect) + ")");
  }
}

HermitianObservable HermitianObservable::zero(std::size_t n) {
  const auto k = static_cast<Eigen::Index>(n);
  return HermitianObservable(ComplexMatrix::Zero(k, k));
}

HermitianObservable force_hermitize(const ComplexMatrix& m) {
  require_square(m, "force_hermitize");
  return HermitianObservable(hermitian_part(m));
}

HermitianPair decompose(const ComplexMatrix& a) {
  require_square(a, "decompose");
  require_finite(a, "decompose");
  const Eigen::Index n = a.rows();
  ComplexMatrix q(n, n);
  ComplexMatrix r(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const double re_ij = a(i, j).real();
      const double im_ij = a(i, j).imag();
      const double re_ji = a(j, i).real();
      const double im_ji = a(j, i).imag();
      q(i, j) = Complex((re_ij + re_ji) / 2.0, (im_ij - im_ji) / 2.0);
      r(i, j) = Complex((im_ij + im_ji) / 2.0, (re_ji - re_ij) / 2.0);
    }
  }
  return {HermitianObservable(std::move(q)), HermitianObservable(std::move(r))};
}

ComplexMatrix recompose(const HermitianObservable& q, const HermitianObservable& r) {
  require_same_shape(q.matrix(), r.matrix(), "recompose");
  return q.matrix() + Complex(0.0, 1.0) * r.matrix();
}

GeneralizedObservable::GeneralizedObservable(ComplexMatrix a)
    : a_(std::move(a)), parts_(decompose(a_)) {}

Complex trace_product(const ComplexMatrix& m, const ComplexMatrix& rho) {
  require_square(m, "trace_product");
  require_same_shape(m, rho, "trace_product");
  // Tr(M rho) = sum_ij m_ij rho_ji
  return m.cwiseProduct(rho.transpose()).sum();
}

double mean_value(const HermitianObservable& q, const DensityMatrix& rho) {
  return trace_product(q.matrix(), rho.matrix()).real();
}

Complex complex_mean(const GeneralizedObservable& a, const DensityMatrix& rho) {
  return trace_product(a.matrix(), rho.matrix());
}

HermitianBasis::HermitianBasis(std::size_t n) : n_(n) {
  if (n == 0) throw DimensionError("hermitian_basis: n must be positive");
  const auto dim = static_cast<Eigen::Index>(n);
  const Complex i_unit(0.0, 1.0);
  elements_.reserve(n * n);

  for (Eigen::Index j = 0; j < dim; ++j) {
    for (Eigen::Index k = j + 1; k < dim; ++k) {
      ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
      m(j, k) = 1.0;
      m(k, j) = 1.0;
      elements_.emplace_back(std::move(m));
    }
  }
  for (Eigen::Index j = 0; j < dim; ++j) {
    for (Eigen::Index k = j + 1; k < dim; ++k) {
      ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
      m(j, k) = -i_unit;
      m(k, j) = i_unit;
      elements_.emplace_back(std::move(m));
    }
  }
  for (Eigen::Index l = 1; l < dim; ++l) {
    ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
    const double scale = std::sqrt(2.0 / static_cast<double>(l * (l + 1)));
    for (Eigen::Index j = 0; j < l; ++j) m(j, j) = scale;
    m(l, l) = -scale * static_cast<double>(l);
    elements_.emplace_back(std::move(m));
  }
  elements_.emplace_back(ComplexMatrix::Identity(dim, dim));

  norms_.reserve(elements_.size());
  for (const auto& e : elements_) norms_.push_back(hs_norm(e.matrix()));
}

RealVector HermitianBasis::coordinates(const ComplexMatrix& hermitian) const {
  RealVector c(static_cast<Eigen::Index>(size()));
  for (std::size_t k = 0; k < size(); ++k) {
    c(static_cast<Eigen::Index>(k)) = hs_inner(elements_[k].matrix(), hermitian).real() / norms_[k];
  }
  return c;
}

ComplexVector HermitianBasis::complex_coordinates(const ComplexMatrix& a) const {
  ComplexVector z(static_cast<Eigen::Index>(size()));
  for (std::size_t k = 0; k < size(); ++k) {
    z(static_cast<Eigen::Index>(k)) =
        hs_inner(elements_[k].matrix(), a) / (norms_[k] * norms_[k]);
  }
  return z;
}

ComplexMatrix HermitianBasis::from_coordinates(const RealVector& coords) const {
  if (static_cast<std::size_t>(coords.size()) != size()) {
    throw DimensionError("from_coordinates: expected " + std::to_string(size()) + " coordinates");
  }
  const auto dim = static_cast<Eigen::Index>(n_);
  ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
  for (std::size_t k = 0; k < size(); ++k) {
    m += (coords(static_cast<Eigen::Index>(k)) / norms_[k]) * elements_[k].matrix();
  }
  return m;
}

HermitianBasis hermitian_basis(std::size_t n) { return HermitianBasis(n); }

namespace {

template <typename T, typename Get>
std::size_t common_dim(std::span<const T> set, Get get, const char* what) {
  const Eigen::Index n = get(set.front()).rows();
  for (const auto& m : set) {
    require_square(get(m), what);
    if (get(m).rows() != n) throw DimensionError(std::string(what) + ": mixed dimensions");
  }
  return static_cast<std::size_t>(n);
}

}  // namespace

std::size_t real_span_dim(std::span<const HermitianObservable> set, RankTolerance tol) {
  if (set.empty()) return 0;
  const std::size_t n =
      common_dim(set, [](const HermitianObservable& h) -> const ComplexMatrix& { return h.matrix(); },
                 "real_span_dim");
  const HermitianBasis basis(n);
  RealMatrix rows(static_cast<Eigen::Index>(set.size()), static_cast<Eigen::Index>(n * n));
  for (std::size_t k = 0; k < set.size(); ++k) {
    rows.row(static_cast<Eigen::Index>(k)) = basis.coordinates(set[k].matrix()).transpose();
  }
  return numerical_rank(rows, tol);
}

std::size_t complex_span_dim(std::span<const ComplexMatrix> set, RankTolerance tol) {
  if (set.empty()) return 0;
  const std::size_t n =
      common_dim(set, [](const ComplexMatrix& m) -> const ComplexMatrix& { return m; },
                 "complex_span_dim");
  ComplexMatrix rows(static_cast<Eigen::Index>(set.size()), static_cast<Eigen::Index>(n * n));
  for (std::size_t k = 0; k < set.size(); ++k) {
    rows.row(static_cast<Eigen::Index>(k)) = vectorize(set[k]).transpose();
  }
  return numerical_rank(rows, tol);
}

std::size_t complex_span_dim(std::span<const HermitianObservable> set, RankTolerance tol) {
  std::vector<ComplexMatrix> plain;
  plain.reserve(set.size());
  for (const auto& h : set) plain.push_back(h.matrix());
  return complex_span_dim(std::span<const ComplexMatrix>(plain), tol);
}

}  // namespace strobo
