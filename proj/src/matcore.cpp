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

#include "strobo/matcore.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "strobo/errors.hpp"

namespace strobo {

RankTolerance::RankTolerance(double value) : value_(value) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw ValidationError("rank tolerance must be a positive finite number, got " +
                          std::to_string(value));
  }
}

bool all_finite(const ComplexMatrix& m) {
  for (Eigen::Index k = 0; k < m.size(); ++k) {
    const Complex z = m.data()[k];
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  }
  return true;
}

void require_square(const ComplexMatrix& m, std::string_view what) {
  if (m.rows() != m.cols()) {
    throw DimensionError(std::string(what) + ": expected a square matrix, got " +
                         std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
}

void require_finite(const ComplexMatrix& m, std::string_view what) {
  if (!all_finite(m)) throw ValidationError(std::string(what) + ": non-finite entry");
}

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, std::string_view what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError(std::string(what) + ": shape mismatch " + std::to_string(a.rows()) +
                         "x" + std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) +
                         "x" + std::to_string(b.cols()));
  }
}

ComplexVector vectorize(const ComplexMatrix& m) {
  require_square(m, "vectorize");
  // Eigen storage is column-major, so the raw buffer is already column-stacked.
  return Eigen::Map<const ComplexVector>(m.data(), m.size());
}

ComplexMatrix devectorize(const ComplexVector& v) {
  const auto n = static_cast<Eigen::Index>(std::llround(std::sqrt(static_cast<double>(v.size()))));
  if (n * n != v.size()) {
    throw DimensionError("devectorize: length " + std::to_string(v.size()) +
                         " is not a perfect square");
  }
  return Eigen::Map<const ComplexMatrix>(v.data(), n, n);
}

Complex hs_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_square(a, "hs_inner");
  require_same_shape(a, b, "hs_inner");
  return a.conjugate().cwiseProduct(b).sum();
}

double hs_norm(const ComplexMatrix& m) { return m.norm(); }

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

ComplexMatrix identity(std::size_t n) {
  const auto k = static_cast<Eigen::Index>(n);
  return ComplexMatrix::Identity(k, k);
}

namespace {

// Higham (2005) degree-13 coefficients and the matching norm bound.
// Degree-13 Pade coefficients divided by b_0, so that expm(0) = I exactly.
constexpr std::array<double, 14> kPade13 = {
    1.0,
    32382376266240000.0 / 64764752532480000.0,
    7771770303897600.0 / 64764752532480000.0,
    1187353796428800.0 / 64764752532480000.0,
    129060195264000.0 / 64764752532480000.0,
    10559470521600.0 / 64764752532480000.0,
    670442572800.0 / 64764752532480000.0,
    33522128640.0 / 64764752532480000.0,
    1323241920.0 / 64764752532480000.0,
    40840800.0 / 64764752532480000.0,
    960960.0 / 64764752532480000.0,
    16380.0 / 64764752532480000.0,
    182.0 / 64764752532480000.0,
    1.0 / 64764752532480000.0};
constexpr double kTheta13 = 5.371920351148152;

double one_norm(const ComplexMatrix& m) {
  return m.cwiseAbs().colwise().sum().maxCoeff();
}

}  // namespace

ComplexMatrix expm(const ComplexMatrix& m) {
  require_square(m, "expm");
  const Eigen::Index n = m.rows();
  if (n == 0) return m;
  const double norm = one_norm(m);
  if (!std::isfinite(norm)) throw RangeError("expm: input norm is not finite");

  int squarings = 0;
  if (norm > kTheta13) {
    squarings = static_cast<int>(std::ceil(std::log2(norm / kTheta13)));
  }
  if (squarings > 1000) throw RangeError("expm: input norm too large to exponentiate");

  const ComplexMatrix a = m / std::ldexp(1.0, squarings);
  const ComplexMatrix id = ComplexMatrix::Identity(n, n);
  const ComplexMatrix a2 = a * a;
  const ComplexMatrix a4 = a2 * a2;
  const ComplexMatrix a6 = a4 * a2;
  const auto& b = kPade13;

  const ComplexMatrix u_inner = a6 * (b[13] * a6 + b[11] * a4 + b[9] * a2) + b[7] * a6 +
                                b[5] * a4 + b[3] * a2 + b[1] * id;
  const ComplexMatrix u = a * u_inner;
  const ComplexMatrix v = a6 * (b[12] * a6 + b[10] * a4 + b[8] * a2) + b[6] * a6 + b[4] * a4 +
                          b[2] * a2 + b[0] * id;

  ComplexMatrix result = (v - u).partialPivLu().solve(v + u);
  for (int k = 0; k < squarings; ++k) {
    result = result * result;
    if (!all_finite(result)) throw RangeError("expm: result overflowed while squaring");
  }
  if (!all_finite(result)) throw RangeError("expm: result is not finite");
  return result;
}

double rank_cutoff(double s_max, Eigen::Index rows, Eigen::Index cols, RankTolerance tol) {
  return tol.value() * s_max * static_cast<double>(std::max(rows, cols));
}

namespace {

template <typename Matrix>
std::size_t rank_from_svd(const Matrix& m, RankTolerance tol) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<Matrix> svd(m);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s(0) == 0.0) return 0;
  const double cutoff = rank_cutoff(s(0), m.rows(), m.cols(), tol);
  std::size_t rank = 0;
  for (Eigen::Index k = 0; k < s.size(); ++k) {
    if (s(k) > cutoff) ++rank;
  }
  return rank;
}

}  // namespace

std::size_t numerical_rank(const ComplexMatrix& m, RankTolerance tol) {
  return rank_from_svd(m, tol);
}

std::size_t numerical_rank(const RealMatrix& m, RankTolerance tol) {
  return rank_from_svd(m, tol);
}

MinimalPolynomialDegree minimal_poly_degree(const ComplexMatrix& m, RankTolerance tol) {
  require_square(m, "minimal_poly_degree");
  const Eigen::Index dim = m.rows();
  if (dim == 0) return {};

  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  const double op_norm = svd.singularValues().size() > 0 ? svd.singularValues()(0) : 0.0;
  const double cutoff = tol.value() * op_norm * static_cast<double>(dim);

  // Orthonormal Krylov vectors for the sequence I, M, M^2, ... in the
  // Hilbert-Schmidt geometry on dim x dim matrices.
  std::vector<ComplexMatrix> basis;
  basis.push_back(ComplexMatrix::Identity(dim, dim) / std::sqrt(static_cast<double>(dim)));
  double smallest_accepted = std::numeric_limits<double>::infinity();

  // Powers up to dim - 1 are tested; M^dim is dependent by Cayley-Hamilton
  // and its residual would only measure rounding.
  for (Eigen::Index k = 1; k < dim; ++k) {
    ComplexMatrix w = m * basis.back();
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& q : basis) w -= hs_inner(q, w) * q;
    }
    const double residual = w.norm();
    if (residual <= cutoff) {
      MinimalPolynomialDegree out;
      out.degree = static_cast<std::size_t>(k);
      out.ambiguous = (cutoff > 0.0 && residual > cutoff / 10.0) ||
                      smallest_accepted < 10.0 * cutoff;
      return out;
    }
    smallest_accepted = std::min(smallest_accepted, residual);
    basis.push_back(w / residual);
  }
  MinimalPolynomialDegree out;
  out.degree = static_cast<std::size_t>(dim);
  out.ambiguous = smallest_accepted < 10.0 * cutoff;
  return out;
}

namespace pauli {

ComplexMatrix x() {
  ComplexMatrix s(2, 2);
  s << 0.0, 1.0, 1.0, 0.0;
  return s;
}

ComplexMatrix y() {
  ComplexMatrix s(2, 2);
  s << 0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0;
  return s;
}

ComplexMatrix z() {
  ComplexMatrix s(2, 2);
  s << 1.0, 0.0, 0.0, -1.0;
  return s;
}

}  // namespace pauli

}  // namespace strobo
