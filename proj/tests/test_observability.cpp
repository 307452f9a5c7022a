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

#include <cmath>
#include <vector>

#include <doctest.h>

#include "strobo/errors.hpp"
#include "strobo/observability.hpp"
#include "test_support.hpp"

using namespace strobo;
using strobo::testing::max_abs_diff;

namespace {

GklsGenerator precession() { return build_gkls(HermitianObservable(pauli::z()), {}); }

ObservableSet single(const ComplexMatrix& q) { return ObservableSet({HermitianObservable(q)}); }

/// Rank of the raw stack {Q, L*Q, ..., (L*)^{terms-1} Q} in Gell-Mann coordinates.
std::size_t raw_krylov_rank(const GklsGenerator& gen, const HermitianObservable& q, std::size_t terms) {
  const HermitianBasis basis(gen.dim());
  RealMatrix rows(static_cast<Eigen::Index>(terms), static_cast<Eigen::Index>(basis.size()));
  ComplexMatrix v = q.matrix();
  for (std::size_t k = 0; k < terms; ++k) {
    rows.row(static_cast<Eigen::Index>(k)) = basis.coordinates(0.5 * (v + v.adjoint())).transpose();
    v = apply_adjoint(gen, v);
  }
  // Columns of the stack are rescaled so that the fast-growing powers do not
  // swamp the rank decision.
  for (Eigen::Index k = 0; k < rows.rows(); ++k) {
    const double norm = rows.row(k).norm();
    if (norm > 0.0) rows.row(k) /= norm;
  }
  return numerical_rank(rows, RankTolerance(1e-8));
}

}  // namespace

TEST_CASE("ObservableSet") {
  const ObservableSet set = single(pauli::x());
  CHECK(set.size() == 1);
  CHECK(set.labels()[0] == "Q1");
  const ObservableSet more = set.with(HermitianObservable(pauli::z()), "Z");
  CHECK(more.size() == 2);
  CHECK(more.labels()[1] == "Z");
  CHECK_THROWS_AS(ObservableSet({}), ValidationError);
  CHECK_THROWS_AS(ObservableSet({HermitianObservable(pauli::x()), HermitianObservable(identity(3))}),
                  DimensionError);
}

TEST_CASE("krylov_subspace examples") {
  const GklsGenerator zero = build_gkls(HermitianObservable::zero(2), {});
  CHECK(krylov_subspace(zero, HermitianObservable(pauli::x()), 1).dim == 1);

  const KrylovSubspace k = krylov_subspace(precession(), HermitianObservable(pauli::x()), 3);
  REQUIRE(k.generators.size() == 3);
  CHECK(max_abs_diff(k.generators[0].matrix(), pauli::x()) == 0.0);
  CHECK(max_abs_diff(k.generators[1].matrix(), -2.0 * pauli::y()) <= 1e-15);
  CHECK(max_abs_diff(k.generators[2].matrix(), -4.0 * pauli::x()) <= 1e-15);
  CHECK(k.dim == 2);
  CHECK(k.orthonormal_basis.size() == 2);

  strobo::testing::Rng rng(41);
  const GklsGenerator gen = strobo::testing::random_generator(rng, 3, 2);
  CHECK(krylov_subspace(gen, HermitianObservable(identity(3)), generator_mu(gen, {})).dim == 1);

  CHECK_THROWS_AS(krylov_subspace(precession(), HermitianObservable(identity(3)), 3), DimensionError);
}

TEST_CASE("Krylov orthonormal basis spans the generators") {
  strobo::testing::Rng rng(42);
  for (int trial = 0; trial < 20; ++trial) {
    const Eigen::Index n = 2 + trial % 2;
    const GklsGenerator gen = strobo::testing::random_generator(rng, n, trial % 3);
    const HermitianObservable q = strobo::testing::random_hermitian(rng, n);
    const std::size_t mu = generator_mu(gen, {});
    const KrylovSubspace k = krylov_subspace(gen, q, mu);
    CHECK(k.dim == k.orthonormal_basis.size());
    CHECK(k.dim == raw_krylov_rank(gen, q, mu));
    for (std::size_t a = 0; a < k.dim; ++a) {
      for (std::size_t b = 0; b < k.dim; ++b) {
        const Complex ip = hs_inner(k.orthonormal_basis[a].matrix(), k.orthonormal_basis[b].matrix());
        CHECK(std::abs(ip - Complex(a == b ? 1.0 : 0.0)) <= 1e-12);
      }
    }
    for (const auto& g : k.generators) {
      ComplexMatrix residual = g.matrix();
      for (const auto& e : k.orthonormal_basis) residual -= hs_inner(e.matrix(), g.matrix()) * e.matrix();
      CHECK(residual.norm() <= 1e-9 * std::max(1.0, g.matrix().norm()));
    }
  }
}

TEST_CASE("Krylov saturation beyond mu") {
  strobo::testing::Rng rng(43);
  for (int trial = 0; trial < 20; ++trial) {
    const GklsGenerator gen = strobo::testing::random_generator(rng, 2, trial % 3);
    const HermitianObservable q = strobo::testing::random_hermitian(rng, 2);
    const std::size_t mu = generator_mu(gen, {});
    CHECK(krylov_subspace(gen, q, 2 * mu).dim == krylov_subspace(gen, q, mu).dim);
  }
}

TEST_CASE("qubit verdicts") {
  SUBCASE("sigma_x alone") {
    const ObservabilityReport r = reconstructibility_check(precession(), single(pauli::x()));
    CHECK_FALSE(r.reconstructible());
    CHECK(r.mu == 3);
    CHECK(r.total_span_dim == 2);
    CHECK(r.target_dim == 4);
    REQUIRE(r.missing_direction.has_value());
    const ComplexMatrix& w = r.missing_direction->matrix();
    CHECK(std::abs(hs_inner(w, w).real() - 1.0) <= 1e-12);
    CHECK(std::abs(hs_inner(pauli::x(), w)) <= 1e-12);
    CHECK(std::abs(hs_inner(pauli::y(), w)) <= 1e-12);
  }
  SUBCASE("one observable with identity augmentation") {
    CheckOptions opts;
    opts.identity_augmented = true;
    const ObservabilityReport r =
        reconstructibility_check(precession(), single(pauli::x() + pauli::z() + identity(2)), opts);
    CHECK(r.reconstructible());
    CHECK(r.mu == 3);
    CHECK(r.total_span_dim == 4);
    CHECK(r.per_observable_dims == std::vector<std::size_t>{3});
    CHECK_FALSE(r.missing_direction.has_value());
  }
  SUBCASE("full static basis") {
    strobo::testing::Rng rng(44);
    const ObservableSet paulis({HermitianObservable(pauli::x()), HermitianObservable(pauli::y()),
                                HermitianObservable(pauli::z()), HermitianObservable(identity(2))});
    CHECK(reconstructibility_check(strobo::testing::random_generator(rng, 2, 2), paulis).reconstructible());
  }
}

TEST_CASE("complex side agrees with the Hermitian side") {
  strobo::testing::Rng rng(45);
  CHECK(complex_side_check(precession(), single(pauli::x())));
  for (int trial = 0; trial < 100; ++trial) {
    const Eigen::Index n = 1 + trial % 3;
    const GklsGenerator gen = strobo::testing::random_generator(rng, n, trial % 3);
    std::vector<HermitianObservable> obs;
    for (int k = 0; k <= trial % 2; ++k) obs.push_back(strobo::testing::random_hermitian(rng, n));
    CheckOptions opts;
    opts.identity_augmented = (trial % 4) < 2;
    const ObservableSet set(obs);
    CHECK(complex_side_check(gen, set, opts));
    CHECK(complex_total_span_dim(gen, set, opts) == reconstructibility_check(gen, set, opts).total_span_dim);
  }
}

TEST_CASE("verdicts are monotone and scale invariant") {
  strobo::testing::Rng rng(46);
  for (int trial = 0; trial < 30; ++trial) {
    const Eigen::Index n = 2 + trial % 2;
    GklsGenerator gen = strobo::testing::random_generator(rng, n, trial % 3);
    if (trial % 3 == 0) {
      // A diagonal Hamiltonian alone leaves most single observables deficient.
      ComplexMatrix h = ComplexMatrix::Zero(n, n);
      for (Eigen::Index k = 0; k < n; ++k) h(k, k) = 0.7 * static_cast<double>(k) - 0.2;
      gen = build_gkls(HermitianObservable(h), {});
    }
    const ObservableSet base({strobo::testing::random_hermitian(rng, n)});
    const ObservabilityReport r0 = reconstructibility_check(gen, base);
    const ObservabilityReport r1 = reconstructibility_check(gen, base.with(strobo::testing::random_hermitian(rng, n)));
    CHECK(r1.total_span_dim >= r0.total_span_dim);

    const ObservableSet rescaled({HermitianObservable(-3.5 * base[0].matrix())});
    CHECK(reconstructibility_check(gen, rescaled).verdict == r0.verdict);
    CHECK(reconstructibility_check(gen.scaled(4.0), base).verdict == r0.verdict);
    CHECK(reconstructibility_check(gen.scaled(0.25), base).total_span_dim == r0.total_span_dim);
  }
}

TEST_CASE("missing direction is orthogonal to every Krylov generator") {
  strobo::testing::Rng rng(47);
  int negatives = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const Eigen::Index n = 2 + trial % 2;
    ComplexMatrix h = ComplexMatrix::Zero(n, n);
    for (Eigen::Index k = 0; k < n; ++k) h(k, k) = 0.3 * static_cast<double>(k * k) + 0.1 * trial;
    std::vector<Dissipator> ds;
    if (trial % 2 == 1) ds.push_back({h, 0.5});  // dephasing commutes with H
    const GklsGenerator gen = build_gkls(HermitianObservable(h), ds);
    const ObservableSet set({strobo::testing::random_hermitian(rng, n)});
    const ObservabilityReport r = reconstructibility_check(gen, set);
    if (r.reconstructible()) continue;
    ++negatives;
    REQUIRE(r.missing_direction.has_value());
    const ComplexMatrix& w = r.missing_direction->matrix();
    CHECK(std::abs(w.norm() - 1.0) <= 1e-12);
    for (const auto& k : krylov_subspaces(gen, set, r.mu)) {
      for (const auto& v : k.generators) {
        CHECK(std::abs(hs_inner(w, v.matrix())) <= 1e-9 * std::max(1.0, v.matrix().norm()));
      }
    }
  }
  CHECK(negatives > 0);
}

TEST_CASE("greedy_complete") {
  const ObservableSet sx = single(pauli::x());
  const auto additions = greedy_complete(precession(), sx);
  REQUIRE(additions.size() == 2);
  const HermitianBasis b(2);
  for (const auto& a : additions) {
    const bool is_z = max_abs_diff(a.matrix(), b[2].matrix()) == 0.0;
    const bool is_i = max_abs_diff(a.matrix(), b[3].matrix()) == 0.0;
    CHECK((is_z || is_i));
  }
  ObservableSet completed = sx;
  for (const auto& a : additions) completed = completed.with(a);
  CHECK(reconstructibility_check(precession(), completed).reconstructible());

  CheckOptions aug;
  aug.identity_augmented = true;
  const auto one = greedy_complete(precession(), sx, aug);
  REQUIRE(one.size() == 1);
  CHECK(std::abs(hs_inner(pauli::z(), one[0].matrix())) > 0.5);

  CHECK(greedy_complete(precession(), single(pauli::x() + pauli::z() + identity(2)), aug).empty());
  const auto again = greedy_complete(precession(), sx);
  REQUIRE(again.size() == additions.size());
  for (std::size_t k = 0; k < again.size(); ++k) CHECK(max_abs_diff(again[k].matrix(), additions[k].matrix()) == 0.0);
}
