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

// Krylov subspaces of the Heisenberg generator and the pooled spanning test
// that decides whether a set of repeatedly measured observables determines
// the initial state.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "strobo/dynamics.hpp"
#include "strobo/hermdecomp.hpp"
#include "strobo/matcore.hpp"

namespace strobo {

class ObservableSet {
public:
  /// Labels default to "Q1", "Q2", ...
  explicit ObservableSet(std::vector<HermitianObservable> observables,
                         std::vector<std::string> labels = {});

  std::size_t dim() const { return observables_.front().dim(); }
  std::size_t size() const { return observables_.size(); }
  const std::vector<HermitianObservable>& observables() const { return observables_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const HermitianObservable& operator[](std::size_t i) const { return observables_[i]; }

  ObservableSet with(const HermitianObservable& extra, std::string label = {}) const;

private:
  std::vector<HermitianObservable> observables_;
  std::vector<std::string> labels_;
};

struct KrylovSubspace {
  std::size_t source = 0;
  /// Q, L*Q, ..., (L*)^{mu-1} Q.
  std::vector<HermitianObservable> generators;
  /// Hilbert-Schmidt orthonormal, Hermitian, same span as the generators.
  std::vector<HermitianObservable> orthonormal_basis;
  std::size_t dim = 0;
};

/// The basis is built by Arnoldi on L* with two Gram-Schmidt passes; a new
/// direction is kept while its residual exceeds tol * ||L*||_2 * n^2.
KrylovSubspace krylov_subspace(const GklsGenerator& gen, const HermitianObservable& q,
                               std::size_t mu, RankTolerance tol = {}, std::size_t source = 0);

struct CheckOptions {
  /// Adds the identity to the pooled span: the trace of the state is known.
  bool identity_augmented = false;
  RankTolerance tol{};
  /// Separate tolerance for detecting mu; defaults to tol.
  std::optional<RankTolerance> mu_tol;
};

enum class Verdict { reconstructible, not_reconstructible };

struct ObservabilityReport {
  Verdict verdict = Verdict::not_reconstructible;
  std::size_t mu = 0;
  bool mu_ambiguous = false;
  std::vector<std::size_t> per_observable_dims;
  std::size_t total_span_dim = 0;
  std::size_t target_dim = 0;
  bool identity_augmented = false;
  /// Unit HS-norm Hermitian matrix orthogonal to the achieved span; present
  /// exactly when the verdict is negative.
  std::optional<HermitianObservable> missing_direction;
  double tolerance_used = kDefaultRankTolerance;

  bool reconstructible() const { return verdict == Verdict::reconstructible; }
};

std::size_t generator_mu(const GklsGenerator& gen, RankTolerance tol, bool* ambiguous = nullptr);

std::vector<KrylovSubspace> krylov_subspaces(const GklsGenerator& gen, const ObservableSet& set,
                                             std::size_t mu, RankTolerance tol = {});

ObservabilityReport reconstructibility_check(const GklsGenerator& gen, const ObservableSet& set,
                                             const CheckOptions& opts = {});

/// Dimension of the pooled span measured over the complex matrices, computed
/// on complex vectorized Krylov vectors without the Hermitian basis.
std::size_t complex_total_span_dim(const GklsGenerator& gen, const ObservableSet& set,
                                   const CheckOptions& opts = {});

/// True when the complex-matrix spanning test gives the same verdict as the
/// Hermitian one.
bool complex_side_check(const GklsGenerator& gen, const ObservableSet& set,
                        const CheckOptions& opts = {});

/// Elements of hermitian_basis(n) that, appended in order, make the set
/// reconstructible. Each step picks the candidate with the largest span gain
/// (first in basis order on ties). Empty when already reconstructible.
std::vector<HermitianObservable> greedy_complete(const GklsGenerator& gen, const ObservableSet& set,
                                                 const CheckOptions& opts = {});

}  // namespace strobo
