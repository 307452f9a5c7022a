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

#include "strobo/observability.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "strobo/errors.hpp"

namespace strobo {

ObservableSet::ObservableSet(std::vector<HermitianObservable> observables,
                             std::vector<std::string> labels)
    : observables_(std::move(observables)), labels_(std::move(labels)) {
  if (observables_.empty()) throw ValidationError("ObservableSet: at least one observable required");
  const std::size_t n = observables_.front().dim();
  for (const auto& q : observables_) {
    if (q.dim() != n) throw DimensionError("ObservableSet: observables have mixed dimensions");
  }
  if (labels_.empty()) {
    for (std::size_t i = 0; i < observables_.size(); ++i) labels_.push_back("Q" + std::to_string(i + 1));
  } else if (labels_.size() != observables_.size()) {
    throw ValidationError("ObservableSet: label count does not match observable count");
  }
}

ObservableSet ObservableSet::with(const HermitianObservable& extra, std::string label) const {
  auto obs = observables_;
  auto labels = labels_;
  obs.push_back(extra);
  labels.push_back(label.empty() ? "Q" + std::to_string(obs.size()) : std::move(label));
  return ObservableSet(std::move(obs), std::move(labels));
}

namespace {

double spectral_norm(const auto& m) {
  if (m.size() == 0) return 0.0;
  using Matrix = std::decay_t<decltype(m)>;
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues()(0);
}

/// L* acting on the real coordinates of the normalized Hermitian basis.
RealMatrix real_heisenberg(const GklsGenerator& gen, const HermitianBasis& basis) {
  const auto d = static_cast<Eigen::Index>(basis.size());
  RealMatrix out(d, d);
  for (Eigen::Index l = 0; l < d; ++l) {
    const auto k = static_cast<std::size_t>(l);
    const ComplexMatrix unit = basis[k].matrix() / basis.norm(k);
    out.col(l) = basis.coordinates(apply_adjoint(gen, unit));
  }
  return out;
}

/// Arnoldi with two Gram-Schmidt passes; stops after `max_vectors` or when
/// the residual drops to `cutoff`.
template <typename Vector, typename Matrix>
std::vector<Vector> arnoldi(const Matrix& op, const Vector& start, std::size_t max_vectors,
                            double cutoff) {
  std::vector<Vector> basis;
  const double start_norm = start.norm();
  if (start_norm == 0.0 || max_vectors == 0) return basis;
  basis.push_back(start / start_norm);
  while (basis.size() < max_vectors) {
    Vector w = op * basis.back();
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& q : basis) w -= q.dot(w) * q;
    }
    const double residual = w.norm();
    if (residual <= cutoff) break;
    basis.push_back(w / residual);
  }
  return basis;
}

struct RealKrylovContext {
  HermitianBasis basis;
  RealMatrix op;
  double cutoff = 0.0;
};

RealKrylovContext make_real_context(const GklsGenerator& gen, RankTolerance tol) {
  HermitianBasis basis(gen.dim());
  RealMatrix op = real_heisenberg(gen, basis);
  const double n2 = static_cast<double>(basis.size());
  const double cutoff = tol.value() * spectral_norm(op) * n2;
  return {std::move(basis), std::move(op), cutoff};
}

std::vector<RealVector> real_krylov(const RealKrylovContext& ctx, const HermitianObservable& q,
                                    std::size_t mu) {
  return arnoldi<RealVector>(ctx.op, ctx.basis.coordinates(q.matrix()), mu, ctx.cutoff);
}

RealVector identity_coordinates(const HermitianBasis& basis) {
  RealVector e = RealVector::Zero(static_cast<Eigen::Index>(basis.size()));
  e(e.size() - 1) = 1.0;  // identity is the last basis element
  return e;
}

RealMatrix stack_rows(const std::vector<RealVector>& rows, Eigen::Index cols) {
  RealMatrix out(static_cast<Eigen::Index>(rows.size()), cols);
  for (std::size_t k = 0; k < rows.size(); ++k) out.row(static_cast<Eigen::Index>(k)) = rows[k].transpose();
  return out;
}

void require_dims(const GklsGenerator& gen, const ObservableSet& set, const char* what) {
  if (set.dim() != gen.dim()) {
    throw DimensionError(std::string(what) + ": observables are " + std::to_string(set.dim()) +
                         "-dimensional, generator is " + std::to_string(gen.dim()) + "-dimensional");
  }
}

struct PooledSpan {
  std::size_t rank = 0;
  std::optional<RealVector> missing;  // unit vector in the orthocomplement
};

PooledSpan pooled_span(const std::vector<RealVector>& rows, Eigen::Index target, RankTolerance tol,
                       bool want_witness) {
  PooledSpan out;
  if (rows.empty()) {
    if (want_witness) {
      out.missing = RealVector::Zero(target);
      (*out.missing)(0) = 1.0;
    }
    return out;
  }
  const RealMatrix stack = stack_rows(rows, target);
  Eigen::JacobiSVD<RealMatrix> svd(stack, want_witness ? Eigen::ComputeFullV : 0);
  const auto& s = svd.singularValues();
  const double cutoff = rank_cutoff(s(0), stack.rows(), stack.cols(), tol);
  for (Eigen::Index k = 0; k < s.size(); ++k) {
    if (s(k) > cutoff && s(0) > 0.0) ++out.rank;
  }
  if (want_witness && out.rank < static_cast<std::size_t>(target)) {
    // Right singular vectors are ordered by decreasing singular value; the
    // last one is the direction least represented by the stack.
    out.missing = svd.matrixV().col(target - 1);
  }
  return out;
}

}  // namespace

KrylovSubspace krylov_subspace(const GklsGenerator& gen, const HermitianObservable& q,
                               std::size_t mu, RankTolerance tol, std::size_t source) {
  if (q.dim() != gen.dim()) throw DimensionError("krylov_subspace: dimension mismatch");
  if (mu == 0) throw ValidationError("krylov_subspace: mu must be at least 1");

  KrylovSubspace out;
  out.source = source;
  out.generators.reserve(mu);
  out.generators.push_back(q);
  for (std::size_t k = 1; k < mu; ++k) {
    out.generators.push_back(force_hermitize(apply_adjoint(gen, out.generators.back().matrix())));
  }

  const auto ctx = make_real_context(gen, tol);
  for (const auto& v : real_krylov(ctx, q, mu)) {
    out.orthonormal_basis.push_back(force_hermitize(ctx.basis.from_coordinates(v)));
  }
  out.dim = out.orthonormal_basis.size();
  return out;
}

std::size_t generator_mu(const GklsGenerator& gen, RankTolerance tol, bool* ambiguous) {
  const auto result = minimal_poly_degree(gen.schrodinger().matrix, tol);
  if (ambiguous != nullptr) *ambiguous = result.ambiguous;
  return result.degree;
}

std::vector<KrylovSubspace> krylov_subspaces(const GklsGenerator& gen, const ObservableSet& set,
                                             std::size_t mu, RankTolerance tol) {
  require_dims(gen, set, "krylov_subspaces");
  std::vector<KrylovSubspace> out;
  out.reserve(set.size());
  for (std::size_t i = 0; i < set.size(); ++i) out.push_back(krylov_subspace(gen, set[i], mu, tol, i));
  return out;
}

ObservabilityReport reconstructibility_check(const GklsGenerator& gen, const ObservableSet& set,
                                             const CheckOptions& opts) {
  require_dims(gen, set, "reconstructibility_check");
  ObservabilityReport report;
  report.identity_augmented = opts.identity_augmented;
  report.tolerance_used = opts.tol.value();
  report.mu = generator_mu(gen, opts.mu_tol.value_or(opts.tol), &report.mu_ambiguous);

  const auto ctx = make_real_context(gen, opts.tol);
  const auto target = static_cast<Eigen::Index>(ctx.basis.size());
  report.target_dim = ctx.basis.size();

  std::vector<RealVector> pooled;
  for (const auto& q : set.observables()) {
    auto vectors = real_krylov(ctx, q, report.mu);
    report.per_observable_dims.push_back(vectors.size());
    for (auto& v : vectors) pooled.push_back(std::move(v));
  }
  if (opts.identity_augmented) pooled.push_back(identity_coordinates(ctx.basis));

  const auto span = pooled_span(pooled, target, opts.tol, true);
  report.total_span_dim = span.rank;
  report.verdict = span.rank == report.target_dim ? Verdict::reconstructible
                                                  : Verdict::not_reconstructible;
  if (!report.reconstructible()) {
    ComplexMatrix witness = ctx.basis.from_coordinates(*span.missing);
    witness /= hs_norm(witness);
    report.missing_direction = force_hermitize(witness);
  }
  return report;
}

std::size_t complex_total_span_dim(const GklsGenerator& gen, const ObservableSet& set,
                                   const CheckOptions& opts) {
  require_dims(gen, set, "complex_total_span_dim");
  const std::size_t mu = generator_mu(gen, opts.mu_tol.value_or(opts.tol));
  const ComplexMatrix& op = gen.heisenberg().matrix;
  const auto n2 = op.rows();
  const double cutoff = opts.tol.value() * spectral_norm(op) * static_cast<double>(n2);

  std::vector<ComplexVector> pooled;
  for (const auto& q : set.observables()) {
    for (auto& v : arnoldi<ComplexVector>(op, vectorize(q.matrix()), mu, cutoff)) {
      pooled.push_back(std::move(v));
    }
  }
  if (opts.identity_augmented) pooled.push_back(vectorize(identity(gen.dim())));
  if (pooled.empty()) return 0;

  ComplexMatrix stack(static_cast<Eigen::Index>(pooled.size()), n2);
  for (std::size_t k = 0; k < pooled.size(); ++k) {
    stack.row(static_cast<Eigen::Index>(k)) = pooled[k].transpose();
  }
  return numerical_rank(stack, opts.tol);
}

bool complex_side_check(const GklsGenerator& gen, const ObservableSet& set, const CheckOptions& opts) {
  const bool hermitian_verdict = reconstructibility_check(gen, set, opts).reconstructible();
  const std::size_t n2 = gen.dim() * gen.dim();
  const bool complex_verdict = complex_total_span_dim(gen, set, opts) == n2;
  return hermitian_verdict == complex_verdict;
}

std::vector<HermitianObservable> greedy_complete(const GklsGenerator& gen, const ObservableSet& set,
                                                 const CheckOptions& opts) {
  require_dims(gen, set, "greedy_complete");
  const std::size_t mu = generator_mu(gen, opts.mu_tol.value_or(opts.tol));
  const auto ctx = make_real_context(gen, opts.tol);
  const auto target = static_cast<Eigen::Index>(ctx.basis.size());

  std::vector<RealVector> pooled;
  for (const auto& q : set.observables()) {
    for (auto& v : real_krylov(ctx, q, mu)) pooled.push_back(std::move(v));
  }
  if (opts.identity_augmented) pooled.push_back(identity_coordinates(ctx.basis));

  std::vector<std::vector<RealVector>> candidates;
  for (const auto& lambda : ctx.basis.elements()) candidates.push_back(real_krylov(ctx, lambda, mu));

  std::vector<HermitianObservable> additions;
  std::size_t rank = pooled_span(pooled, target, opts.tol, false).rank;
  while (rank < ctx.basis.size()) {
    std::size_t best = candidates.size();
    std::size_t best_rank = rank;
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      auto trial = pooled;
      trial.insert(trial.end(), candidates[c].begin(), candidates[c].end());
      const std::size_t r = pooled_span(trial, target, opts.tol, false).rank;
      if (r > best_rank) {
        best_rank = r;
        best = c;
      }
    }
    // The basis spans everything, so some candidate always adds a direction
    // unless the tolerance swallows it.
    if (best == candidates.size()) break;
    pooled.insert(pooled.end(), candidates[best].begin(), candidates[best].end());
    additions.push_back(ctx.basis[best]);
    rank = best_rank;
  }
  return additions;
}

}  // namespace strobo
