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

#include "strobo/dynamics.hpp"

#include <cmath>
#include <mutex>
#include <string>
#include <utility>

#include "strobo/errors.hpp"

namespace strobo {

struct GklsGenerator::Cache {
  std::once_flag schrodinger_once;
  std::once_flag heisenberg_once;
  Superoperator schrodinger;
  Superoperator heisenberg;
};

namespace {

void validate(const HermitianObservable& hamiltonian, const std::vector<Dissipator>& dissipators) {
  const auto n = hamiltonian.matrix().rows();
  if (n == 0) throw DimensionError("GKLS generator: empty Hamiltonian");
  for (std::size_t k = 0; k < dissipators.size(); ++k) {
    const auto& d = dissipators[k];
    const std::string where = "dissipator " + std::to_string(k);
    if (d.op.rows() != n || d.op.cols() != n) {
      throw DimensionError(where + ": operator is " + std::to_string(d.op.rows()) + "x" +
                           std::to_string(d.op.cols()) + ", expected " + std::to_string(n) +
                           "x" + std::to_string(n));
    }
    require_finite(d.op, where);
    if (!std::isfinite(d.rate) || d.rate < 0.0) {
      throw ValidationError(where + ": rate must be finite and nonnegative, got " +
                            std::to_string(d.rate));
    }
  }
}

ComplexMatrix build_schrodinger_matrix(const GklsGenerator& gen) {
  const auto n = static_cast<Eigen::Index>(gen.dim());
  const ComplexMatrix id = ComplexMatrix::Identity(n, n);
  const ComplexMatrix& h = gen.hamiltonian().matrix();
  const Complex minus_i(0.0, -1.0);

  // vec(A X B) = (B^T kron A) vec(X)
  ComplexMatrix l = minus_i * (kron(id, h) - kron(h.transpose(), id));
  for (const auto& d : gen.dissipators()) {
    if (d.rate == 0.0) continue;
    const ComplexMatrix vdv = d.op.adjoint() * d.op;
    l += d.rate * (kron(d.op.conjugate(), d.op) - 0.5 * kron(id, vdv) -
                   0.5 * kron(vdv.transpose(), id));
  }
  return l;
}

}  // namespace

GklsGenerator::GklsGenerator(HermitianObservable hamiltonian, std::vector<Dissipator> dissipators)
    : hamiltonian_(std::move(hamiltonian)),
      dissipators_(std::move(dissipators)),
      cache_(std::make_shared<Cache>()) {
  validate(hamiltonian_, dissipators_);
}

const Superoperator& GklsGenerator::schrodinger() const {
  std::call_once(cache_->schrodinger_once, [this] {
    cache_->schrodinger = Superoperator{dim(), build_schrodinger_matrix(*this), Picture::schrodinger};
  });
  return cache_->schrodinger;
}

const Superoperator& GklsGenerator::heisenberg() const {
  std::call_once(cache_->heisenberg_once, [this] {
    cache_->heisenberg = Superoperator{dim(), schrodinger().matrix.adjoint(), Picture::heisenberg};
  });
  return cache_->heisenberg;
}

GklsGenerator GklsGenerator::scaled(double c) const {
  if (!(c > 0.0) || !std::isfinite(c)) throw ValidationError("scaled: factor must be positive");
  std::vector<Dissipator> ds = dissipators_;
  for (auto& d : ds) d.rate *= c;
  return GklsGenerator(HermitianObservable(c * hamiltonian_.matrix()), std::move(ds));
}

GklsGenerator build_gkls(const HermitianObservable& hamiltonian, std::vector<Dissipator> dissipators) {
  return GklsGenerator(hamiltonian, std::move(dissipators));
}

ComplexMatrix apply(const GklsGenerator& gen, const ComplexMatrix& rho) {
  require_same_shape(gen.hamiltonian().matrix(), rho, "apply");
  const ComplexMatrix& h = gen.hamiltonian().matrix();
  ComplexMatrix out = Complex(0.0, -1.0) * (h * rho - rho * h);
  for (const auto& d : gen.dissipators()) {
    const ComplexMatrix vdv = d.op.adjoint() * d.op;
    out += d.rate * (d.op * rho * d.op.adjoint() - 0.5 * (vdv * rho + rho * vdv));
  }
  return out;
}

ComplexMatrix apply_adjoint(const GklsGenerator& gen, const ComplexMatrix& q) {
  require_same_shape(gen.hamiltonian().matrix(), q, "apply_adjoint");
  const ComplexMatrix& h = gen.hamiltonian().matrix();
  ComplexMatrix out = Complex(0.0, 1.0) * (h * q - q * h);
  for (const auto& d : gen.dissipators()) {
    const ComplexMatrix vdv = d.op.adjoint() * d.op;
    out += d.rate * (d.op.adjoint() * q * d.op - 0.5 * (vdv * q + q * vdv));
  }
  return out;
}

Superoperator schrodinger_superop(const GklsGenerator& gen) { return gen.schrodinger(); }

Superoperator heisenberg_superop(const GklsGenerator& gen) { return gen.heisenberg(); }

PropagatedState propagate_state(const GklsGenerator& gen, const DensityMatrix& rho0, double t) {
  if (rho0.dim() != gen.dim()) throw DimensionError("propagate_state: dimension mismatch");
  if (!std::isfinite(t)) throw ValidationError("propagate_state: time must be finite");
  if (t == 0.0) return {rho0.matrix(), true};
  const ComplexMatrix propagator = expm(gen.schrodinger().matrix * t);
  const ComplexMatrix evolved = devectorize(propagator * vectorize(rho0.matrix()));
  PropagatedState out{hermitian_part(evolved), true};
  out.physical = min_hermitian_eigenvalue(out.matrix) >= kDensityMinEigenvalue;
  return out;
}

HermitianObservable propagate_observable(const GklsGenerator& gen, const HermitianObservable& q,
                                         double t) {
  if (q.dim() != gen.dim()) throw DimensionError("propagate_observable: dimension mismatch");
  if (!std::isfinite(t)) throw ValidationError("propagate_observable: time must be finite");
  if (t == 0.0) return q;
  const ComplexMatrix propagator = expm(gen.heisenberg().matrix * t);
  // L* preserves Hermiticity; only rounding is removed here.
  return force_hermitize(devectorize(propagator * vectorize(q.matrix())));
}

}  // namespace strobo
