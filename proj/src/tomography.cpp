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

#include "strobo/tomography.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <random>
#include <tuple>
#include <string>
#include <utility>

#include "strobo/errors.hpp"

namespace strobo {

TimeGrid::TimeGrid(std::vector<double> times, GridMode mode) : times_(std::move(times)), mode_(mode) {
  if (times_.empty()) throw ValidationError("time grid: at least one time instant required");
  for (std::size_t j = 0; j < times_.size(); ++j) {
    if (!std::isfinite(times_[j])) throw ValidationError("time grid: non-finite time");
    if (times_[j] < 0.0) {
      throw ValidationError("time grid: negative time " + std::to_string(times_[j]));
    }
    if (j > 0 && !(times_[j] > times_[j - 1])) {
      throw ValidationError("time grid: times must be distinct and strictly increasing");
    }
  }
}

TimeGrid make_time_grid(GridMode mode, double horizon, std::size_t g,
                        const std::vector<double>& explicit_times, bool include_zero) {
  if (mode == GridMode::explicit_times) {
    std::vector<double> times = explicit_times;
    std::sort(times.begin(), times.end());
    if (std::adjacent_find(times.begin(), times.end()) != times.end()) {
      throw ValidationError("time grid: duplicate time instants");
    }
    return TimeGrid(std::move(times), mode);
  }
  if (g == 0) throw ValidationError("time grid: g must be at least 1");
  if (!(horizon > 0.0) || !std::isfinite(horizon)) {
    throw ValidationError("time grid: horizon T must be positive");
  }
  std::vector<double> times;
  times.reserve(g);
  const double step = horizon / static_cast<double>(g);
  for (std::size_t j = 0; j < g; ++j) {
    times.push_back(step * static_cast<double>(include_zero ? j : j + 1));
  }
  return TimeGrid(std::move(times), mode);
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

}  // namespace

double record_noise(std::uint64_t seed, std::size_t i, std::size_t j, std::size_t channel) {
  std::uint64_t key = splitmix64(seed);
  key = splitmix64(key ^ static_cast<std::uint64_t>(i));
  key = splitmix64(key ^ static_cast<std::uint64_t>(j));
  key = splitmix64(key ^ static_cast<std::uint64_t>(channel));
  std::mt19937_64 engine(key);
  std::normal_distribution<double> normal(0.0, 1.0);
  return normal(engine);
}

namespace {

void require_noise(const NoiseModel& noise) {
  if (!(noise.std >= 0.0) || !std::isfinite(noise.std)) {
    throw ValidationError("noise std must be finite and nonnegative");
  }
}

std::vector<DensityMatrix> evolve_on_grid(const GklsGenerator& gen, const DensityMatrix& rho0,
                                          const TimeGrid& grid) {
  std::vector<DensityMatrix> states;
  states.reserve(grid.size());
  for (double t : grid.times()) states.push_back(propagate_state(gen, rho0, t).density());
  return states;
}

}  // namespace

std::vector<MeasurementRecord> simulate_measurements(const GklsGenerator& gen,
                                                     const DensityMatrix& rho0,
                                                     const ObservableSet& set, const TimeGrid& grid,
                                                     const NoiseModel& noise) {
  if (rho0.dim() != gen.dim() || set.dim() != gen.dim()) {
    throw DimensionError("simulate_measurements: dimension mismatch");
  }
  require_noise(noise);
  const auto states = evolve_on_grid(gen, rho0, grid);
  std::vector<MeasurementRecord> records;
  records.reserve(set.size() * grid.size());
  for (std::size_t i = 0; i < set.size(); ++i) {
    for (std::size_t j = 0; j < grid.size(); ++j) {
      double value = mean_value(set[i], states[j]);
      if (noise.std > 0.0) value += noise.std * record_noise(noise.seed, i, j, 0);
      records.push_back({i, j, grid[j], Complex(value, 0.0), noise.std, noise.seed});
    }
  }
  return records;
}

std::vector<MeasurementRecord> simulate_complex_measurements(const GklsGenerator& gen,
                                                             const DensityMatrix& rho0,
                                                             const GeneralizedObservable& a,
                                                             const TimeGrid& grid,
                                                             const NoiseModel& noise) {
  if (rho0.dim() != gen.dim() || a.dim() != gen.dim()) {
    throw DimensionError("simulate_complex_measurements: dimension mismatch");
  }
  require_noise(noise);
  const auto states = evolve_on_grid(gen, rho0, grid);
  std::vector<MeasurementRecord> records;
  records.reserve(grid.size());
  for (std::size_t j = 0; j < grid.size(); ++j) {
    double re = mean_value(a.q1(), states[j]);
    double im = mean_value(a.q2(), states[j]);
    if (noise.std > 0.0) {
      re += noise.std * record_noise(noise.seed, 0, j, 0);
      im += noise.std * record_noise(noise.seed, 0, j, 1);
    }
    records.push_back({0, j, grid[j], Complex(re, im), noise.std, noise.seed});
  }
  return records;
}

std::vector<MeasurementRecord> split_complex_records(const std::vector<MeasurementRecord>& records) {
  std::vector<MeasurementRecord> out;
  out.reserve(2 * records.size());
  for (const auto& r : records) {
    MeasurementRecord re = r;
    re.observable_index = 2 * r.observable_index;
    re.value = Complex(r.value.real(), 0.0);
    MeasurementRecord im = r;
    im.observable_index = 2 * r.observable_index + 1;
    im.value = Complex(r.value.imag(), 0.0);
    out.push_back(re);
    out.push_back(im);
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return std::tie(x.observable_index, x.time_index) < std::tie(y.observable_index, y.time_index);
  });
  return out;
}

ObservableSet channel_set(const GeneralizedObservable& a, const std::string& label) {
  return ObservableSet({a.q1(), a.q2()}, {"Re(" + label + ")", "Im(" + label + ")"});
}

MeasurementFrame assemble_frame(const GklsGenerator& gen, const ObservableSet& set,
                                const TimeGrid& grid, const FrameOptions& opts) {
  if (set.dim() != gen.dim()) throw DimensionError("assemble_frame: dimension mismatch");
  const std::size_t n = gen.dim();
  const auto n2 = static_cast<Eigen::Index>(n * n);
  const std::size_t rows = set.size() * grid.size() + (opts.trace_row ? 1 : 0);

  MeasurementFrame frame;
  frame.dim = n;
  frame.matrix.resize(static_cast<Eigen::Index>(rows), n2);
  frame.row_map.reserve(rows);

  // Row for (i, j) is the Heisenberg-evolved observable, so that
  // Tr(Q_i e^{Lt} rho0) = <e^{L* t} Q_i, rho0>_HS.
  std::vector<ComplexMatrix> propagators;
  propagators.reserve(grid.size());
  for (double t : grid.times()) propagators.push_back(expm(gen.heisenberg().matrix * t));

  Eigen::Index row = 0;
  for (std::size_t i = 0; i < set.size(); ++i) {
    const ComplexVector q = vectorize(set[i].matrix());
    for (std::size_t j = 0; j < grid.size(); ++j) {
      const ComplexMatrix evolved = hermitian_part(devectorize(propagators[j] * q));
      frame.matrix.row(row++) = vectorize(evolved).conjugate().transpose();
      frame.row_map.push_back({i, j, false});
    }
  }
  if (opts.trace_row) {
    frame.matrix.row(row) = vectorize(identity(n)).transpose();
    frame.row_map.push_back({0, 0, true});
  }
  return frame;
}

ReconstructionResult reconstruct(const std::vector<MeasurementRecord>& records,
                                 const MeasurementFrame& frame, const ReconstructOptions& opts) {
  if (frame.row_map.empty()) throw ValidationError("reconstruct: empty measurement frame");
  std::map<std::pair<std::size_t, std::size_t>, double> data;
  for (const auto& r : records) {
    if (!std::isfinite(r.value.real()) || !std::isfinite(r.value.imag())) {
      throw ValidationError("reconstruct: non-finite record value");
    }
    if (!data.emplace(std::make_pair(r.observable_index, r.time_index), r.value.real()).second) {
      throw ValidationError("reconstruct: duplicate record for observable " +
                            std::to_string(r.observable_index) + ", time " +
                            std::to_string(r.time_index));
    }
  }
  const std::size_t measured_rows =
      std::count_if(frame.row_map.begin(), frame.row_map.end(), [](const auto& f) { return !f.trace_row; });
  if (data.size() != measured_rows) {
    throw ValidationError("reconstruct: " + std::to_string(data.size()) + " records for " +
                          std::to_string(measured_rows) + " frame rows");
  }

  ComplexVector b(static_cast<Eigen::Index>(frame.row_map.size()));
  for (std::size_t k = 0; k < frame.row_map.size(); ++k) {
    const auto& fr = frame.row_map[k];
    if (fr.trace_row) {
      b(static_cast<Eigen::Index>(k)) = 1.0;
      continue;
    }
    const auto it = data.find({fr.observable_index, fr.time_index});
    if (it == data.end()) {
      throw ValidationError("reconstruct: no record for observable " +
                            std::to_string(fr.observable_index) + ", time " +
                            std::to_string(fr.time_index));
    }
    b(static_cast<Eigen::Index>(k)) = it->second;
  }

  const ComplexMatrix& f = frame.matrix;
  Eigen::JacobiSVD<ComplexMatrix> svd(f, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& s = svd.singularValues();
  const double cutoff = s.size() > 0 ? rank_cutoff(s(0), f.rows(), f.cols(), opts.rank_tol) : 0.0;

  ComplexVector x = ComplexVector::Zero(f.cols());
  std::size_t rank = 0;
  for (Eigen::Index k = 0; k < s.size(); ++k) {
    if (s(k) > cutoff && s(0) > 0.0) {
      x += svd.matrixV().col(k) * (svd.matrixU().col(k).dot(b) / s(k));
      ++rank;
    }
  }

  const auto n2 = f.cols();
  // A rank-deficient frame reports an infinite condition number rather than
  // the ratio to a rounding-level singular value.
  double cond = std::numeric_limits<double>::infinity();
  if (rank == static_cast<std::size_t>(n2)) cond = s(0) / s(n2 - 1);

  const ComplexMatrix raw = devectorize(x);
  DensityMatrix rho_hat = project_to_density(raw);
  const bool moved = (rho_hat.matrix() - hermitian_part(raw)).norm() > 1e-12;
  return ReconstructionResult{std::move(rho_hat), raw, (f * x - b).norm(), cond, rank, moved};
}

std::optional<HermitianObservable> frame_null_direction(const MeasurementFrame& frame,
                                                        RankTolerance tol) {
  const HermitianBasis basis(frame.dim);
  const auto d = static_cast<Eigen::Index>(basis.size());
  ComplexMatrix unit_vecs(d, d);
  for (Eigen::Index k = 0; k < d; ++k) {
    const auto idx = static_cast<std::size_t>(k);
    unit_vecs.col(k) = vectorize(basis[idx].matrix()) / basis.norm(idx);
  }
  // Hermitian unknowns in real coordinates; the trace constraint keeps the
  // direction traceless so it can perturb a state into another state.
  RealMatrix real_frame(frame.matrix.rows() + 1, d);
  real_frame.topRows(frame.matrix.rows()) = (frame.matrix * unit_vecs).real();
  real_frame.bottomRows(1) = RealMatrix::Zero(1, d);
  real_frame(frame.matrix.rows(), d - 1) = 1.0;

  Eigen::JacobiSVD<RealMatrix> svd(real_frame, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  const double cutoff = rank_cutoff(s(0), real_frame.rows(), real_frame.cols(), tol);
  Eigen::Index rank = 0;
  for (Eigen::Index k = 0; k < s.size(); ++k) {
    if (s(k) > cutoff) ++rank;
  }
  if (rank == d) return std::nullopt;
  ComplexMatrix direction = basis.from_coordinates(svd.matrixV().col(d - 1));
  direction /= hs_norm(direction);
  return force_hermitize(direction);
}

RealVector project_to_simplex(const RealVector& v) {
  const Eigen::Index n = v.size();
  std::vector<double> u(v.data(), v.data() + n);
  std::sort(u.begin(), u.end(), std::greater<>());
  double running = 0.0;
  double theta = 0.0;
  for (Eigen::Index j = 0; j < n; ++j) {
    running += u[static_cast<std::size_t>(j)];
    const double candidate = (running - 1.0) / static_cast<double>(j + 1);
    if (u[static_cast<std::size_t>(j)] - candidate > 0.0) theta = candidate;
  }
  return (v.array() - theta).max(0.0).matrix();
}

DensityMatrix project_to_density(const ComplexMatrix& m) {
  require_square(m, "project_to_density");
  require_finite(m, "project_to_density");
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(hermitian_part(m));
  const RealVector p = project_to_simplex(eig.eigenvalues());
  const ComplexMatrix& v = eig.eigenvectors();
  const ComplexMatrix rho = v * p.cast<Complex>().asDiagonal() * v.adjoint();
  return DensityMatrix(hermitian_part(rho));
}

namespace {

ComplexMatrix psd_sqrt(const ComplexMatrix& m) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(hermitian_part(m));
  const RealVector root = eig.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  return eig.eigenvectors() * root.cast<Complex>().asDiagonal() * eig.eigenvectors().adjoint();
}

void require_same_dim(const DensityMatrix& a, const DensityMatrix& b, const char* what) {
  if (a.dim() != b.dim()) throw DimensionError(std::string(what) + ": dimension mismatch");
}

}  // namespace

double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma) {
  require_same_dim(rho, sigma, "fidelity");
  const ComplexMatrix root = psd_sqrt(rho.matrix());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(hermitian_part(root * sigma.matrix() * root),
                                                  Eigen::EigenvaluesOnly);
  const double tr = eig.eigenvalues().cwiseMax(0.0).cwiseSqrt().sum();
  return std::clamp(tr * tr, 0.0, 1.0);
}

double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma) {
  require_same_dim(rho, sigma, "trace_distance");
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(hermitian_part(rho.matrix() - sigma.matrix()),
                                                  Eigen::EigenvaluesOnly);
  return std::clamp(0.5 * eig.eigenvalues().cwiseAbs().sum(), 0.0, 1.0);
}

}  // namespace strobo
