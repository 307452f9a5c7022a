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

// Simulated stroboscopic measurements, the linear measurement frame, and
// least-squares reconstruction of the initial state.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "strobo/density_matrix.hpp"
#include "strobo/dynamics.hpp"
#include "strobo/hermdecomp.hpp"
#include "strobo/matcore.hpp"
#include "strobo/observability.hpp"

namespace strobo {

enum class GridMode { uniform, explicit_times };

class TimeGrid {
public:
  /// Validates: at least one time, all finite, nonnegative, strictly increasing.
  TimeGrid(std::vector<double> times, GridMode mode);

  const std::vector<double>& times() const { return times_; }
  std::size_t size() const { return times_.size(); }
  double operator[](std::size_t j) const { return times_[j]; }
  GridMode mode() const { return mode_; }
  double horizon() const { return times_.back(); }

private:
  std::vector<double> times_;
  GridMode mode_;
};

/// Uniform mode: t_j = j T / g for j = 1..g, or (j - 1) T / g when
/// include_zero is set. Explicit mode sorts and validates `explicit_times`.
TimeGrid make_time_grid(GridMode mode, double horizon, std::size_t g,
                        const std::vector<double>& explicit_times = {}, bool include_zero = false);

struct NoiseModel {
  double std = 0.0;
  std::uint64_t seed = 0;
};

struct MeasurementRecord {
  std::size_t observable_index = 0;
  std::size_t time_index = 0;
  double time = 0.0;
  /// Real for Hermitian observables; both channels for generalized ones.
  Complex value;
  double noise_std = 0.0;
  std::uint64_t seed_tag = 0;
};

/// Standard normal draw that depends only on (seed, i, j, channel).
double record_noise(std::uint64_t seed, std::size_t i, std::size_t j, std::size_t channel);

std::vector<MeasurementRecord> simulate_measurements(const GklsGenerator& gen,
                                                     const DensityMatrix& rho0,
                                                     const ObservableSet& set, const TimeGrid& grid,
                                                     const NoiseModel& noise = {});

/// <A>_t = <Q1>_t + i <Q2>_t, each channel perturbed independently.
std::vector<MeasurementRecord> simulate_complex_measurements(const GklsGenerator& gen,
                                                             const DensityMatrix& rho0,
                                                             const GeneralizedObservable& a,
                                                             const TimeGrid& grid,
                                                             const NoiseModel& noise = {});

/// Splits complex records into two real channels with observable indices
/// 2i (from Q1) and 2i + 1 (from Q2), matching the order of channel_set().
std::vector<MeasurementRecord> split_complex_records(const std::vector<MeasurementRecord>& records);

/// {Q1, Q2} of a generalized observable as an observable set.
ObservableSet channel_set(const GeneralizedObservable& a, const std::string& label = "A");

struct FrameRow {
  std::size_t observable_index = 0;
  std::size_t time_index = 0;
  bool trace_row = false;
};

struct MeasurementFrame {
  /// Rows conj(vec(Q_i(t_j)))^T so that row . vec(rho0) = Tr(Q_i rho(t_j)).
  ComplexMatrix matrix;
  std::vector<FrameRow> row_map;
  std::size_t dim = 0;
};

struct FrameOptions {
  bool trace_row = false;
};

MeasurementFrame assemble_frame(const GklsGenerator& gen, const ObservableSet& set,
                                const TimeGrid& grid, const FrameOptions& opts = {});

struct ReconstructOptions {
  RankTolerance rank_tol{};
};

struct ReconstructionResult {
  DensityMatrix rho_hat;
  ComplexMatrix raw_solution;
  double residual_norm = 0.0;
  double frame_condition_number = 0.0;
  std::size_t frame_rank = 0;
  /// True when the projection moved the Hermitian part of the raw solution.
  bool projected = false;

  bool full_rank() const { return frame_rank == rho_hat.dim() * rho_hat.dim(); }
};

ReconstructionResult reconstruct(const std::vector<MeasurementRecord>& records,
                                 const MeasurementFrame& frame, const ReconstructOptions& opts = {});

/// Unit HS-norm traceless Hermitian H with frame . vec(H) = 0, if the frame
/// is rank deficient on the Hermitian matrices.
std::optional<HermitianObservable> frame_null_direction(const MeasurementFrame& frame,
                                                        RankTolerance tol = {});

/// HS-nearest density matrix to the Hermitian part of m.
DensityMatrix project_to_density(const ComplexMatrix& m);

/// Euclidean projection onto the probability simplex.
RealVector project_to_simplex(const RealVector& v);

double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma);
double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma);

}  // namespace strobo
