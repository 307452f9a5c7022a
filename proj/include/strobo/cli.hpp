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

// Problem configuration files and the command implementations behind the
// `strobo` executable. Numerical work is delegated to the library; this layer
// validates input, wires the pipeline together and formats reports.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "strobo/density_matrix.hpp"
#include "strobo/dynamics.hpp"
#include "strobo/observability.hpp"
#include "strobo/serialization.hpp"
#include "strobo/tomography.hpp"

namespace strobo {

/// Process exit codes.
enum ExitCode : int {
  kExitOk = 0,
  kExitInputError = 1,
  kExitNotReconstructible = 2,
  kExitQualityFailure = 3,
};

struct ObservableSpec {
  std::string label;
  ComplexMatrix matrix;  ///< may be non-Hermitian
};

struct GridSpec {
  GridMode mode = GridMode::uniform;
  double horizon = 1.0;
  std::optional<std::size_t> g;  ///< uniform mode; defaults to mu
  std::vector<double> times;     ///< explicit mode
  bool include_zero = false;
};

struct ProblemConfig {
  GklsGenerator generator;
  std::vector<ObservableSpec> observables;
  std::optional<DensityMatrix> rho0;
  GridSpec time_grid;
  NoiseModel noise;
  bool identity_augmented = false;
  RankTolerance rank_tol;
};

/// Validates the whole document before returning; errors name the field.
ProblemConfig parse_config(const Json& j);
ProblemConfig load_config(const std::string& path);
Json config_to_json(const ProblemConfig& config);

/// Hermitian observables map to one channel; any other matrix A is routed
/// through its Hermitian decomposition into channels Re(A) and Im(A).
struct ExpandedObservables {
  ObservableSet set;
  std::vector<std::string> notices;
};

ExpandedObservables expand_observables(const ProblemConfig& config);
TimeGrid resolve_grid(const GridSpec& spec, std::size_t mu);

struct CheckOutcome {
  ObservabilityReport report;
  std::vector<std::string> labels;
  std::vector<std::string> notices;
};

CheckOutcome run_check(const ProblemConfig& config);

struct RoundtripOutcome {
  CheckOutcome check;
  TimeGrid grid;
  ReconstructionResult result;
  double hs_error = 0.0;
  double fidelity = 0.0;
  double trace_distance = 0.0;
  std::vector<std::string> warnings;
  int exit_code = kExitOk;
};

/// Noiseless runs pass when ||rho_hat - rho0||_HS <= kNoiselessErrorGate.
/// Noisy runs pass when the frame has full rank and the residual is
/// consistent with the noise level (<= kResidualSigmas * std * sqrt(rows)).
inline constexpr double kNoiselessErrorGate = 1e-8;
inline constexpr double kResidualSigmas = 5.0;

RoundtripOutcome run_roundtrip(const ProblemConfig& config);

struct DemoScenario {
  std::string name;
  ProblemConfig config;
};

/// Qubit with one observable, and a four-level system with two observables;
/// both with identity augmentation.
std::vector<DemoScenario> demo_scenarios();

struct CliOptions {
  bool json = false;
  std::optional<double> tol;
  std::optional<std::uint64_t> seed;
  std::optional<bool> identity_augmented;
  std::optional<std::string> out;
};

/// Applies --tol, --seed and --identity-augmented overrides.
ProblemConfig apply_overrides(ProblemConfig config, const CliOptions& opts);

int cmd_check(const ProblemConfig& config, const CliOptions& opts, std::ostream& out);
int cmd_roundtrip(const ProblemConfig& config, const CliOptions& opts, std::ostream& out);
int cmd_decompose(const ComplexMatrix& a, const CliOptions& opts, std::ostream& out);
int cmd_demo(const CliOptions& opts, std::ostream& out);
int cmd_simulate(const ProblemConfig& config, const CliOptions& opts, std::ostream& out);
int cmd_reconstruct(const ProblemConfig& config, const std::vector<MeasurementRecord>& records,
                    const CliOptions& opts, std::ostream& out);

/// Full command-line entry point; never throws.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace strobo
