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

#include "strobo/cli.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <utility>

#include <CLI11.hpp>

#include "strobo/errors.hpp"
#include "strobo/hermdecomp.hpp"

namespace strobo {

namespace {

std::vector<ObservableSpec> parse_observables(const Json& list) {
  const std::string path = "observables";
  if (!list.is_array() || list.empty()) throw FormatError(path, "expected a nonempty array");
  std::vector<ObservableSpec> out;
  for (std::size_t k = 0; k < list.size(); ++k) {
    const std::string o_path = path + "[" + std::to_string(k) + "]";
    const Json& item = list[k];
    ObservableSpec spec;
    spec.label = "Q" + std::to_string(k + 1);
    if (item.is_object() && item.contains("matrix")) {
      if (item.contains("label")) {
        if (!item.at("label").is_string()) throw FormatError(o_path + ".label", "expected a string");
        spec.label = item.at("label").get<std::string>();
      }
      spec.matrix = matrix_from_json(item.at("matrix"), o_path + ".matrix");
    } else {
      spec.matrix = matrix_from_json(item, o_path);
    }
    if (spec.matrix.rows() != spec.matrix.cols()) {
      throw FormatError(o_path, "observable must be a square matrix");
    }
    out.push_back(std::move(spec));
  }
  return out;
}

GridSpec parse_grid(const Json& j) {
  const std::string path = "time_grid";
  GridSpec spec;
  if (!j.is_object()) throw FormatError(path, "expected an object");
  const std::string mode = j.value("mode", std::string("uniform"));
  if (mode == "uniform") {
    spec.mode = GridMode::uniform;
    if (j.contains("T")) spec.horizon = number_field(j.at("T"), path + ".T");
    if (j.contains("g")) {
      if (!j.at("g").is_number_integer() || j.at("g").get<long long>() < 1) {
        throw FormatError(path + ".g", "expected a positive integer");
      }
      spec.g = static_cast<std::size_t>(j.at("g").get<long long>());
    }
    if (j.contains("include_zero")) {
      if (!j.at("include_zero").is_boolean()) throw FormatError(path + ".include_zero", "expected a boolean");
      spec.include_zero = j.at("include_zero").get<bool>();
    }
    if (!(spec.horizon > 0.0)) throw FormatError(path + ".T", "horizon must be positive");
  } else if (mode == "explicit") {
    spec.mode = GridMode::explicit_times;
    const Json& times = require_field(j, "times", path);
    if (!times.is_array() || times.empty()) throw FormatError(path + ".times", "expected a nonempty array");
    for (std::size_t k = 0; k < times.size(); ++k) {
      spec.times.push_back(number_field(times[k], path + ".times[" + std::to_string(k) + "]"));
    }
    try {
      make_time_grid(GridMode::explicit_times, 0.0, 0, spec.times);
    } catch (const ValidationError& e) {
      throw FormatError(path + ".times", e.what());
    }
  } else {
    throw FormatError(path + ".mode", "expected \"uniform\" or \"explicit\"");
  }
  return spec;
}

Json grid_spec_to_json(const GridSpec& spec) {
  if (spec.mode == GridMode::explicit_times) return Json{{"mode", "explicit"}, {"times", spec.times}};
  Json out{{"mode", "uniform"}, {"T", spec.horizon}, {"include_zero", spec.include_zero}};
  if (spec.g) out["g"] = *spec.g;
  return out;
}

}  // namespace

ProblemConfig parse_config(const Json& j) {
  if (!j.is_object()) throw FormatError("config", "expected a JSON object");
  GklsGenerator gen = generator_from_json(require_field(j, "generator", "config"), "generator");
  std::vector<ObservableSpec> observables = parse_observables(require_field(j, "observables", "config"));
  for (std::size_t k = 0; k < observables.size(); ++k) {
    if (static_cast<std::size_t>(observables[k].matrix.rows()) != gen.dim()) {
      throw FormatError("observables[" + std::to_string(k) + "]",
                        "dimension does not match the generator (" + std::to_string(gen.dim()) + ")");
    }
  }

  std::optional<DensityMatrix> rho0;
  if (j.contains("rho0") && !j.at("rho0").is_null()) {
    const ComplexMatrix m = matrix_from_json(j.at("rho0"), "rho0");
    if (m.rows() != m.cols() || static_cast<std::size_t>(m.rows()) != gen.dim()) {
      throw FormatError("rho0", "expected a " + std::to_string(gen.dim()) + "x" +
                                    std::to_string(gen.dim()) + " matrix");
    }
    try {
      rho0.emplace(m);
    } catch (const ValidationError& e) {
      throw FormatError("rho0", e.what());
    }
  }

  GridSpec grid;
  if (j.contains("time_grid")) grid = parse_grid(j.at("time_grid"));

  NoiseModel noise;
  if (j.contains("noise")) {
    const Json& nj = j.at("noise");
    if (!nj.is_object()) throw FormatError("noise", "expected an object");
    if (nj.contains("std")) noise.std = number_field(nj.at("std"), "noise.std");
    if (noise.std < 0.0) throw FormatError("noise.std", "must be nonnegative");
    if (nj.contains("seed")) {
      if (!nj.at("seed").is_number_unsigned()) throw FormatError("noise.seed", "expected a nonnegative integer");
      noise.seed = nj.at("seed").get<std::uint64_t>();
    }
  }

  bool identity_augmented = false;
  RankTolerance tol;
  if (j.contains("options")) {
    const Json& oj = j.at("options");
    if (!oj.is_object()) throw FormatError("options", "expected an object");
    if (oj.contains("identity_augmented")) {
      if (!oj.at("identity_augmented").is_boolean()) {
        throw FormatError("options.identity_augmented", "expected a boolean");
      }
      identity_augmented = oj.at("identity_augmented").get<bool>();
    }
    if (oj.contains("rank_tol")) {
      const double t = number_field(oj.at("rank_tol"), "options.rank_tol");
      if (!(t > 0.0)) throw FormatError("options.rank_tol", "must be positive");
      tol = RankTolerance(t);
    }
  }

  return ProblemConfig{std::move(gen), std::move(observables), std::move(rho0), std::move(grid),
                       noise,          identity_augmented,     tol};
}

ProblemConfig load_config(const std::string& path) { return parse_config(load_json_file(path)); }

Json config_to_json(const ProblemConfig& config) {
  Json observables = Json::array();
  for (const auto& o : config.observables) {
    observables.push_back(Json{{"label", o.label}, {"matrix", matrix_to_json(o.matrix)}});
  }
  Json out{{"generator", generator_to_json(config.generator)},
           {"observables", std::move(observables)},
           {"time_grid", grid_spec_to_json(config.time_grid)},
           {"noise", Json{{"std", config.noise.std}, {"seed", config.noise.seed}}},
           {"options", Json{{"identity_augmented", config.identity_augmented},
                            {"rank_tol", config.rank_tol.value()}}}};
  if (config.rho0) out["rho0"] = matrix_to_json(config.rho0->matrix());
  return out;
}

ExpandedObservables expand_observables(const ProblemConfig& config) {
  std::vector<HermitianObservable> channels;
  std::vector<std::string> labels;
  std::vector<std::string> notices;
  for (const auto& spec : config.observables) {
    if (hermiticity_defect(spec.matrix) <= kHermiticityTol) {
      channels.emplace_back(spec.matrix);
      labels.push_back(spec.label);
      continue;
    }
    const GeneralizedObservable a(spec.matrix);
    channels.push_back(a.q1());
    channels.push_back(a.q2());
    labels.push_back("Re(" + spec.label + ")");
    labels.push_back("Im(" + spec.label + ")");
    notices.push_back("observable " + spec.label +
                      " is not Hermitian; measured through its Hermitian decomposition as channels Re(" +
                      spec.label + ") and Im(" + spec.label + ")");
  }
  return {ObservableSet(std::move(channels), std::move(labels)), std::move(notices)};
}

TimeGrid resolve_grid(const GridSpec& spec, std::size_t mu) {
  if (spec.mode == GridMode::explicit_times) {
    return make_time_grid(GridMode::explicit_times, 0.0, 0, spec.times);
  }
  return make_time_grid(GridMode::uniform, spec.horizon, spec.g.value_or(mu), {}, spec.include_zero);
}

CheckOutcome run_check(const ProblemConfig& config) {
  auto expanded = expand_observables(config);
  CheckOptions opts;
  opts.identity_augmented = config.identity_augmented;
  opts.tol = config.rank_tol;
  auto report = reconstructibility_check(config.generator, expanded.set, opts);
  return {std::move(report), expanded.set.labels(), std::move(expanded.notices)};
}

RoundtripOutcome run_roundtrip(const ProblemConfig& config) {
  if (!config.rho0) throw FormatError("rho0", "roundtrip requires an initial state");
  CheckOutcome check = run_check(config);
  const auto expanded = expand_observables(config);
  TimeGrid grid = resolve_grid(config.time_grid, check.report.mu);

  const auto frame =
      assemble_frame(config.generator, expanded.set, grid, {config.identity_augmented});
  const auto records =
      simulate_measurements(config.generator, *config.rho0, expanded.set, grid, config.noise);
  ReconstructionResult result = reconstruct(records, frame, {config.rank_tol});

  const double hs_error = (result.rho_hat.matrix() - config.rho0->matrix()).norm();
  const double fid = fidelity(result.rho_hat, *config.rho0);
  const double td = trace_distance(result.rho_hat, *config.rho0);

  std::vector<std::string> warnings;
  const std::size_t n2 = config.generator.dim() * config.generator.dim();
  if (!result.full_rank()) {
    warnings.push_back("measurement frame has rank " + std::to_string(result.frame_rank) + " < " +
                       std::to_string(n2) + "; the data do not determine the state");
  }
  if (!check.report.reconstructible()) {
    warnings.push_back("observable set is not reconstructible for this generator");
  }

  int code = kExitOk;
  if (config.noise.std == 0.0) {
    if (!(hs_error <= kNoiselessErrorGate)) code = kExitQualityFailure;
  } else {
    const double rows = static_cast<double>(frame.row_map.size());
    const double residual_gate = kResidualSigmas * config.noise.std * std::sqrt(rows);
    if (!result.full_rank() || !(result.residual_norm <= residual_gate)) code = kExitQualityFailure;
  }
  return RoundtripOutcome{std::move(check), std::move(grid), std::move(result), hs_error, fid, td,
                          std::move(warnings), code};
}

std::vector<DemoScenario> demo_scenarios() {
  std::vector<DemoScenario> out;
  {
    GklsGenerator gen = build_gkls(HermitianObservable(pauli::z()), {});
    std::vector<ObservableSpec> obs{{"X+Z+I", pauli::x() + pauli::z() + identity(2)}};
    GridSpec grid;  // uniform on (0, 1] with g = mu
    ProblemConfig cfg{std::move(gen), std::move(obs), DensityMatrix::qubit(0.3, -0.4, 0.5),
                      grid, NoiseModel{}, true, RankTolerance{}};
    out.push_back({"qubit", std::move(cfg)});
  }
  {
    constexpr Eigen::Index n = 4;
    ComplexMatrix h = ComplexMatrix::Zero(n, n);
    h(0, 0) = 1.0;
    h(1, 1) = 0.3;
    h(2, 2) = -0.4;
    h(3, 3) = -1.1;
    h(0, 1) = h(1, 0) = 0.25;
    h(1, 2) = h(2, 1) = 0.2;
    h(2, 3) = h(3, 2) = 0.15;
    h(0, 3) = Complex(0.0, 0.1);
    h(3, 0) = Complex(0.0, -0.1);
    // Ladder-type decay plus weak dephasing.
    ComplexMatrix lower = ComplexMatrix::Zero(n, n);
    lower(0, 1) = 1.0;
    lower(1, 2) = 0.8;
    lower(2, 3) = 0.6;
    ComplexMatrix dephase = ComplexMatrix::Zero(n, n);
    dephase.diagonal() << 1.0, 0.5, -0.5, -1.0;
    GklsGenerator gen = build_gkls(HermitianObservable(h), {{lower, 0.2}, {dephase, 0.1}});

    ComplexMatrix population = ComplexMatrix::Zero(n, n);
    population(0, 0) = 1.0;
    ComplexMatrix coherence = ComplexMatrix::Zero(n, n);
    coherence(0, 1) = coherence(1, 0) = 1.0;
    coherence(2, 3) = coherence(3, 2) = 1.0;
    std::vector<ObservableSpec> obs{{"P0", population}, {"X01+X23", coherence}};

    ComplexVector psi(n);
    psi << 0.6, Complex(0.3, 0.2), Complex(0.0, -0.4), 0.5;
    psi.normalize();
    const ComplexMatrix rho = 0.7 * psi * psi.adjoint() + 0.3 * identity(n) / 4.0;

    GridSpec grid;
    grid.horizon = 8.0;
    grid.g = 16;
    ProblemConfig cfg{std::move(gen), std::move(obs), DensityMatrix(hermitian_part(rho)),
                      grid, NoiseModel{}, true, RankTolerance{}};
    out.push_back({"four-level", std::move(cfg)});
  }
  return out;
}

ProblemConfig apply_overrides(ProblemConfig config, const CliOptions& opts) {
  if (opts.tol) config.rank_tol = RankTolerance(*opts.tol);
  if (opts.seed) config.noise.seed = *opts.seed;
  if (opts.identity_augmented) config.identity_augmented = *opts.identity_augmented;
  return config;
}

namespace {

std::string format_complex(Complex z) {
  std::ostringstream s;
  s << std::setprecision(6) << z.real();
  if (z.imag() != 0.0) s << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
  return s.str();
}

void print_matrix(std::ostream& out, const ComplexMatrix& m, const std::string& indent = "  ") {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    out << indent << "[";
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      out << (j ? ", " : "") << format_complex(m(i, j));
    }
    out << "]\n";
  }
}

void emit_json(const Json& report, const CliOptions& opts, std::ostream& out) {
  if (opts.json) out << report.dump(2) << "\n";
  if (opts.out) {
    std::ofstream file(*opts.out);
    if (!file) throw FormatError(*opts.out, "cannot open output file");
    file << report.dump(2) << "\n";
  }
}

Json check_json(const CheckOutcome& c) {
  Json j = report_to_json(c.report);
  j["labels"] = c.labels;
  j["notices"] = c.notices;
  return j;
}

void print_check(const CheckOutcome& c, std::ostream& out) {
  const auto& r = c.report;
  for (const auto& note : c.notices) out << "note: " << note << "\n";
  out << "verdict: " << (r.reconstructible() ? "reconstructible" : "not reconstructible") << "\n";
  out << "mu: " << r.mu << (r.mu_ambiguous ? " (warning: rank plateau near tolerance)" : "") << "\n";
  out << "krylov dims:";
  for (std::size_t i = 0; i < r.per_observable_dims.size(); ++i) {
    out << " " << c.labels[i] << "=" << r.per_observable_dims[i];
  }
  out << "\n";
  out << "span: " << r.total_span_dim << "/" << r.target_dim
      << (r.identity_augmented ? " (identity augmented)" : "") << "\n";
  if (r.missing_direction) {
    out << "missing direction:\n";
    print_matrix(out, r.missing_direction->matrix());
  }
}

Json roundtrip_json(const RoundtripOutcome& o) {
  const auto finite_or_null = [](double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); };
  return Json{{"check", check_json(o.check)},
              {"times", o.grid.times()},
              {"result", result_to_json(o.result)},
              {"hs_error", o.hs_error},
              {"fidelity", o.fidelity},
              {"trace_distance", o.trace_distance},
              {"frame_condition_number", finite_or_null(o.result.frame_condition_number)},
              {"warnings", o.warnings},
              {"exit_code", o.exit_code}};
}

}  // namespace

int cmd_check(const ProblemConfig& config, const CliOptions& opts, std::ostream& out) {
  const auto outcome = run_check(apply_overrides(config, opts));
  if (!opts.json) print_check(outcome, out);
  emit_json(check_json(outcome), opts, out);
  return outcome.report.reconstructible() ? kExitOk : kExitNotReconstructible;
}

int cmd_roundtrip(const ProblemConfig& config, const CliOptions& opts, std::ostream& out) {
  const ProblemConfig cfg = apply_overrides(config, opts);
  const auto o = run_roundtrip(cfg);
  if (!opts.json) {
    print_check(o.check, out);
    out << "time instants: " << o.grid.size() << "\n";
    out << "frame rank: " << o.result.frame_rank << ", condition number: "
        << o.result.frame_condition_number << "\n";
    out << "residual: " << o.result.residual_norm << "\n";
    out << "HS error: " << o.hs_error << ", fidelity: " << std::setprecision(15) << o.fidelity
        << std::setprecision(6) << ", trace distance: " << o.trace_distance << "\n";
    for (const auto& w : o.warnings) out << "warning: " << w << "\n";
    out << (o.exit_code == kExitOk ? "roundtrip: ok" : "roundtrip: quality gate failed") << "\n";
  }
  emit_json(roundtrip_json(o), opts, out);
  return o.exit_code;
}

int cmd_decompose(const ComplexMatrix& a, const CliOptions& opts, std::ostream& out) {
  const auto parts = decompose(a);
  const double error = (recompose(parts.q, parts.r) - a).cwiseAbs().maxCoeff();
  if (!opts.json) {
    out << "Q (Hermitian part):\n";
    print_matrix(out, parts.q.matrix());
    out << "R (A = Q + iR):\n";
    print_matrix(out, parts.r.matrix());
    out << "recomposition error: " << error << "\n";
  }
  emit_json(Json{{"q", matrix_to_json(parts.q.matrix())},
                 {"r", matrix_to_json(parts.r.matrix())},
                 {"recomposition_error", error}},
            opts, out);
  return kExitOk;
}

int cmd_demo(const CliOptions& opts, std::ostream& out) {
  Json rows = Json::array();
  int code = kExitOk;
  if (!opts.json) {
    out << std::left << std::setw(12) << "scenario" << std::setw(4) << "n" << std::setw(13)
        << "observables" << std::setw(16) << "static (n^2-1)" << std::setw(15) << "time instants"
        << std::setw(9) << "span" << "HS error\n";
  }
  for (const auto& scenario : demo_scenarios()) {
    const auto o = run_roundtrip(scenario.config);
    const std::size_t n = scenario.config.generator.dim();
    const std::size_t r = scenario.config.observables.size();
    if (o.exit_code != kExitOk || !o.check.report.reconstructible()) code = kExitQualityFailure;
    const std::string span =
        std::to_string(o.check.report.total_span_dim) + "/" + std::to_string(o.check.report.target_dim);
    if (!opts.json) {
      std::ostringstream err;
      err << std::scientific << std::setprecision(2) << o.hs_error;
      out << std::left << std::setw(12) << scenario.name << std::setw(4) << n << std::setw(13) << r
          << std::setw(16) << n * n - 1 << std::setw(15) << o.grid.size() << std::setw(9) << span
          << err.str() << "\n";
    }
    rows.push_back(Json{{"scenario", scenario.name},
                        {"n", n},
                        {"observables", r},
                        {"static_observables", n * n - 1},
                        {"time_instants", o.grid.size()},
                        {"mu", o.check.report.mu},
                        {"total_span_dim", o.check.report.total_span_dim},
                        {"target_dim", o.check.report.target_dim},
                        {"verdict", o.check.report.reconstructible() ? "reconstructible"
                                                                      : "not_reconstructible"},
                        {"hs_error", o.hs_error},
                        {"fidelity", o.fidelity}});
  }
  emit_json(Json{{"scenarios", std::move(rows)}, {"exit_code", code}}, opts, out);
  return code;
}

int cmd_simulate(const ProblemConfig& config, const CliOptions& opts, std::ostream& out) {
  const ProblemConfig cfg = apply_overrides(config, opts);
  if (!cfg.rho0) throw FormatError("rho0", "simulate requires an initial state");
  const auto expanded = expand_observables(cfg);
  const std::size_t mu = generator_mu(cfg.generator, cfg.rank_tol);
  const TimeGrid grid = resolve_grid(cfg.time_grid, mu);
  const auto records = simulate_measurements(cfg.generator, *cfg.rho0, expanded.set, grid, cfg.noise);
  const Json j = records_to_json(records);
  // Records are the payload, so they go to stdout unless --out is given.
  if (opts.out) {
    std::ofstream file(*opts.out);
    if (!file) throw FormatError(*opts.out, "cannot open output file");
    file << j.dump(2) << "\n";
    if (!opts.json) out << "wrote " << records.size() << " records to " << *opts.out << "\n";
  } else {
    out << j.dump(2) << "\n";
  }
  return kExitOk;
}

int cmd_reconstruct(const ProblemConfig& config, const std::vector<MeasurementRecord>& records,
                    const CliOptions& opts, std::ostream& out) {
  const ProblemConfig cfg = apply_overrides(config, opts);
  const auto expanded = expand_observables(cfg);
  const std::size_t mu = generator_mu(cfg.generator, cfg.rank_tol);
  const TimeGrid grid = resolve_grid(cfg.time_grid, mu);
  const auto frame = assemble_frame(cfg.generator, expanded.set, grid, {cfg.identity_augmented});
  const auto result = reconstruct(records, frame, {cfg.rank_tol});
  if (!opts.json) {
    out << "frame rank: " << result.frame_rank << ", condition number: "
        << result.frame_condition_number << ", residual: " << result.residual_norm << "\n";
    out << "rho_hat:\n";
    print_matrix(out, result.rho_hat.matrix());
    if (!result.full_rank()) out << "warning: measurement frame is rank deficient\n";
  }
  emit_json(result_to_json(result), opts, out);
  return result.full_rank() ? kExitOk : kExitQualityFailure;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Stroboscopic quantum state tomography"};
  app.require_subcommand(1);

  CliOptions opts;
  std::string config_path;
  std::string matrix_path;
  std::string records_path;
  double tol = 0.0;
  std::uint64_t seed = 0;
  bool identity_augmented = false;
  std::string out_path;

  const auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--json", opts.json, "Print the report as JSON");
    sub->add_option("--tol", tol, "Relative rank tolerance")->check(CLI::PositiveNumber);
    sub->add_option("--seed", seed, "Noise seed");
    sub->add_option("--identity-augmented", identity_augmented,
                    "Treat the unit trace as known data (true/false)");
    sub->add_option("--out", out_path, "Also write the JSON report to this path");
  };

  auto* check = app.add_subcommand("check", "Decide reconstructibility of an observable set");
  check->add_option("--config", config_path, "Problem configuration")->required();
  add_common(check);
  auto* roundtrip = app.add_subcommand("roundtrip", "Simulate, reconstruct and score rho(0)");
  roundtrip->add_option("--config", config_path, "Problem configuration")->required();
  add_common(roundtrip);
  auto* decompose_cmd = app.add_subcommand("decompose", "Hermitian decomposition A = Q + iR");
  decompose_cmd->add_option("matrix", matrix_path, "Matrix file")->required();
  add_common(decompose_cmd);
  auto* demo = app.add_subcommand("demo", "Built-in comparison with static tomography");
  add_common(demo);
  auto* simulate = app.add_subcommand("simulate", "Write simulated measurement records");
  simulate->add_option("--config", config_path, "Problem configuration")->required();
  add_common(simulate);
  auto* reconstruct_cmd = app.add_subcommand("reconstruct", "Reconstruct rho(0) from records");
  reconstruct_cmd->add_option("--config", config_path, "Problem configuration")->required();
  reconstruct_cmd->add_option("--records", records_path, "Records file")->required();
  add_common(reconstruct_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitInputError;
  }

  CLI::App* active = app.get_subcommands().front();
  if (active->count("--tol")) opts.tol = tol;
  if (active->count("--seed")) opts.seed = seed;
  if (active->count("--identity-augmented")) opts.identity_augmented = identity_augmented;
  if (active->count("--out")) opts.out = out_path;

  try {
    if (active == check) return cmd_check(load_config(config_path), opts, out);
    if (active == roundtrip) return cmd_roundtrip(load_config(config_path), opts, out);
    if (active == decompose_cmd) {
      return cmd_decompose(matrix_from_json(load_json_file(matrix_path), matrix_path), opts, out);
    }
    if (active == demo) return cmd_demo(opts, out);
    if (active == simulate) return cmd_simulate(load_config(config_path), opts, out);
    if (active == reconstruct_cmd) {
      const auto records = records_from_json(load_json_file(records_path), records_path);
      return cmd_reconstruct(load_config(config_path), records, opts, out);
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::range_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace strobo
