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

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>

#include "strobo/cli.hpp"
#include "test_support.hpp"

using namespace strobo;

namespace {

const std::string kConfigDir = STROBO_CONFIG_DIR;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "strobo");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string config(const std::string& name) { return kConfigDir + "/" + name; }

}  // namespace

TEST_CASE("check exit codes") {
  const Run demo = run({"check", "--config", config("qubit_demo.json")});
  CHECK(demo.code == kExitOk);
  CHECK(demo.out.find("span: 4/4") != std::string::npos);

  const Run sx = run({"check", "--config", config("qubit_sigma_x.json")});
  CHECK(sx.code == kExitNotReconstructible);
  CHECK(sx.out.find("span: 2/4") != std::string::npos);
  CHECK(sx.out.find("missing direction") != std::string::npos);

  CHECK(run({"check", "--config", config("non_square.json")}).code == kExitInputError);

  const Run bad = run({"check", "--config", config("malformed.json")});
  CHECK(bad.code == kExitInputError);
  CHECK(bad.err.find("malformed.json:") != std::string::npos);

  CHECK(run({"check", "--config", config("does_not_exist.json")}).code == kExitInputError);
  CHECK(run({"frobnicate"}).code == kExitInputError);
}

TEST_CASE("identity augmentation override flips the sigma_x verdict only partially") {
  const Run r = run({"check", "--config", config("qubit_sigma_x.json"), "--identity-augmented", "true"});
  CHECK(r.code == kExitNotReconstructible);
  CHECK(r.out.find("span: 3/4") != std::string::npos);
}

TEST_CASE("roundtrip exit codes") {
  const Run ok = run({"roundtrip", "--config", config("qubit_demo.json"), "--json"});
  CHECK(ok.code == kExitOk);
  const Json j = Json::parse(ok.out);
  CHECK(j.at("fidelity").get<double>() >= 1.0 - 1e-10);
  CHECK(j.at("hs_error").get<double>() <= 1e-8);

  const Run degenerate = run({"roundtrip", "--config", config("degenerate_grid.json")});
  CHECK(degenerate.code == kExitQualityFailure);
  CHECK(degenerate.out.find("warning") != std::string::npos);

  const Run noisy = run({"roundtrip", "--config", config("qubit_noisy.json"), "--json"});
  CHECK(noisy.code == kExitOk);
  const Json nj = Json::parse(noisy.out);
  CHECK(nj.at("trace_distance").get<double>() > 0.0);
  CHECK(nj.at("frame_condition_number").is_number());

  const Run complex_obs = run({"roundtrip", "--config", config("qubit_complex_observable.json"), "--json"});
  CHECK(complex_obs.code == kExitOk);
  const Json cj = Json::parse(complex_obs.out);
  CHECK(cj.at("check").at("notices").size() == 1);
  CHECK(cj.at("check").at("labels").size() == 2);

  CHECK(run({"roundtrip", "--config", config("qubit_sigma_x.json")}).code != kExitOk);
}

TEST_CASE("roundtrip without an initial state is an input error") {
  ProblemConfig cfg = load_config(config("qubit_demo.json"));
  cfg.rho0.reset();
  CHECK_THROWS_AS(run_roundtrip(cfg), ValidationError);
}

TEST_CASE("JSON reports are byte-identical across runs") {
  for (const auto& name : {"qubit_demo.json", "qubit_noisy.json", "amplitude_damping.json"}) {
    const Run a = run({"roundtrip", "--config", config(name), "--json"});
    const Run b = run({"roundtrip", "--config", config(name), "--json"});
    CHECK(a.out == b.out);
    CHECK_FALSE(a.out.empty());
  }
  CHECK(run({"demo", "--json"}).out == run({"demo", "--json"}).out);
}

TEST_CASE("seed override changes noisy data") {
  const Run a = run({"roundtrip", "--config", config("qubit_noisy.json"), "--json", "--seed", "1"});
  const Run b = run({"roundtrip", "--config", config("qubit_noisy.json"), "--json", "--seed", "2"});
  CHECK(a.out != b.out);
}

TEST_CASE("decompose through the CLI") {
  const Run r = run({"decompose", config("raising.json"), "--json"});
  CHECK(r.code == kExitOk);
  const Json j = Json::parse(r.out);
  const ComplexMatrix q = matrix_from_json(j.at("q"));
  const ComplexMatrix rr = matrix_from_json(j.at("r"));
  CHECK(strobo::testing::max_abs_diff(q, 0.5 * pauli::x()) == 0.0);
  CHECK(strobo::testing::max_abs_diff(rr, 0.5 * pauli::y()) == 0.0);
  CHECK(j.at("recomposition_error").get<double>() == 0.0);

  CHECK(run({"decompose", config("non_square_matrix.json")}).code == kExitInputError);
}

TEST_CASE("demo compares against static tomography") {
  const Run r = run({"demo", "--json"});
  CHECK(r.code == kExitOk);
  const Json j = Json::parse(r.out);
  REQUIRE(j.at("scenarios").size() == 2);
  const Json& qubit = j.at("scenarios")[0];
  const Json& four = j.at("scenarios")[1];
  CHECK(qubit.at("observables") == 1);
  CHECK(qubit.at("static_observables") == 3);
  CHECK(four.at("observables") == 2);
  CHECK(four.at("static_observables") == 15);
  for (const auto& s : j.at("scenarios")) {
    CHECK(s.at("hs_error").get<double>() <= 1e-8);
    CHECK(s.at("time_instants").get<std::size_t>() <= 2 * s.at("mu").get<std::size_t>());
  }
  const Run text = run({"demo"});
  CHECK(text.out.find("four-level") != std::string::npos);
}

TEST_CASE("simulate and reconstruct through record files") {
  const std::string records_path = "cli_test_records.json";
  const Run sim = run({"simulate", "--config", config("qubit_demo.json"), "--out", records_path});
  CHECK(sim.code == kExitOk);
  const Run rec = run({"reconstruct", "--config", config("qubit_demo.json"), "--records", records_path, "--json"});
  CHECK(rec.code == kExitOk);
  const Json j = Json::parse(rec.out);
  const ComplexMatrix rho_hat = matrix_from_json(j.at("rho_hat"));
  const ProblemConfig cfg = load_config(config("qubit_demo.json"));
  CHECK((rho_hat - cfg.rho0->matrix()).norm() <= 1e-8);
  std::remove(records_path.c_str());
}

TEST_CASE("CLI results match direct library calls") {
  const ProblemConfig cfg = load_config(config("amplitude_damping.json"));
  const CheckOutcome direct = run_check(cfg);
  const Run r = run({"check", "--config", config("amplitude_damping.json"), "--json"});
  const Json j = Json::parse(r.out);
  CHECK(j.at("mu") == direct.report.mu);
  CHECK(j.at("total_span_dim") == direct.report.total_span_dim);
  CHECK(r.code == (direct.report.reconstructible() ? kExitOk : kExitNotReconstructible));
}

TEST_CASE("config round trip") {
  const ProblemConfig cfg = load_config(config("qubit_noisy.json"));
  const ProblemConfig back = parse_config(config_to_json(cfg));
  CHECK(config_to_json(back) == config_to_json(cfg));
  CHECK(back.noise.std == cfg.noise.std);
  CHECK(back.noise.seed == cfg.noise.seed);
}
