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
#include <limits>
#include <string>

#include <doctest.h>

#include "strobo/serialization.hpp"
#include "test_support.hpp"

using namespace strobo;

TEST_CASE("matrix JSON round trip is bit-exact") {
  strobo::testing::Rng rng(61);
  for (Eigen::Index n = 1; n <= 4; ++n) {
    ComplexMatrix m = strobo::testing::random_square(rng, n);
    m(0, 0) = Complex(1.0 / 3.0, -std::numeric_limits<double>::denorm_min());
    const std::string text = matrix_to_json(m).dump();
    const ComplexMatrix back = matrix_from_json(parse_json_text(text, "inline"));
    CHECK((back.array() == m.array()).all());
  }
}

TEST_CASE("matrix JSON accepts plain real entries") {
  const Json j = parse_json_text(R"({"rows": 2, "cols": 2, "data": [[1, [0, -1]], [[0, 1], 2]]})", "inline");
  const ComplexMatrix m = matrix_from_json(j);
  CHECK(m(0, 0) == Complex(1.0));
  CHECK(m(0, 1) == Complex(0.0, -1.0));
  CHECK(m(1, 1) == Complex(2.0));
}

TEST_CASE("malformed matrices name the offending field") {
  const auto message_of = [](const std::string& text) {
    try {
      matrix_from_json(parse_json_text(text, "inline"), "obs");
    } catch (const FormatError& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(message_of(R"({"rows": 2, "cols": 2})").find("obs.data") != std::string::npos);
  CHECK(message_of(R"({"rows": 1, "cols": 1, "data": [[["a", 0]]]})").find("obs.data[0][0]") !=
        std::string::npos);
  CHECK(message_of(R"({"rows": 2, "cols": 2, "data": [[1, 2]]})") != "");
  CHECK(message_of(R"({"rows": 1, "cols": 1, "data": [[[1, 2, 3]]]})") != "");
}

TEST_CASE("syntax errors carry line and column") {
  try {
    parse_json_text("{\n  \"a\": [1,\n}\n", "cfg.json");
    FAIL("expected a FormatError");
  } catch (const FormatError& e) {
    CHECK(e.path().rfind("cfg.json:3:", 0) == 0);
  }
}

TEST_CASE("generator JSON round trip") {
  strobo::testing::Rng rng(62);
  const GklsGenerator gen = strobo::testing::random_generator(rng, 3, 2);
  const GklsGenerator back = generator_from_json(parse_json_text(generator_to_json(gen).dump(), "inline"));
  CHECK((back.hamiltonian().matrix().array() == gen.hamiltonian().matrix().array()).all());
  REQUIRE(back.dissipators().size() == 2);
  CHECK(back.dissipators()[1].rate == gen.dissipators()[1].rate);
  CHECK((back.dissipators()[1].op.array() == gen.dissipators()[1].op.array()).all());

  Json bad = generator_to_json(gen);
  bad["dissipators"][0]["rate"] = -1.0;
  CHECK_THROWS_AS(generator_from_json(bad), ValidationError);
  bad = generator_to_json(gen);
  bad["dim"] = 2;
  CHECK_THROWS_AS(generator_from_json(bad), ValidationError);
}

TEST_CASE("records JSON round trip") {
  std::vector<MeasurementRecord> records;
  records.push_back({0, 0, 0.25, Complex(0.1, 0.0), 0.0, 0});
  records.push_back({1, 3, 1.0 / 7.0, Complex(-0.3, 2.0 / 3.0), 1e-3, 42});
  const auto back = records_from_json(parse_json_text(records_to_json(records).dump(), "inline"));
  REQUIRE(back.size() == 2);
  CHECK(back[1].observable_index == 1);
  CHECK(back[1].time_index == 3);
  CHECK(back[1].time == records[1].time);
  CHECK(back[1].value == records[1].value);
  CHECK(back[1].noise_std == 1e-3);
}

TEST_CASE("reconstruction result reports an infinite condition number as null") {
  ReconstructionResult r{DensityMatrix::maximally_mixed(2), ComplexMatrix::Identity(2, 2) * 0.5, 0.0,
                         std::numeric_limits<double>::infinity(), 3, false};
  const Json j = result_to_json(r);
  CHECK(j.at("frame_condition_number").is_null());
  CHECK(j.at("frame_rank") == 3);
}
