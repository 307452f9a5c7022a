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

#include "strobo/serialization.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace strobo {

FormatError::FormatError(const std::string& path, const std::string& message)
    : ValidationError(path + ": " + message), path_(path) {}

const Json& require_field(const Json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) throw FormatError(path, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) throw FormatError(path + "." + key, "missing field");
  return *it;
}

double number_field(const Json& j, const std::string& path) {
  if (!j.is_number()) throw FormatError(path, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw FormatError(path, "expected a finite number");
  return v;
}

namespace {

Eigen::Index count_field(const Json& j, const std::string& path) {
  if (!j.is_number_integer() || j.get<long long>() < 0) {
    throw FormatError(path, "expected a nonnegative integer");
  }
  return static_cast<Eigen::Index>(j.get<long long>());
}

Complex complex_from_json(const Json& j, const std::string& path) {
  if (j.is_number()) return {number_field(j, path), 0.0};
  if (!j.is_array() || j.size() != 2) throw FormatError(path, "expected [re, im]");
  return {number_field(j[0], path + "[0]"), number_field(j[1], path + "[1]")};
}

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

}  // namespace

Json matrix_to_json(const ComplexMatrix& m) {
  Json data = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(complex_to_json(m(i, j)));
    data.push_back(std::move(row));
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

ComplexMatrix matrix_from_json(const Json& j, const std::string& path) {
  const Eigen::Index rows = count_field(require_field(j, "rows", path), path + ".rows");
  const Eigen::Index cols = count_field(require_field(j, "cols", path), path + ".cols");
  const Json& data = require_field(j, "data", path);
  if (!data.is_array() || static_cast<Eigen::Index>(data.size()) != rows) {
    throw FormatError(path + ".data", "expected " + std::to_string(rows) + " rows");
  }
  ComplexMatrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const std::string row_path = path + ".data[" + std::to_string(r) + "]";
    const Json& row = data[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) {
      throw FormatError(row_path, "expected " + std::to_string(cols) + " entries");
    }
    for (Eigen::Index c = 0; c < cols; ++c) {
      m(r, c) = complex_from_json(row[static_cast<std::size_t>(c)],
                                  row_path + "[" + std::to_string(c) + "]");
    }
  }
  return m;
}

Json generator_to_json(const GklsGenerator& gen) {
  Json dissipators = Json::array();
  for (const auto& d : gen.dissipators()) {
    dissipators.push_back(Json{{"op", matrix_to_json(d.op)}, {"rate", d.rate}});
  }
  return Json{{"dim", gen.dim()},
              {"hamiltonian", matrix_to_json(gen.hamiltonian().matrix())},
              {"dissipators", std::move(dissipators)}};
}

GklsGenerator generator_from_json(const Json& j, const std::string& path) {
  const Eigen::Index dim = count_field(require_field(j, "dim", path), path + ".dim");
  const std::string h_path = path + ".hamiltonian";
  const ComplexMatrix h = matrix_from_json(require_field(j, "hamiltonian", path), h_path);
  if (h.rows() != dim || h.cols() != dim) {
    throw FormatError(h_path, "expected a " + std::to_string(dim) + "x" + std::to_string(dim) +
                                  " matrix");
  }
  std::vector<Dissipator> dissipators;
  if (j.contains("dissipators")) {
    const Json& list = j.at("dissipators");
    if (!list.is_array()) throw FormatError(path + ".dissipators", "expected an array");
    for (std::size_t k = 0; k < list.size(); ++k) {
      const std::string d_path = path + ".dissipators[" + std::to_string(k) + "]";
      Dissipator d;
      d.op = matrix_from_json(require_field(list[k], "op", d_path), d_path + ".op");
      if (d.op.rows() != dim || d.op.cols() != dim) {
        throw FormatError(d_path + ".op", "expected a " + std::to_string(dim) + "x" +
                                              std::to_string(dim) + " matrix");
      }
      d.rate = number_field(require_field(list[k], "rate", d_path), d_path + ".rate");
      if (d.rate < 0.0) throw FormatError(d_path + ".rate", "rate must be nonnegative");
      dissipators.push_back(std::move(d));
    }
  }
  try {
    return build_gkls(HermitianObservable(h), std::move(dissipators));
  } catch (const ValidationError& e) {
    throw FormatError(path, e.what());
  }
}

Json records_to_json(const std::vector<MeasurementRecord>& records) {
  Json out = Json::array();
  for (const auto& r : records) {
    out.push_back(Json{{"i", r.observable_index},
                       {"j", r.time_index},
                       {"t", r.time},
                       {"value", complex_to_json(r.value)},
                       {"noise_std", r.noise_std}});
  }
  return out;
}

std::vector<MeasurementRecord> records_from_json(const Json& j, const std::string& path) {
  if (!j.is_array()) throw FormatError(path, "expected an array of records");
  std::vector<MeasurementRecord> out;
  out.reserve(j.size());
  for (std::size_t k = 0; k < j.size(); ++k) {
    const std::string r_path = path + "[" + std::to_string(k) + "]";
    const Json& item = j[k];
    MeasurementRecord r;
    r.observable_index = static_cast<std::size_t>(count_field(require_field(item, "i", r_path), r_path + ".i"));
    r.time_index = static_cast<std::size_t>(count_field(require_field(item, "j", r_path), r_path + ".j"));
    r.time = number_field(require_field(item, "t", r_path), r_path + ".t");
    r.value = complex_from_json(require_field(item, "value", r_path), r_path + ".value");
    r.noise_std = number_field(require_field(item, "noise_std", r_path), r_path + ".noise_std");
    out.push_back(r);
  }
  return out;
}

Json report_to_json(const ObservabilityReport& report) {
  Json out{{"verdict", report.reconstructible() ? "reconstructible" : "not_reconstructible"},
           {"mu", report.mu},
           {"mu_ambiguous", report.mu_ambiguous},
           {"per_observable_dims", report.per_observable_dims},
           {"total_span_dim", report.total_span_dim},
           {"target_dim", report.target_dim},
           {"identity_augmented", report.identity_augmented},
           {"tolerance_used", report.tolerance_used}};
  out["missing_direction"] = report.missing_direction
                                 ? matrix_to_json(report.missing_direction->matrix())
                                 : Json(nullptr);
  return out;
}

Json result_to_json(const ReconstructionResult& result) {
  const double cond = result.frame_condition_number;
  return Json{{"rho_hat", matrix_to_json(result.rho_hat.matrix())},
              {"raw_solution", matrix_to_json(result.raw_solution)},
              {"residual_norm", result.residual_norm},
              // JSON has no infinity; a singular frame reports null.
              {"frame_condition_number", std::isfinite(cond) ? Json(cond) : Json(nullptr)},
              {"frame_rank", result.frame_rank},
              {"projected", result.projected}};
}

Json parse_json_text(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::size_t line = 1;
    std::size_t column = 1;
    const std::size_t limit = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t k = 0; k < limit; ++k) {
      if (text[k] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw FormatError(source + ":" + std::to_string(line) + ":" + std::to_string(column),
                      "malformed JSON");
  }
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError(path, "cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_json_text(buffer.str(), path);
}

}  // namespace strobo
