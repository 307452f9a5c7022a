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

// JSON forms of the shared file formats:
//   matrix     {"rows": n, "cols": n, "data": [[[re, im], ...], ...]}
//   generator  {"dim": n, "hamiltonian": <matrix>, "dissipators": [{"op": <matrix>, "rate": r}]}
//   records    [{"i": int, "j": int, "t": real, "value": [re, im], "noise_std": real}, ...]
// Doubles are written in shortest round-trip form, so parsing a written file
// reproduces every bit.

#include <string>
#include <vector>

#include <json.hpp>

#include "strobo/dynamics.hpp"
#include "strobo/errors.hpp"
#include "strobo/matcore.hpp"
#include "strobo/observability.hpp"
#include "strobo/tomography.hpp"

namespace strobo {

using Json = nlohmann::json;

/// Malformed input; the message names the offending field path.
class FormatError : public ValidationError {
public:
  FormatError(const std::string& path, const std::string& message);

  const std::string& path() const { return path_; }

private:
  std::string path_;
};

Json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const Json& j, const std::string& path = "matrix");

Json generator_to_json(const GklsGenerator& gen);
GklsGenerator generator_from_json(const Json& j, const std::string& path = "generator");

Json records_to_json(const std::vector<MeasurementRecord>& records);
std::vector<MeasurementRecord> records_from_json(const Json& j, const std::string& path = "records");

Json report_to_json(const ObservabilityReport& report);
Json result_to_json(const ReconstructionResult& result);

/// Parses text, converting syntax errors to FormatError with line and column.
Json parse_json_text(const std::string& text, const std::string& source);
Json load_json_file(const std::string& path);

// Field accessors that raise FormatError with the full path.
const Json& require_field(const Json& j, const std::string& key, const std::string& path);
double number_field(const Json& j, const std::string& path);

}  // namespace strobo
