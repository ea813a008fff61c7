// Copyright 2026 The qrelent Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QRELENT_MATRIX_IO_HPP
#define QRELENT_MATRIX_IO_HPP

#include <string>

#include <json.hpp>

#include "qrelent/channels.hpp"
#include "qrelent/matrix.hpp"

namespace qrelent {

// Matrix JSON schema, shared by every file interface:
//   {"n": <int>, "entries": [[[re, im], ...], ...]}   (row-major)
// Map-spec JSON schema:
//   {"tag": "measurement" | "kraus" | "transpose" | "pinching" |
//           "partial_trace" | "compose", ...payload}
// with payloads "povm" / "ops" / "projectors" (arrays of matrices),
// "dims": [dA, dB] plus "side": "A"|"B" (the factor traced out), and
// "maps" (array of specs, applied first to last).

/// Schema violations raise MalformedSpec.
ComplexMatrix matrix_from_json(const nlohmann::json& j);

nlohmann::json matrix_to_json(const ComplexMatrix& m);

/// Parses a matrix file; IoError when unreadable, MalformedSpec when the
/// content is not valid JSON in the schema above.
ComplexMatrix read_matrix(const std::string& path);

/// Writes the schema above with every number at 17 significant digits.
void write_matrix(const std::string& path, const ComplexMatrix& m);

PositiveMapSpec map_spec_from_json(const nlohmann::json& j, const Tolerances& tol = {});

nlohmann::json map_spec_to_json(const PositiveMapSpec& m);

PositiveMapSpec read_map_spec(const std::string& path, const Tolerances& tol = {});

/// %.17g rendering used for CSV cells and the hand-written matrix files.
std::string format_full(double v);

}  // namespace qrelent

#endif  // QRELENT_MATRIX_IO_HPP
