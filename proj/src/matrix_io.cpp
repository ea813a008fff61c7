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

#include "qrelent/matrix_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "qrelent/errors.hpp"

namespace qrelent {

namespace {

double number_at(const nlohmann::json& j, const char* what) {
  if (!j.is_number()) throw MalformedSpec(std::string(what) + " must be a number");
  return j.get<double>();
}

std::vector<PsdhMatrix> psdh_list(const nlohmann::json& j, const char* field,
                                  const Tolerances& tol) {
  if (!j.contains(field) || !j[field].is_array() || j[field].empty()) {
    throw MalformedSpec(std::string("map spec needs a nonempty array field '") + field + "'");
  }
  std::vector<PsdhMatrix> out;
  out.reserve(j[field].size());
  for (const auto& item : j[field]) out.push_back(PsdhMatrix(matrix_from_json(item), tol));
  return out;
}

}  // namespace

ComplexMatrix matrix_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("entries")) {
    throw MalformedSpec("matrix JSON must be an object with fields 'n' and 'entries'");
  }
  if (!j["n"].is_number_integer()) throw MalformedSpec("'n' must be an integer");
  const auto n = j["n"].get<long long>();
  if (n < 1) throw MalformedSpec("'n' must be positive");

  const nlohmann::json& rows = j["entries"];
  if (!rows.is_array() || static_cast<long long>(rows.size()) != n) {
    throw MalformedSpec("'entries' must hold exactly n rows");
  }
  ComplexMatrix m(n, n);
  for (long long r = 0; r < n; ++r) {
    const nlohmann::json& row = rows[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<long long>(row.size()) != n) {
      throw MalformedSpec("each row must hold exactly n entries");
    }
    for (long long c = 0; c < n; ++c) {
      const nlohmann::json& e = row[static_cast<std::size_t>(c)];
      if (!e.is_array() || e.size() != 2) {
        throw MalformedSpec("each entry must be a [re, im] pair");
      }
      m(r, c) = Complex(number_at(e[0], "re"), number_at(e[1], "im"));
    }
  }
  return m;
}

nlohmann::json matrix_to_json(const ComplexMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (Index r = 0; r < m.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (Index c = 0; c < m.cols(); ++c) {
      row.push_back({m(r, c).real(), m(r, c).imag()});
    }
    rows.push_back(std::move(row));
  }
  return {{"n", m.rows()}, {"entries", std::move(rows)}};
}

ComplexMatrix read_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw MalformedSpec("'" + path + "' is not valid JSON: " + e.what());
  }
  return matrix_from_json(j);
}

std::string format_full(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_matrix(const std::string& path, const ComplexMatrix& m) {
  if (m.rows() != m.cols()) throw DomainError("matrix files hold square matrices");
  std::ostringstream out;
  out << "{\"n\": " << m.rows() << ", \"entries\": [";
  for (Index r = 0; r < m.rows(); ++r) {
    out << (r ? ",\n" : "\n") << "  [";
    for (Index c = 0; c < m.cols(); ++c) {
      out << (c ? ", " : "") << '[' << format_full(m(r, c).real()) << ", "
          << format_full(m(r, c).imag()) << ']';
    }
    out << ']';
  }
  out << "\n]}\n";

  std::ofstream file(path);
  if (!file) throw IoError("cannot open '" + path + "' for writing");
  file << out.str();
  if (!file) throw IoError("write to '" + path + "' failed");
}

PositiveMapSpec map_spec_from_json(const nlohmann::json& j, const Tolerances& tol) {
  if (!j.is_object() || !j.contains("tag") || !j["tag"].is_string()) {
    throw MalformedSpec("map spec must be an object with a string 'tag'");
  }
  const std::string tag = j["tag"].get<std::string>();

  if (tag == "measurement") return MeasurementSpec{psdh_list(j, "povm", tol)};
  if (tag == "transpose") return TransposeSpec{};
  if (tag == "pinching") return PinchingSpec{psdh_list(j, "projectors", tol)};

  if (tag == "kraus") {
    if (!j.contains("ops") || !j["ops"].is_array() || j["ops"].empty()) {
      throw MalformedSpec("kraus spec needs a nonempty 'ops' array");
    }
    KrausSpec s;
    for (const auto& item : j["ops"]) s.ops.push_back(matrix_from_json(item));
    return s;
  }

  if (tag == "partial_trace") {
    if (!j.contains("dims") || !j["dims"].is_array() || j["dims"].size() != 2 ||
        !j["dims"][0].is_number_integer() || !j["dims"][1].is_number_integer()) {
      throw MalformedSpec("partial_trace needs 'dims': [dA, dB]");
    }
    if (!j.contains("side") || !j["side"].is_string()) {
      throw MalformedSpec("partial_trace needs 'side': \"A\" or \"B\"");
    }
    const std::string side = j["side"].get<std::string>();
    if (side != "A" && side != "B") throw MalformedSpec("'side' must be \"A\" or \"B\"");
    PartialTraceSpec s;
    s.dim_a = j["dims"][0].get<Index>();
    s.dim_b = j["dims"][1].get<Index>();
    if (s.dim_a < 1 || s.dim_b < 1) throw MalformedSpec("factor dimensions must be >= 1");
    s.traced = side == "A" ? TracedSide::A : TracedSide::B;
    return s;
  }

  if (tag == "compose") {
    if (!j.contains("maps") || !j["maps"].is_array()) {
      throw MalformedSpec("compose needs a 'maps' array");
    }
    ComposeSpec s;
    for (const auto& item : j["maps"]) s.maps.push_back(map_spec_from_json(item, tol));
    return s;
  }

  throw MalformedSpec("unknown map tag '" + tag + "'");
}

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

nlohmann::json map_spec_to_json(const PositiveMapSpec& m) {
  return std::visit(
      Overloaded{
          [](const MeasurementSpec& s) {
            nlohmann::json povm = nlohmann::json::array();
            for (const auto& e : s.povm) povm.push_back(matrix_to_json(e.matrix()));
            return nlohmann::json{{"tag", "measurement"}, {"povm", std::move(povm)}};
          },
          [](const KrausSpec& s) {
            nlohmann::json ops = nlohmann::json::array();
            for (const auto& k : s.ops) ops.push_back(matrix_to_json(k));
            return nlohmann::json{{"tag", "kraus"}, {"ops", std::move(ops)}};
          },
          [](const TransposeSpec&) { return nlohmann::json{{"tag", "transpose"}}; },
          [](const PinchingSpec& s) {
            nlohmann::json projectors = nlohmann::json::array();
            for (const auto& p : s.projectors) projectors.push_back(matrix_to_json(p.matrix()));
            return nlohmann::json{{"tag", "pinching"}, {"projectors", std::move(projectors)}};
          },
          [](const PartialTraceSpec& s) {
            return nlohmann::json{{"tag", "partial_trace"},
                                  {"dims", {s.dim_a, s.dim_b}},
                                  {"side", s.traced == TracedSide::A ? "A" : "B"}};
          },
          [](const ComposeSpec& s) {
            nlohmann::json maps = nlohmann::json::array();
            for (const auto& child : s.maps) maps.push_back(map_spec_to_json(child));
            return nlohmann::json{{"tag", "compose"}, {"maps", std::move(maps)}};
          },
      },
      m);
}

PositiveMapSpec read_map_spec(const std::string& path, const Tolerances& tol) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw MalformedSpec("'" + path + "' is not valid JSON: " + e.what());
  }
  return map_spec_from_json(j, tol);
}

}  // namespace qrelent
