// Copyright 2026 The tqc developers
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

#include <json.hpp>

#include "tqc/circuit.hpp"
#include "tqc/errors.hpp"

namespace tqc {

namespace {

using nlohmann::json;

json complex_to_json(const Complex &z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json &j, const std::string &where) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw ParseError(where + ": expected [re, im] number pair");
  const Complex z{j[0].get<double>(), j[1].get<double>()};
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw ParseError(where + ": non-finite entry");
  return z;
}

json mat2_to_json(const Mat2 &m) {
  json rows = json::array();
  for (int i = 0; i < 2; ++i) {
    json row = json::array();
    for (int j = 0; j < 2; ++j) row.push_back(complex_to_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

Mat2 mat2_from_json(const json &j, const std::string &where) {
  if (!j.is_array() || j.size() != 2)
    throw ParseError(where + ": expected 2 rows");
  Mat2 m;
  for (int i = 0; i < 2; ++i) {
    const json &row = j[static_cast<size_t>(i)];
    if (!row.is_array() || row.size() != 2)
      throw ParseError(where + ": row " + std::to_string(i) +
                       ": expected 2 entries");
    for (int c = 0; c < 2; ++c)
      m(i, c) = complex_from_json(row[static_cast<size_t>(c)],
                                  where + "[" + std::to_string(i) + "][" +
                                      std::to_string(c) + "]");
  }
  return m;
}

json parse_document(const std::string &text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError("invalid JSON document");
  return j;
}

Qubit qubit_from_json(const json &j, const std::string &where) {
  if (!j.is_string()) throw ParseError(where + ": expected \"A\" or \"B\"");
  const std::string s = j.get<std::string>();
  if (s == "A") return Qubit::A;
  if (s == "B") return Qubit::B;
  throw ParseError(where + ": expected \"A\" or \"B\", got \"" + s + "\"");
}

}  // namespace

std::string serialize_matrix(const Mat4 &m) {
  json rows = json::array();
  for (int i = 0; i < 4; ++i) {
    json row = json::array();
    for (int j = 0; j < 4; ++j) row.push_back(complex_to_json(m(i, j)));
    rows.push_back(row);
  }
  return json{{"unitary", rows}}.dump();
}

Mat4 parse_matrix(const std::string &text) {
  const json j = parse_document(text);
  if (!j.is_object() || !j.contains("unitary"))
    throw ParseError("matrix document: missing field \"unitary\"");
  const json &rows = j["unitary"];
  if (!rows.is_array() || rows.size() != 4)
    throw ParseError("\"unitary\": expected 4 rows");
  Mat4 m;
  for (int i = 0; i < 4; ++i) {
    const json &row = rows[static_cast<size_t>(i)];
    if (!row.is_array() || row.size() != 4)
      throw ParseError("\"unitary\" row " + std::to_string(i) +
                       ": expected 4 entries");
    for (int c = 0; c < 4; ++c)
      m(i, c) = complex_from_json(row[static_cast<size_t>(c)],
                                  "\"unitary\"[" + std::to_string(i) + "][" +
                                      std::to_string(c) + "]");
  }
  return m;
}

std::string serialize_circuit(const Circuit &c) {
  json gates = json::array();
  for (const Gate &g : c.gates) {
    if (const auto *s = std::get_if<SingleQubitGate>(&g)) {
      gates.push_back(json{{"kind", "local"},
                           {"qubit", to_string(s->qubit)},
                           {"u", mat2_to_json(s->u)}});
    } else {
      const auto &x = std::get<CnotGate>(g);
      gates.push_back(json{{"kind", "cnot"},
                           {"control", to_string(x.control)},
                           {"target", to_string(x.target)}});
    }
  }
  return json{{"qubits", json::array({"A", "B"})},
              {"global_phase", c.global_phase},
              {"gates", gates}}
      .dump();
}

Circuit parse_circuit(const std::string &text) {
  const json j = parse_document(text);
  if (!j.is_object()) throw ParseError("circuit document: expected an object");
  if (!j.contains("qubits") || j["qubits"] != json::array({"A", "B"}))
    throw ParseError("circuit document: field \"qubits\" must be [\"A\",\"B\"]");
  if (!j.contains("global_phase") || !j["global_phase"].is_number())
    throw ParseError("circuit document: missing numeric field \"global_phase\"");
  if (!j.contains("gates") || !j["gates"].is_array())
    throw ParseError("circuit document: missing array field \"gates\"");

  Circuit c;
  c.global_phase = j["global_phase"].get<double>();
  if (!std::isfinite(c.global_phase))
    throw ParseError("\"global_phase\": non-finite value");
  size_t idx = 0;
  for (const json &g : j["gates"]) {
    const std::string where = "\"gates\"[" + std::to_string(idx++) + "]";
    if (!g.is_object() || !g.contains("kind") || !g["kind"].is_string())
      throw ParseError(where + ": missing string field \"kind\"");
    const std::string kind = g["kind"].get<std::string>();
    if (kind == "local") {
      if (!g.contains("qubit")) throw ParseError(where + ": missing field \"qubit\"");
      if (!g.contains("u")) throw ParseError(where + ": missing field \"u\"");
      const Qubit q = qubit_from_json(g["qubit"], where + ".qubit");
      const Mat2 u = mat2_from_json(g["u"], where + ".u");
      if (!u.is_unitary(kStructuralTol))
        throw ParseError(where + ".u: matrix is not unitary");
      c.add_single(q, u);
    } else if (kind == "cnot") {
      if (!g.contains("control"))
        throw ParseError(where + ": missing field \"control\"");
      if (!g.contains("target"))
        throw ParseError(where + ": missing field \"target\"");
      const Qubit ctl = qubit_from_json(g["control"], where + ".control");
      const Qubit tgt = qubit_from_json(g["target"], where + ".target");
      if (ctl == tgt)
        throw ParseError(where + ": control and target must differ");
      c.gates.push_back(CnotGate{ctl, tgt});
    } else {
      throw ParseError(where + ": unknown gate kind \"" + kind + "\"");
    }
  }
  return c;
}

}  // namespace tqc
