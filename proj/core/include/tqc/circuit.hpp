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

#pragma once

#include <string>
#include <variant>
#include <vector>

#include "tqc/linalg.hpp"

namespace tqc {

/// The two fixed wires.  Qubit A is the left (most significant) tensor
/// factor in every matrix convention used by this library.
enum class Qubit { A, B };

Qubit other(Qubit q);
const char *to_string(Qubit q);

struct SingleQubitGate {
  Qubit qubit;
  Mat2 u;
};

struct CnotGate {
  Qubit control = Qubit::A;
  Qubit target = Qubit::B;
};

using Gate = std::variant<SingleQubitGate, CnotGate>;

/** Two-qubit circuit: gates in application order (first applied = first
 *  element) plus a recorded global phase. */
struct Circuit {
  std::vector<Gate> gates;
  double global_phase = 0.0;

  void add_single(Qubit q, const Mat2 &u) { gates.push_back(SingleQubitGate{q, u}); }
  void add_cnot(Qubit control = Qubit::A) {
    gates.push_back(CnotGate{control, other(control)});
  }
};

/** exp(i global_phase) times the product of the gate matrices, rightmost
 *  factor = first gate. */
Mat4 evaluate(const Circuit &c);

/// 4x4 matrix of a single gate.
Mat4 gate_matrix(const Gate &g);

/// Number of CNOT gates in the circuit.
int cnot_count(const Circuit &c);

struct VerificationReport {
  double distance;        // phase_distance(evaluate(c), target)
  double relative_phase;  // arg tr(evaluate(c)^dag target)
  bool passed;            // distance <= tolerance
  double tolerance;
};

/** Compare a circuit against a target unitary up to global phase. */
VerificationReport verify(const Circuit &c, const Mat4 &target,
                          double tol = 1e-9);

/** Fixed gate library.
 *
 *  Names: ID, CNOT, CZ, SWAP, ISWAP (no arguments), CPHASE(phi) =
 *  diag(1,1,1,e^{-i phi}), CAN(hx,hy,hz) = canonical_unitary.
 *  Throws UnknownGateError / BadArityError. */
Mat4 named_gate(const std::string &name, const std::vector<double> &args = {});

// --- Serialization ---------------------------------------------------------
//
// Matrix JSON:  {"unitary": [[[re,im] x4] x4]}, row-major, basis
// |00>,|01>,|10>,|11> with qubit A as the most significant bit.
// Circuit JSON: {"qubits": ["A","B"], "global_phase": <radians>,
//   "gates": [{"kind":"local","qubit":"A"|"B","u":[[[re,im] x2] x2]} |
//             {"kind":"cnot","control":"A"|"B","target":"B"|"A"}]},
// gates in application order.  Numbers round-trip bit-exactly.

std::string serialize_matrix(const Mat4 &m);
Mat4 parse_matrix(const std::string &text);

std::string serialize_circuit(const Circuit &c);
Circuit parse_circuit(const std::string &text);

/// Human-readable rendering, one gate per line.  Non-normative.
std::string circuit_to_text(const Circuit &c);
std::string matrix_to_text(const Mat4 &m);

}  // namespace tqc
