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

#include "tqc/circuit.hpp"

#include <cmath>
#include <cstdio>

#include "tqc/errors.hpp"
#include "tqc/kak.hpp"

namespace tqc {

namespace {

constexpr Complex kI{0.0, 1.0};

Mat4 cnot_matrix(Qubit control) {
  Mat4 m;
  if (control == Qubit::A) {
    m(0, 0) = m(1, 1) = Complex{1};
    m(2, 3) = m(3, 2) = Complex{1};
  } else {
    m(0, 0) = m(2, 2) = Complex{1};
    m(1, 3) = m(3, 1) = Complex{1};
  }
  return m;
}

}  // namespace

Qubit other(Qubit q) { return q == Qubit::A ? Qubit::B : Qubit::A; }

const char *to_string(Qubit q) { return q == Qubit::A ? "A" : "B"; }

Mat4 gate_matrix(const Gate &g) {
  if (const auto *s = std::get_if<SingleQubitGate>(&g)) {
    return s->qubit == Qubit::A ? kron(s->u, Mat2::identity())
                                : kron(Mat2::identity(), s->u);
  }
  return cnot_matrix(std::get<CnotGate>(g).control);
}

Mat4 evaluate(const Circuit &c) {
  Mat4 acc = Mat4::identity();
  for (const Gate &g : c.gates) acc = gate_matrix(g) * acc;
  return acc * std::exp(kI * c.global_phase);
}

int cnot_count(const Circuit &c) {
  int n = 0;
  for (const Gate &g : c.gates)
    if (std::holds_alternative<CnotGate>(g)) ++n;
  return n;
}

VerificationReport verify(const Circuit &c, const Mat4 &target, double tol) {
  const Mat4 ev = evaluate(c);
  const double d = phase_distance(ev, target);
  const double rel = std::arg((ev.adjoint() * target).trace());
  return {d, rel, d <= tol, tol};
}

Mat4 named_gate(const std::string &name, const std::vector<double> &args) {
  auto expect_arity = [&](size_t n) {
    if (args.size() != n)
      throw BadArityError("gate " + name + " expects " + std::to_string(n) +
                          " argument(s), got " + std::to_string(args.size()));
  };
  if (name == "ID") {
    expect_arity(0);
    return Mat4::identity();
  }
  if (name == "CNOT") {
    expect_arity(0);
    return cnot_matrix(Qubit::A);
  }
  if (name == "CZ") {
    expect_arity(0);
    Mat4 m = Mat4::identity();
    m(3, 3) = Complex{-1};
    return m;
  }
  if (name == "SWAP") {
    expect_arity(0);
    Mat4 m;
    m(0, 0) = m(3, 3) = Complex{1};
    m(1, 2) = m(2, 1) = Complex{1};
    return m;
  }
  if (name == "ISWAP") {
    expect_arity(0);
    Mat4 m;
    m(0, 0) = m(3, 3) = Complex{1};
    m(1, 2) = m(2, 1) = kI;
    return m;
  }
  if (name == "CPHASE") {
    expect_arity(1);
    Mat4 m = Mat4::identity();
    m(3, 3) = std::exp(-kI * args[0]);
    return m;
  }
  if (name == "CAN") {
    expect_arity(3);
    return canonical_unitary({args[0], args[1], args[2]});
  }
  throw UnknownGateError("unknown gate: " + name);
}

std::string circuit_to_text(const Circuit &c) {
  std::string out;
  char buf[256];
  std::snprintf(buf, sizeof buf, "phase %.17g\n", c.global_phase);
  out += buf;
  for (const Gate &g : c.gates) {
    if (const auto *s = std::get_if<SingleQubitGate>(&g)) {
      std::snprintf(buf, sizeof buf,
                    "local %s  [%.17g%+.17gi, %.17g%+.17gi; "
                    "%.17g%+.17gi, %.17g%+.17gi]\n",
                    to_string(s->qubit), s->u(0, 0).real(), s->u(0, 0).imag(),
                    s->u(0, 1).real(), s->u(0, 1).imag(), s->u(1, 0).real(),
                    s->u(1, 0).imag(), s->u(1, 1).real(), s->u(1, 1).imag());
      out += buf;
    } else {
      const auto &x = std::get<CnotGate>(g);
      std::snprintf(buf, sizeof buf, "cnot %s -> %s\n", to_string(x.control),
                    to_string(x.target));
      out += buf;
    }
  }
  return out;
}

std::string matrix_to_text(const Mat4 &m) {
  std::string out;
  char buf[256];
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      std::snprintf(buf, sizeof buf, "%s%.17g%+.17gi", j ? "  " : "",
                    m(i, j).real(), m(i, j).imag());
      out += buf;
    }
    out += '\n';
  }
  return out;
}

}  // namespace tqc
