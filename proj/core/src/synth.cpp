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

#include "tqc/synth.hpp"

#include <cmath>

#include "tqc/errors.hpp"

namespace tqc {

namespace {

constexpr Complex kI{0.0, 1.0};
constexpr double kQuarterPi = M_PI / 4.0;

// (sigma_x + sigma_z)/sqrt2, the Hadamard matrix.
Mat2 hadamard() {
  const double s = 1.0 / std::sqrt(2.0);
  return Mat2::of(s, s, s, -s);
}

}  // namespace

Circuit synth_canonical_3cnot(const CanonicalParams &p) {
  const Mat2 h = hadamard();
  const Mat2 u2 = (h * kI) * rot(Axis::X, p.hx + 3.0 * kQuarterPi);
  const Mat2 v2 = rot(Axis::Z, p.hz);
  const Mat2 u3 = h * (-kI);
  const Mat2 v3 = rot(Axis::Z, -p.hy);
  const Mat2 w = rot(Axis::X, kQuarterPi);
  const Mat2 wd = rot(Axis::X, -kQuarterPi);

  Circuit c;
  c.add_cnot();
  c.add_single(Qubit::A, u2);
  c.add_single(Qubit::B, v2);
  c.add_cnot();
  c.add_single(Qubit::A, u3);
  c.add_single(Qubit::B, v3);
  c.add_cnot();
  c.add_single(Qubit::A, w);
  c.add_single(Qubit::B, wd);
  c.global_phase = 3.0 * kQuarterPi;
  return c;
}

Circuit synth_canonical_2cnot(const CanonicalParams &p, double tol) {
  if (std::abs(p.hz) >= tol)
    throw HzNotZeroError("synth_canonical_2cnot: h_z = " +
                         std::to_string(p.hz) + " is not zero within " +
                         std::to_string(tol));
  const Mat2 w = rot(Axis::X, kQuarterPi);
  const Mat2 wd = rot(Axis::X, -kQuarterPi);
  const Mat2 u2 = rot(Axis::X, p.hx);
  const Mat2 v2 = rot(Axis::Z, -p.hy);

  Circuit c;
  c.add_single(Qubit::A, wd);
  c.add_single(Qubit::B, w);
  c.add_cnot();
  c.add_single(Qubit::A, u2);
  c.add_single(Qubit::B, v2);
  c.add_cnot();
  c.add_single(Qubit::A, w);
  c.add_single(Qubit::B, wd);
  return c;
}

namespace {

// Canonical decomposition of CNOT, computed once with the library's own
// extractor so that the splice below is immune to convention drift.
const KakDecomposition &cnot_kak() {
  static const KakDecomposition kd = [] {
    const auto [su, phase] = su4_normalize(named_gate("CNOT"));
    KakDecomposition k = kak_decompose(su);
    k.global_phase += phase;  // now reconstructs CNOT itself
    return k;
  }();
  return kd;
}

Circuit build_local_circuit(const KakDecomposition &k, double extra_phase) {
  Circuit c;
  c.add_single(Qubit::A, k.post_a * k.pre_a);
  c.add_single(Qubit::B, k.post_b * k.pre_b);
  c.global_phase = k.global_phase + extra_phase;
  return c;
}

bool is_scalar_of_identity(const Mat2 &u, double tol) {
  return std::abs(u(0, 1)) < tol && std::abs(u(1, 0)) < tol &&
         std::abs(u(0, 0) - u(1, 1)) < tol &&
         std::abs(std::abs(u(0, 0)) - 1.0) < tol;
}

}  // namespace

Circuit class1_synthesize(const KakDecomposition &k, double tol) {
  const CanonicalParams &p = k.params;
  if (std::abs(p.hx - kQuarterPi) >= tol || std::abs(p.hy) >= tol ||
      std::abs(p.hz) >= tol)
    throw WrongClassError("class1_synthesize: params are not (pi/4, 0, 0)");

  // CNOT = e^{i psi} (P x Q) E (R x S)  =>  E = e^{-i psi} (P^dag x Q^dag)
  // CNOT (R^dag x S^dag); substitute E into the input's decomposition.
  const KakDecomposition &ck = cnot_kak();
  Circuit c;
  c.add_single(Qubit::A, ck.pre_a.adjoint() * k.pre_a);
  c.add_single(Qubit::B, ck.pre_b.adjoint() * k.pre_b);
  c.add_cnot();
  c.add_single(Qubit::A, k.post_a * ck.post_a.adjoint());
  c.add_single(Qubit::B, k.post_b * ck.post_b.adjoint());
  c.global_phase = k.global_phase - ck.global_phase;
  return c;
}

Circuit fuse_adjacent_locals(const Circuit &c) {
  Circuit out;
  out.global_phase = c.global_phase;
  Mat2 pending[2] = {Mat2::identity(), Mat2::identity()};
  bool have[2] = {false, false};

  auto flush = [&](int qi) {
    if (!have[qi]) return;
    const Mat2 &u = pending[qi];
    if (is_scalar_of_identity(u, 1e-12)) {
      out.global_phase += std::arg(u(0, 0));
    } else {
      out.add_single(qi == 0 ? Qubit::A : Qubit::B, u);
    }
    pending[qi] = Mat2::identity();
    have[qi] = false;
  };

  for (const Gate &g : c.gates) {
    if (const auto *s = std::get_if<SingleQubitGate>(&g)) {
      const int qi = (s->qubit == Qubit::A) ? 0 : 1;
      pending[qi] = s->u * pending[qi];  // later gate multiplies on the left
      have[qi] = true;
    } else {
      flush(0);
      flush(1);
      out.gates.push_back(g);
    }
  }
  flush(0);
  flush(1);
  return out;
}

SynthesisResult synth(const Mat4 &u, const SynthOptions &opts) {
  const auto [su, norm_phase] = su4_normalize(u);
  KakDecomposition kd = kak_decompose(su);
  kd.global_phase += norm_phase;  // kd now reconstructs u itself

  const GateClass cls =
      opts.force_class ? *opts.force_class : classify(kd.params, opts.class_tol);

  Circuit c;
  switch (cls) {
    case GateClass::Local:
      c = build_local_circuit(kd, 0.0);
      break;
    case GateClass::OneCnot:
      c = class1_synthesize(kd, opts.force_class ? 1e100 : opts.class_tol);
      break;
    case GateClass::TwoCnot: {
      const Circuit inner = synth_canonical_2cnot(
          {kd.params.hx, kd.params.hy, 0.0}, kClassifyTol);
      c.add_single(Qubit::A, kd.pre_a);
      c.add_single(Qubit::B, kd.pre_b);
      for (const Gate &g : inner.gates) c.gates.push_back(g);
      c.add_single(Qubit::A, kd.post_a);
      c.add_single(Qubit::B, kd.post_b);
      c.global_phase = kd.global_phase + inner.global_phase;
      break;
    }
    case GateClass::ThreeCnot:
    default: {
      const Circuit inner = synth_canonical_3cnot(kd.params);
      c.add_single(Qubit::A, kd.pre_a);
      c.add_single(Qubit::B, kd.pre_b);
      for (const Gate &g : inner.gates) c.gates.push_back(g);
      c.add_single(Qubit::A, kd.post_a);
      c.add_single(Qubit::B, kd.post_b);
      c.global_phase = kd.global_phase + inner.global_phase;
      break;
    }
  }

  c = fuse_adjacent_locals(c);
  const double d = phase_distance(evaluate(c), u);
  if (d > opts.tol)
    throw VerificationFailedError("synth: self-check distance " +
                                  std::to_string(d) + " exceeds tolerance");
  return {c, cls, d};
}

SynthesisResult optimize(const Circuit &c, const SynthOptions &opts) {
  SynthesisResult r = synth(evaluate(c), opts);
  // A circuit with k CNOTs cannot be in a class that needs more than k,
  // so re-synthesis can never increase the count.
  if (cnot_count(r.circuit) > cnot_count(c))
    throw VerificationFailedError("optimize: CNOT count increased");
  return r;
}

}  // namespace tqc
