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

#include <optional>

#include "tqc/circuit.hpp"
#include "tqc/kak.hpp"

namespace tqc {

struct SynthOptions {
  double tol = 1e-9;            // self-verification tolerance
  double class_tol = kClassifyTol;  // tolerance for gate-class dispatch
  std::optional<GateClass> force_class;  // testing hook: skip dispatch
};

struct SynthesisResult {
  Circuit circuit;
  GateClass class_used;
  double verification_distance;
};

/** Universal three-CNOT realisation of the canonical gate.
 *
 *  Emits CNOT / (u2 x v2) / CNOT / (u3 x v3) / CNOT / (w x w^dag) with
 *    u2 = i/sqrt2 (sx+sz) e^{-i(hx+3pi/4) sx},  v2 = e^{-i hz sz},
 *    u3 = -i/sqrt2 (sx+sz),                     v3 = e^{+i hy sz},
 *    w  = (I - i sx)/sqrt2,
 *  and a recorded global phase of 3pi/4, so that the circuit evaluates to
 *  canonical_unitary(p) exactly.  The x-rotation angle in u2 and the
 *  global phase are pinned by the evaluation oracle and frozen. */
Circuit synth_canonical_3cnot(const CanonicalParams &p);

/** Two-CNOT realisation of a canonical gate with h_z = 0:
 *  (w^dag x w) / CNOT / (u2bar x v2bar) / CNOT / (w x w^dag) with
 *  u2bar = e^{-i hx sx} and v2bar = e^{+i hy sz} (sign pinned by the
 *  evaluation oracle).  Throws HzNotZeroError when |h_z| >= tol. */
Circuit synth_canonical_2cnot(const CanonicalParams &p,
                              double tol = kClassifyTol);

/** Single-CNOT circuit for a decomposition with params ~ (pi/4, 0, 0),
 *  built by splicing the precomputed canonical decomposition of CNOT
 *  into the input's local frame.  Throws WrongClassError otherwise. */
Circuit class1_synthesize(const KakDecomposition &k,
                          double tol = kClassifyTol);

/** Compile a unitary into a minimal-CNOT circuit.
 *
 *  Normalises the input, extracts the canonical decomposition, classifies
 *  the CNOT cost, dispatches to the matching construction and fuses
 *  adjacent single-qubit gates.  The result is self-checked against the
 *  input; VerificationFailedError signals an internal invariant violation
 *  and is never expected for valid inputs. */
SynthesisResult synth(const Mat4 &u, const SynthOptions &opts = {});

/** Merge adjacent single-qubit gates on the same wire and drop gates that
 *  are scalar multiples of the identity (their phase moves to the global
 *  phase).  The evaluated matrix is unchanged. */
Circuit fuse_adjacent_locals(const Circuit &c);

/** Re-synthesise a circuit from its evaluated matrix.  The result never
 *  has more CNOTs than the input and stays equivalent within opts.tol. */
SynthesisResult optimize(const Circuit &c, const SynthOptions &opts = {});

}  // namespace tqc
