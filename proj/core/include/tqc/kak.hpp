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

#include "tqc/linalg.hpp"

namespace tqc {

/// Default tolerance for gate-class decisions, in radians.
inline constexpr double kClassifyTol = 1e-8;

/** Interaction coefficients (h_x, h_y, h_z) of a two-qubit gate.
 *
 *  Canonical values satisfy the Weyl-chamber ordering
 *    pi/4 >= h_x >= h_y >= |h_z|
 *  (checked with 1e-9 slack by in_weyl_chamber). */
struct CanonicalParams {
  double hx;
  double hy;
  double hz;

  bool in_weyl_chamber(double slack = 1e-9) const;
};

/** Bell-basis eigenphases of the canonical gate.  They always sum to zero. */
struct LambdaPhases {
  double l00;
  double l01;
  double l10;
  double l11;
};

/** The four eigenphases as linear combinations of the interaction
 *  coefficients:
 *    l00 = hx - hy + hz,   l01 = hx + hy - hz,
 *    l10 = -hx + hy + hz,  l11 = -hx - hy - hz. */
LambdaPhases lambdas(const CanonicalParams &p);

/** The Bell-diagonal gate sum_mn exp(-i l_mn) |gamma_mn><gamma_mn|, i.e.
 *  exp(-i (hx XX + hy YY + hz ZZ)).  Accepts any finite triple. */
Mat4 canonical_unitary(const CanonicalParams &p);

/** Minimal CNOT cost of a local-equivalence class. */
enum class GateClass { Local, OneCnot, TwoCnot, ThreeCnot };

int cnot_count(GateClass c);
const char *to_string(GateClass c);

/** Classify canonical parameters by minimal CNOT cost:
 *  Local if all coefficients vanish, OneCnot for (pi/4, 0, 0), TwoCnot
 *  for h_z = 0, ThreeCnot otherwise (all comparisons within tol). */
GateClass classify(const CanonicalParams &p, double tol = kClassifyTol);

/** U = exp(i global_phase) (post_a kron post_b) E(params) (pre_a kron pre_b),
 *  with E = canonical_unitary and params inside the Weyl chamber.
 *  All four locals are special unitary. */
struct KakDecomposition {
  Mat2 pre_a;
  Mat2 pre_b;
  CanonicalParams params;
  Mat2 post_a;
  Mat2 post_b;
  double global_phase;

  Mat4 reconstruct() const;
};

/** Extract the canonical decomposition of an SU(4) gate.
 *
 *  The gate is conjugated into the magic basis, where the symmetric
 *  unitary M^T M is jointly diagonalised over the reals; half-angles of
 *  its eigenvalues give the interaction coefficients and the orthogonal
 *  factors map back to single-qubit gates.  The result is canonicalised
 *  into the Weyl chamber.  Deterministic: identical inputs give
 *  bit-identical outputs.
 *
 *  Throws NumericalFailureError if the eigen-split cannot reach
 *  tolerance (malformed input). */
KakDecomposition kak_decompose(const SpecialUnitary4 &u);

/** Bring an unrestricted coefficient triple into the Weyl chamber.
 *
 *  Starting from
 *    exp(i phase) (post_a kron post_b) E(raw) (pre_a kron pre_b),
 *  applies coordinate shifts by pi/2, paired sign flips and coordinate
 *  swaps, each compensated by single-qubit Clifford corrections folded
 *  into the locals, so the represented gate is unchanged. */
KakDecomposition canonicalize(const CanonicalParams &raw, const Mat2 &pre_a,
                              const Mat2 &pre_b, const Mat2 &post_a,
                              const Mat2 &post_b, double phase = 0.0);

}  // namespace tqc
