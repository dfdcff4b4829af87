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

#include "tqc/kak.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "tqc/errors.hpp"

namespace tqc {

namespace {

constexpr Complex kI{0.0, 1.0};
constexpr double kPi = M_PI;
constexpr double kQuarterPi = M_PI / 4.0;

}  // namespace

bool CanonicalParams::in_weyl_chamber(double slack) const {
  return std::isfinite(hx) && std::isfinite(hy) && std::isfinite(hz) &&
         kQuarterPi + slack >= hx && hx + slack >= hy &&
         hy + slack >= std::abs(hz);
}

LambdaPhases lambdas(const CanonicalParams &p) {
  return {p.hx - p.hy + p.hz, p.hx + p.hy - p.hz, -p.hx + p.hy + p.hz,
          -p.hx - p.hy - p.hz};
}

Mat4 canonical_unitary(const CanonicalParams &p) {
  const LambdaPhases l = lambdas(p);
  const double lam[2][2] = {{l.l00, l.l01}, {l.l10, l.l11}};
  Mat4 r;
  for (int m = 0; m < 2; ++m)
    for (int n = 0; n < 2; ++n) {
      const Vec4 g = bell(m, n);
      r = r + outer(g, g) * std::exp(-kI * lam[m][n]);
    }
  return r;
}

int cnot_count(GateClass c) {
  switch (c) {
    case GateClass::Local:
      return 0;
    case GateClass::OneCnot:
      return 1;
    case GateClass::TwoCnot:
      return 2;
    case GateClass::ThreeCnot:
    default:
      return 3;
  }
}

const char *to_string(GateClass c) {
  switch (c) {
    case GateClass::Local:
      return "local";
    case GateClass::OneCnot:
      return "1-cnot";
    case GateClass::TwoCnot:
      return "2-cnot";
    case GateClass::ThreeCnot:
    default:
      return "3-cnot";
  }
}

GateClass classify(const CanonicalParams &p, double tol) {
  const double ax = std::abs(p.hx), ay = std::abs(p.hy), az = std::abs(p.hz);
  if (std::max({ax, ay, az}) < tol) return GateClass::Local;
  if (std::abs(p.hx - kQuarterPi) < tol && ay < tol && az < tol)
    return GateClass::OneCnot;
  if (az < tol) return GateClass::TwoCnot;
  return GateClass::ThreeCnot;
}

Mat4 KakDecomposition::reconstruct() const {
  return (kron(post_a, post_b) * canonical_unitary(params) *
          kron(pre_a, pre_b)) *
         std::exp(kI * global_phase);
}

// ---------------------------------------------------------------------------
// Weyl-chamber canonicalisation.
//
// Each move rewrites  exp(i phase) (post) E(v) (pre)  without changing the
// represented gate:
//   shift:  E(v -+ pi/2 e_k) absorbs (i sigma_k kron i sigma_k) into the
//           pre locals and +-pi/2 into the phase;
//   negate: conjugation by (i sigma_g kron I), g the untouched axis, flips
//           the signs of the other two coefficients and adds pi to the phase;
//   swap:   conjugation by (c kron c) with c = rot(g, pi/4) exchanges the
//           two coefficients orthogonal to g.

namespace {

struct ChamberState {
  double v[3];  // x, y, z interaction coefficients
  Mat2 pre_a, pre_b, post_a, post_b;
  double phase;
};

Axis axis_of(int k) { return k == 0 ? Axis::X : (k == 1 ? Axis::Y : Axis::Z); }

void shift_down(ChamberState &s, int k) {
  s.v[k] -= kPi / 2.0;
  const Mat2 f = pauli(axis_of(k)) * kI;
  s.pre_a = f * s.pre_a;
  s.pre_b = f * s.pre_b;
  s.phase += kPi / 2.0;
}

void shift_up(ChamberState &s, int k) {
  s.v[k] += kPi / 2.0;
  const Mat2 f = pauli(axis_of(k)) * kI;
  s.pre_a = f * s.pre_a;
  s.pre_b = f * s.pre_b;
  s.phase -= kPi / 2.0;
}

void negate_pair(ChamberState &s, int k1, int k2) {
  s.v[k1] = -s.v[k1];
  s.v[k2] = -s.v[k2];
  const Mat2 f = pauli(axis_of(3 - k1 - k2)) * kI;
  s.post_a = s.post_a * f;
  s.pre_a = f * s.pre_a;
  s.phase += kPi;
}

void swap_coords(ChamberState &s, int k1, int k2) {
  std::swap(s.v[k1], s.v[k2]);
  const Mat2 c = rot(axis_of(3 - k1 - k2), kQuarterPi);
  const Mat2 cd = c.adjoint();
  s.post_a = s.post_a * cd;
  s.post_b = s.post_b * cd;
  s.pre_a = c * s.pre_a;
  s.pre_b = c * s.pre_b;
}

void shift_into_range(ChamberState &s, int k) {
  while (s.v[k] > kQuarterPi) shift_down(s, k);
  while (s.v[k] <= -kQuarterPi) shift_up(s, k);
}

}  // namespace

KakDecomposition canonicalize(const CanonicalParams &raw, const Mat2 &pre_a,
                              const Mat2 &pre_b, const Mat2 &post_a,
                              const Mat2 &post_b, double phase) {
  ChamberState s{{raw.hx, raw.hy, raw.hz}, pre_a, pre_b, post_a, post_b, phase};

  for (int k = 0; k < 3; ++k) shift_into_range(s, k);

  // Sort by magnitude, descending.
  if (std::abs(s.v[0]) < std::abs(s.v[1])) swap_coords(s, 0, 1);
  if (std::abs(s.v[1]) < std::abs(s.v[2])) swap_coords(s, 1, 2);
  if (std::abs(s.v[0]) < std::abs(s.v[1])) swap_coords(s, 0, 1);

  // Move all negativity into the z coefficient.
  if (s.v[0] < 0.0) negate_pair(s, 0, 2);
  if (s.v[1] < 0.0) negate_pair(s, 1, 2);

  // On the chamber boundary h_x = pi/4 the z sign is a residual symmetry;
  // resolve it to h_z >= 0.
  if (s.v[0] > kQuarterPi - 1e-9 && s.v[2] < 0.0) {
    shift_down(s, 0);
    negate_pair(s, 0, 2);
  }

  // + 0.0 normalises a negative zero coordinate.
  KakDecomposition r{s.pre_a,
                     s.pre_b,
                     CanonicalParams{s.v[0] + 0.0, s.v[1] + 0.0, s.v[2] + 0.0},
                     s.post_a,
                     s.post_b,
                     std::remainder(s.phase, 2.0 * kPi)};
  return r;
}

// ---------------------------------------------------------------------------
// Joint real diagonalisation of the symmetric unitary M^T M.

namespace {

using Real4 = std::array<std::array<double, 4>, 4>;

// Cyclic Jacobi on a symmetric 4x4 matrix.  Returns eigenvectors as the
// columns of `vecs`.
void jacobi_sym4(Real4 a, Real4 &vecs) {
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) vecs[i][j] = (i == j) ? 1.0 : 0.0;
  for (int sweep = 0; sweep < 64; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < 4; ++p)
      for (int q = p + 1; q < 4; ++q) off += a[p][q] * a[p][q];
    if (off < 1e-30) break;
    for (int p = 0; p < 4; ++p)
      for (int q = p + 1; q < 4; ++q) {
        if (std::abs(a[p][q]) < 1e-300) continue;
        const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        const double t =
            (theta >= 0.0 ? 1.0 : -1.0) /
            (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double sn = t * c;
        for (int k = 0; k < 4; ++k) {
          const double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - sn * akq;
          a[k][q] = sn * akp + c * akq;
        }
        for (int k = 0; k < 4; ++k) {
          const double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - sn * aqk;
          a[q][k] = sn * apk + c * aqk;
        }
        for (int k = 0; k < 4; ++k) {
          const double vkp = vecs[k][p], vkq = vecs[k][q];
          vecs[k][p] = c * vkp - sn * vkq;
          vecs[k][q] = sn * vkp + c * vkq;
        }
      }
  }
}

double det_real4(const Real4 &m) {
  Real4 a = m;
  double d = 1.0;
  for (int col = 0; col < 4; ++col) {
    int piv = col;
    for (int r = col + 1; r < 4; ++r)
      if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
    if (a[piv][col] == 0.0) return 0.0;
    if (piv != col) {
      std::swap(a[piv], a[col]);
      d = -d;
    }
    d *= a[col][col];
    for (int r = col + 1; r < 4; ++r) {
      const double f = a[r][col] / a[col][col];
      for (int c = col; c < 4; ++c) a[r][c] -= f * a[col][c];
    }
  }
  return d;
}

Mat4 to_mat4(const Real4 &m) {
  Mat4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r(i, j) = Complex{m[i][j], 0.0};
  return r;
}

// Find a real orthogonal basis that diagonalises the complex symmetric
// unitary m2.  The real and imaginary parts of m2 commute, so for a
// generic angle t a single real symmetric eigen-solve of
// cos(t) Re(m2) + sin(t) Im(m2) diagonalises both; a short fixed list of
// angles covers the degenerate configurations, and each candidate basis
// is accepted only if it actually diagonalises m2.
bool joint_diagonalize(const Mat4 &m2, Real4 &vecs, double &achieved_offdiag) {
  Real4 re{}, im{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      re[i][j] = m2(i, j).real();
      im[i][j] = m2(i, j).imag();
    }
  static const double angles[] = {0.0,     1.5707963267948966,
                                  0.7853,  2.3561,
                                  0.3926,  1.1780,
                                  1.9634,  2.7489,
                                  0.19634, 2.9452};
  double best_off = 1e300;
  Real4 best_vecs{};
  for (const double t : angles) {
    Real4 c{};
    const double ct = std::cos(t), st = std::sin(t);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) c[i][j] = ct * re[i][j] + st * im[i][j];
    Real4 v{};
    jacobi_sym4(c, v);
    // Off-diagonal residual of v^T m2 v.
    double off = 0.0;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        if (i == j) continue;
        Complex s{};
        for (int k = 0; k < 4; ++k)
          for (int l = 0; l < 4; ++l) s += v[k][i] * m2(k, l) * v[l][j];
        off = std::max(off, std::abs(s));
      }
    if (off < best_off) {
      best_off = off;
      best_vecs = v;
    }
    if (off < 1e-11) break;
  }
  vecs = best_vecs;
  achieved_offdiag = best_off;
  return best_off < 1e-7;
}

}  // namespace

KakDecomposition kak_decompose(const SpecialUnitary4 &u) {
  const Mat4 &q = magic_basis();
  const Mat4 qd = q.adjoint();
  const Mat4 m = qd * u.matrix() * q;
  const Mat4 m2 = m.transpose() * m;

  Real4 p{};
  double offdiag = 0.0;
  if (!joint_diagonalize(m2, p, offdiag))
    throw NumericalFailureError(
        "kak_decompose: eigen-split residual " + std::to_string(offdiag));

  // Deterministic column order and signs.
  for (int c = 0; c < 4; ++c) {
    int imax = 0;
    for (int r = 1; r < 4; ++r)
      if (std::abs(p[r][c]) > std::abs(p[imax][c])) imax = r;
    if (p[imax][c] < 0.0)
      for (int r = 0; r < 4; ++r) p[r][c] = -p[r][c];
  }
  std::array<double, 4> args{};
  for (int c = 0; c < 4; ++c) {
    Complex d{};
    for (int k = 0; k < 4; ++k)
      for (int l = 0; l < 4; ++l) d += p[k][c] * m2(k, l) * p[l][c];
    args[static_cast<size_t>(c)] = std::arg(d);
  }
  // Selection sort: the tolerance-based tie-break is not a strict weak
  // ordering, so the standard sorts must not be used with it.
  const auto precedes = [&](int x, int y) {
    const double ax = args[static_cast<size_t>(x)];
    const double ay = args[static_cast<size_t>(y)];
    if (std::abs(ax - ay) > 1e-10) return ax > ay;
    for (int r = 0; r < 4; ++r) {
      const double d = p[r][x] - p[r][y];
      if (std::abs(d) > 1e-10) return d > 0.0;
    }
    return false;
  };
  std::array<int, 4> order{0, 1, 2, 3};
  for (int i = 0; i < 3; ++i) {
    int sel = i;
    for (int j = i + 1; j < 4; ++j)
      if (precedes(order[static_cast<size_t>(j)], order[static_cast<size_t>(sel)]))
        sel = j;
    std::swap(order[static_cast<size_t>(i)], order[static_cast<size_t>(sel)]);
  }
  Real4 ps{};
  for (int c = 0; c < 4; ++c)
    for (int r = 0; r < 4; ++r) ps[r][c] = p[r][order[static_cast<size_t>(c)]];
  if (det_real4(ps) < 0.0)
    for (int r = 0; r < 4; ++r) ps[r][3] = -ps[r][3];

  // Eigenphase half-angles; each branch lands in (-pi/2, pi/2].
  const Mat4 pm = to_mat4(ps);
  const Mat4 r = pm.transpose() * m2 * pm;
  std::array<double, 4> lam{};
  for (int k = 0; k < 4; ++k) {
    double l = -std::arg(r(k, k)) / 2.0;
    if (l <= -kPi / 2.0) l += kPi;
    lam[static_cast<size_t>(k)] = l;
  }
  // The branch sum must vanish for the orthogonal factors to have
  // determinant +1; resolve the residual multiple of pi deterministically.
  double sum = lam[0] + lam[1] + lam[2] + lam[3];
  int excess = static_cast<int>(std::lround(sum / kPi));
  while (excess > 0) {
    const auto it = std::max_element(lam.begin(), lam.end());
    *it -= kPi;
    --excess;
  }
  while (excess < 0) {
    const auto it = std::min_element(lam.begin(), lam.end());
    *it += kPi;
    ++excess;
  }

  // O1 = M P D^-1 must be real orthogonal; its imaginary residual is the
  // final guard on the eigen-split.
  Mat4 o1 = m * pm;
  for (int c = 0; c < 4; ++c) {
    const Complex f = std::exp(kI * lam[static_cast<size_t>(c)]);
    for (int rr = 0; rr < 4; ++rr) o1(rr, c) *= f;
  }
  double imag_resid = 0.0;
  for (const auto &x : o1.e) imag_resid = std::max(imag_resid, std::abs(x.imag()));
  if (imag_resid > 1e-6)
    throw NumericalFailureError(
        "kak_decompose: orthogonal factor has imaginary residual " +
        std::to_string(imag_resid));

  const Mat4 k1 = q * o1 * qd;
  const Mat4 k2 = q * pm.transpose() * qd;
  LocalFactors post, pre;
  try {
    post = factor_local(k1, 1e-6);
    pre = factor_local(k2, 1e-6);
  } catch (const NotAProductError &e) {
    throw NumericalFailureError(std::string("kak_decompose: ") + e.what());
  }

  // Columns of the magic basis correspond to (l00, l10, l11, l01).
  const CanonicalParams raw{(lam[0] + lam[3]) / 2.0, (lam[3] + lam[1]) / 2.0,
                            (lam[0] + lam[1]) / 2.0};
  KakDecomposition kd = canonicalize(raw, pre.a, pre.b, post.a, post.b,
                                     pre.phase + post.phase);

  if (phase_distance(kd.reconstruct(), u.matrix()) > 1e-9)
    throw NumericalFailureError("kak_decompose: reconstruction check failed");
  return kd;
}

}  // namespace tqc
