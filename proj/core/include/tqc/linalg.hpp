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

#include <array>
#include <complex>
#include <cstdint>
#include <utility>

namespace tqc {

using Complex = std::complex<double>;

/// Default tolerance for structural checks (unitarity, factorisations).
inline constexpr double kStructuralTol = 1e-10;
/// Default tolerance for identities that should hold to machine precision.
inline constexpr double kExactTol = 1e-12;

/** 2x2 complex matrix, row-major, basis order (|z0>, |z1>). */
struct Mat2 {
  std::array<Complex, 4> e{};

  Complex &operator()(int r, int c) { return e[static_cast<size_t>(2 * r + c)]; }
  const Complex &operator()(int r, int c) const {
    return e[static_cast<size_t>(2 * r + c)];
  }

  static Mat2 identity();
  static Mat2 zero();
  static Mat2 of(Complex m00, Complex m01, Complex m10, Complex m11);

  Mat2 operator*(const Mat2 &o) const;
  Mat2 operator+(const Mat2 &o) const;
  Mat2 operator-(const Mat2 &o) const;
  Mat2 operator*(const Complex &s) const;

  Mat2 adjoint() const;
  Complex det() const { return e[0] * e[3] - e[1] * e[2]; }
  Complex trace() const { return e[0] + e[3]; }

  bool is_unitary(double tol = kStructuralTol) const;
  bool is_special_unitary(double tol = kStructuralTol) const;
};

/** Column vector on two qubits, basis |00>,|01>,|10>,|11>, qubit A first. */
struct Vec4 {
  std::array<Complex, 4> e{};

  Complex &operator[](int i) { return e[static_cast<size_t>(i)]; }
  const Complex &operator[](int i) const { return e[static_cast<size_t>(i)]; }

  /// <this|other>, conjugate-linear in the first argument.
  Complex dot(const Vec4 &other) const;
  double norm() const;
};

/** 4x4 complex matrix, row-major, basis order (|00>,|01>,|10>,|11>).
 *  Qubit A is the left (most significant) tensor factor. */
struct Mat4 {
  std::array<Complex, 16> e{};

  Complex &operator()(int r, int c) { return e[static_cast<size_t>(4 * r + c)]; }
  const Complex &operator()(int r, int c) const {
    return e[static_cast<size_t>(4 * r + c)];
  }

  static Mat4 identity();
  static Mat4 zero();

  Mat4 operator*(const Mat4 &o) const;
  Mat4 operator+(const Mat4 &o) const;
  Mat4 operator-(const Mat4 &o) const;
  Mat4 operator*(const Complex &s) const;
  Vec4 operator*(const Vec4 &v) const;

  Mat4 adjoint() const;
  Mat4 transpose() const;
  Complex det() const;
  Complex trace() const;

  bool is_unitary(double tol = kStructuralTol) const;
};

/// Largest entrywise |a - b|.
double max_abs_diff(const Mat2 &a, const Mat2 &b);
double max_abs_diff(const Mat4 &a, const Mat4 &b);

/// |v><w| as a 4x4 matrix.
Mat4 outer(const Vec4 &v, const Vec4 &w);

enum class Axis { X, Y, Z };

/** Pauli matrix for the given axis. */
Mat2 pauli(Axis axis);

/** exp(-i theta sigma_axis) = cos(theta) I - i sin(theta) sigma_axis. */
Mat2 rot(Axis axis, double theta);

/** Kronecker product; `a` acts on qubit A, `b` on qubit B. */
Mat4 kron(const Mat2 &a, const Mat2 &b);

/** A 4x4 unitary with unit determinant, validated on construction.
 *
 *  Invariants: max|m^dag m - I| < 1e-12 and |det m - 1| < 1e-10.
 *  Throws NotUnitaryError if they fail. */
class SpecialUnitary4 {
 public:
  explicit SpecialUnitary4(const Mat4 &m);
  const Mat4 &matrix() const { return m_; }

 private:
  Mat4 m_;
};

/** Strip the global phase from a unitary so the result has determinant one.
 *
 *  Returns (v, phase) with exp(i*phase)*v == u and phase = arg(det u)/4
 *  on the principal branch (-pi/4, pi/4].  Inputs that are unitary only to
 *  ~1e-10 are re-unitarised by a polar Newton step before normalising.
 *  Throws NotUnitaryError if `u` is not unitary within `unitary_tol`. */
std::pair<SpecialUnitary4, double> su4_normalize(const Mat4 &u,
                                                 double unitary_tol = kStructuralTol);

/** Bell state gamma_mn:
 *    gamma_00 = (|00>+|11>)/sqrt2,  gamma_01 = (|01>+|10>)/sqrt2,
 *    gamma_10 = (|00>-|11>)/sqrt2,  gamma_11 = (|01>-|10>)/sqrt2. */
Vec4 bell(int m, int n);

/** The fixed magic-basis matrix Q.
 *
 *  Columns are the phase-adjusted Bell states
 *    (gamma_00, -i gamma_10, gamma_11, -i gamma_01),
 *  chosen so that Q^dag (a kron b) Q is real orthogonal for a, b in SU(2)
 *  and Q^dag E Q is diagonal for any Bell-diagonal E.  The column
 *  convention is frozen: local-gate extraction depends on it. */
const Mat4 &magic_basis();

/** 1 - |tr(a^dag b)|/4, in [0, 1].  Zero iff a and b agree up to a global
 *  phase (for unitary inputs). */
double phase_distance(const Mat4 &a, const Mat4 &b);

/** Result of splitting a product gate into single-qubit factors. */
struct LocalFactors {
  Mat2 a;        // factor on qubit A, special unitary
  Mat2 b;        // factor on qubit B, special unitary
  double phase;  // exp(i*phase) * (a kron b) reproduces the input
};

/** Factor a unitary product gate g = exp(i*phase) (a kron b).
 *
 *  Works block-wise: the largest 2x2 block of g is det-normalised to give
 *  b, the block coefficients give a.  Throws NotAProductError when the
 *  reconstruction misses g by more than `tol` (i.e. g is entangling). */
LocalFactors factor_local(const Mat4 &g, double tol = kStructuralTol);

enum class EulerConvention { ZXZ, XZX };

/** Euler angles of a single-qubit unitary:
 *    u = exp(i*phase) rot(outer, a) rot(inner, theta) rot(outer, c)
 *  with (outer, inner) = (Z, X) for ZXZ and (X, Z) for XZX. */
struct EulerAngles {
  double a;
  double theta;  // middle angle, in [0, pi/2]
  double c;
  double phase;
  EulerConvention convention;

  Mat2 reconstruct() const;
};

/** Decompose a unitary into Euler angles for the given convention.
 *
 *  The middle angle lands in [0, pi/2].  When it is 0 or pi/2 the outer
 *  angles are not unique; ties resolve to c = 0. */
EulerAngles euler_decompose(const Mat2 &u, EulerConvention convention);

/** Haar-random SU(4) element, deterministic for a fixed seed.
 *
 *  Samples a complex Gaussian matrix from a seeded generator, takes the
 *  phase-corrected Householder QR factor, and det-normalises it. */
SpecialUnitary4 haar_su4(std::uint64_t seed);

}  // namespace tqc
