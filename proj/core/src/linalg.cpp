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

#include "tqc/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "tqc/errors.hpp"

namespace tqc {

namespace {

constexpr Complex kI{0.0, 1.0};
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

}  // namespace

// ---------------------------------------------------------------------------
// Mat2

Mat2 Mat2::identity() { return Mat2::of(Complex{1}, {}, {}, Complex{1}); }
Mat2 Mat2::zero() { return Mat2{}; }

Mat2 Mat2::of(Complex m00, Complex m01, Complex m10, Complex m11) {
  Mat2 m;
  m.e = {m00, m01, m10, m11};
  return m;
}

Mat2 Mat2::operator*(const Mat2 &o) const {
  Mat2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      r(i, j) = (*this)(i, 0) * o(0, j) + (*this)(i, 1) * o(1, j);
  return r;
}

Mat2 Mat2::operator+(const Mat2 &o) const {
  Mat2 r;
  for (size_t i = 0; i < 4; ++i) r.e[i] = e[i] + o.e[i];
  return r;
}

Mat2 Mat2::operator-(const Mat2 &o) const {
  Mat2 r;
  for (size_t i = 0; i < 4; ++i) r.e[i] = e[i] - o.e[i];
  return r;
}

Mat2 Mat2::operator*(const Complex &s) const {
  Mat2 r;
  for (size_t i = 0; i < 4; ++i) r.e[i] = e[i] * s;
  return r;
}

Mat2 Mat2::adjoint() const {
  Mat2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r(i, j) = std::conj((*this)(j, i));
  return r;
}

bool Mat2::is_unitary(double tol) const {
  return max_abs_diff(adjoint() * (*this), Mat2::identity()) < tol;
}

bool Mat2::is_special_unitary(double tol) const {
  return is_unitary(tol) && std::abs(det() - Complex{1}) < tol;
}

// ---------------------------------------------------------------------------
// Vec4

Complex Vec4::dot(const Vec4 &other) const {
  Complex s{};
  for (size_t i = 0; i < 4; ++i) s += std::conj(e[i]) * other.e[i];
  return s;
}

double Vec4::norm() const { return std::sqrt(std::abs(dot(*this))); }

// ---------------------------------------------------------------------------
// Mat4

Mat4 Mat4::identity() {
  Mat4 r;
  for (int i = 0; i < 4; ++i) r(i, i) = Complex{1};
  return r;
}

Mat4 Mat4::zero() { return Mat4{}; }

Mat4 Mat4::operator*(const Mat4 &o) const {
  Mat4 r;
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k) {
      const Complex a = (*this)(i, k);
      if (a == Complex{}) continue;
      for (int j = 0; j < 4; ++j) r(i, j) += a * o(k, j);
    }
  return r;
}

Mat4 Mat4::operator+(const Mat4 &o) const {
  Mat4 r;
  for (size_t i = 0; i < 16; ++i) r.e[i] = e[i] + o.e[i];
  return r;
}

Mat4 Mat4::operator-(const Mat4 &o) const {
  Mat4 r;
  for (size_t i = 0; i < 16; ++i) r.e[i] = e[i] - o.e[i];
  return r;
}

Mat4 Mat4::operator*(const Complex &s) const {
  Mat4 r;
  for (size_t i = 0; i < 16; ++i) r.e[i] = e[i] * s;
  return r;
}

Vec4 Mat4::operator*(const Vec4 &v) const {
  Vec4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r[i] += (*this)(i, j) * v[j];
  return r;
}

Mat4 Mat4::adjoint() const {
  Mat4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r(i, j) = std::conj((*this)(j, i));
  return r;
}

Mat4 Mat4::transpose() const {
  Mat4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r(i, j) = (*this)(j, i);
  return r;
}

Complex Mat4::det() const {
  // Gaussian elimination with partial pivoting on a copy.
  std::array<Complex, 16> a = e;
  auto at = [&a](int r, int c) -> Complex & {
    return a[static_cast<size_t>(4 * r + c)];
  };
  Complex d{1.0};
  for (int col = 0; col < 4; ++col) {
    int piv = col;
    for (int r = col + 1; r < 4; ++r)
      if (std::abs(at(r, col)) > std::abs(at(piv, col))) piv = r;
    if (std::abs(at(piv, col)) == 0.0) return Complex{};
    if (piv != col) {
      for (int c = 0; c < 4; ++c) std::swap(at(piv, c), at(col, c));
      d = -d;
    }
    d *= at(col, col);
    for (int r = col + 1; r < 4; ++r) {
      const Complex f = at(r, col) / at(col, col);
      for (int c = col; c < 4; ++c) at(r, c) -= f * at(col, c);
    }
  }
  return d;
}

Complex Mat4::trace() const { return e[0] + e[5] + e[10] + e[15]; }

bool Mat4::is_unitary(double tol) const {
  return max_abs_diff(adjoint() * (*this), Mat4::identity()) < tol;
}

double max_abs_diff(const Mat2 &a, const Mat2 &b) {
  double m = 0.0;
  for (size_t i = 0; i < 4; ++i) m = std::max(m, std::abs(a.e[i] - b.e[i]));
  return m;
}

double max_abs_diff(const Mat4 &a, const Mat4 &b) {
  double m = 0.0;
  for (size_t i = 0; i < 16; ++i) m = std::max(m, std::abs(a.e[i] - b.e[i]));
  return m;
}

Mat4 outer(const Vec4 &v, const Vec4 &w) {
  Mat4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r(i, j) = v[i] * std::conj(w[j]);
  return r;
}

// ---------------------------------------------------------------------------
// Constants and elementary gates

Mat2 pauli(Axis axis) {
  switch (axis) {
    case Axis::X:
      return Mat2::of({}, Complex{1}, Complex{1}, {});
    case Axis::Y:
      return Mat2::of({}, -kI, kI, {});
    case Axis::Z:
    default:
      return Mat2::of(Complex{1}, {}, {}, Complex{-1});
  }
}

Mat2 rot(Axis axis, double theta) {
  const Complex c{std::cos(theta), 0.0};
  const Complex ms = -kI * std::sin(theta);
  switch (axis) {
    case Axis::X:
      return Mat2::of(c, ms, ms, c);
    case Axis::Y:
      return Mat2::of(c, -std::sin(theta), std::sin(theta), c);
    case Axis::Z:
    default:
      return Mat2::of(c + ms, {}, {}, c - ms);
  }
}

Mat4 kron(const Mat2 &a, const Mat2 &b) {
  Mat4 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) r(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
  return r;
}

Vec4 bell(int m, int n) {
  Vec4 v;
  const double s = (m == 0) ? kInvSqrt2 : -kInvSqrt2;
  if (n == 0) {
    v[0] = kInvSqrt2;
    v[3] = s;
  } else {
    v[1] = kInvSqrt2;
    v[2] = s;
  }
  return v;
}

const Mat4 &magic_basis() {
  static const Mat4 q = [] {
    Mat4 m;
    const Vec4 cols[4] = {bell(0, 0), bell(1, 0), bell(1, 1), bell(0, 1)};
    const Complex f[4] = {Complex{1}, -kI, Complex{1}, -kI};
    for (int c = 0; c < 4; ++c)
      for (int r = 0; r < 4; ++r) m(r, c) = f[c] * cols[c][r];
    return m;
  }();
  return q;
}

double phase_distance(const Mat4 &a, const Mat4 &b) {
  const double d = 1.0 - std::abs((a.adjoint() * b).trace()) / 4.0;
  return std::clamp(d, 0.0, 1.0);
}

// ---------------------------------------------------------------------------
// SpecialUnitary4

SpecialUnitary4::SpecialUnitary4(const Mat4 &m) : m_(m) {
  if (!m.is_unitary(kExactTol))
    throw NotUnitaryError("SpecialUnitary4: matrix is not unitary to 1e-12");
  if (std::abs(m.det() - Complex{1}) >= kStructuralTol)
    throw NotUnitaryError("SpecialUnitary4: determinant is not 1");
}

std::pair<SpecialUnitary4, double> su4_normalize(const Mat4 &u,
                                                 double unitary_tol) {
  if (!u.is_unitary(unitary_tol))
    throw NotUnitaryError("su4_normalize: input is not unitary");
  Mat4 v = u;
  if (!v.is_unitary(kExactTol)) {
    // Polar Newton step: X <- (X + (X^dag)^-1)/2 = (X + X (X^dag X)^-1)/2.
    // One step is enough to go from 1e-10 to well below 1e-12.
    for (int it = 0; it < 3 && !v.is_unitary(kExactTol); ++it) {
      const Mat4 g = v.adjoint() * v;
      // First-order inverse of g = I + E: g^-1 ~ 2I - g.
      const Mat4 ginv = Mat4::identity() * Complex{2.0} - g;
      v = (v + v * ginv) * Complex{0.5};
    }
  }
  double phase = std::arg(v.det()) / 4.0;
  // arg returns -pi (not +pi) for negative reals with a -0.0 imaginary
  // part; fold that case back into the principal branch (-pi/4, pi/4].
  if (phase <= -M_PI / 4.0) phase += M_PI / 2.0;
  const Complex f = std::exp(-kI * phase);
  return {SpecialUnitary4(v * f), phase};
}

// ---------------------------------------------------------------------------
// factor_local

LocalFactors factor_local(const Mat4 &g, double tol) {
  // Block (i,j) of g is a(i,j) * b when g = exp(i phase) (a kron b).
  auto block = [&g](int i, int j) {
    Mat2 m;
    for (int k = 0; k < 2; ++k)
      for (int l = 0; l < 2; ++l) m(k, l) = g(2 * i + k, 2 * j + l);
    return m;
  };
  int bi = 0, bj = 0;
  double best = -1.0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      double n = 0.0;
      const Mat2 m = block(i, j);
      for (const auto &x : m.e) n += std::norm(x);
      if (n > best) {
        best = n;
        bi = i;
        bj = j;
      }
    }
  const Mat2 b0 = block(bi, bj);
  const Complex db = b0.det();
  if (std::abs(db) < 1e-24)
    throw NotAProductError("factor_local: dominant block is singular");
  const Complex sb = std::sqrt(db);
  const Mat2 b = b0 * (Complex{1} / sb);

  // Coefficient of b in each block gives the A factor up to a scalar.
  Mat2 araw;
  const Mat2 bad = b.adjoint();
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) araw(i, j) = (bad * block(i, j)).trace() * 0.5;
  const Complex da = araw.det();
  if (std::abs(da) < 1e-24)
    throw NotAProductError("factor_local: A-side coefficients are singular");
  const Complex sa = std::sqrt(da);
  const Mat2 a = araw * (Complex{1} / sa);
  const double phase = std::arg(sa);

  const Mat4 rec = kron(a, b) * std::exp(kI * phase);
  if (max_abs_diff(rec, g) > tol)
    throw NotAProductError("factor_local: gate is not a tensor product");
  return {a, b, phase};
}

// ---------------------------------------------------------------------------
// Euler decomposition

Mat2 EulerAngles::reconstruct() const {
  const Axis outer = (convention == EulerConvention::ZXZ) ? Axis::Z : Axis::X;
  const Axis inner = (convention == EulerConvention::ZXZ) ? Axis::X : Axis::Z;
  return (rot(outer, a) * rot(inner, theta) * rot(outer, c)) *
         std::exp(kI * phase);
}

namespace {

// ZXZ angles of a special unitary v (det v = 1, phase already removed).
void zxz_angles(const Mat2 &v, double &a, double &theta, double &c) {
  // v = [[cos(t) e^{-i(a+c)}, -i sin(t) e^{-i(a-c)}], ...]
  const double m00 = std::abs(v(0, 0));
  const double m01 = std::abs(v(0, 1));
  theta = std::atan2(m01, m00);
  c = 0.0;
  if (m01 < 1e-14) {
    a = -std::arg(v(0, 0));
  } else if (m00 < 1e-14) {
    a = -std::arg(v(0, 1)) - M_PI / 2.0;
  } else {
    const double sum = -std::arg(v(0, 0));
    const double diff = -std::arg(v(0, 1)) - M_PI / 2.0;
    a = (sum + diff) / 2.0;
    c = (sum - diff) / 2.0;
  }
}

}  // namespace

EulerAngles euler_decompose(const Mat2 &u, EulerConvention convention) {
  Mat2 v = u;
  if (convention == EulerConvention::XZX) {
    // Conjugating by H swaps the roles of sigma_x and sigma_z.
    const Mat2 h = Mat2::of(kInvSqrt2, kInvSqrt2, kInvSqrt2, -kInvSqrt2);
    v = h * u * h;
  }
  const double phase = std::arg(v.det()) / 2.0;
  v = v * std::exp(-kI * phase);
  EulerAngles r{};
  r.convention = convention;
  r.phase = phase;
  zxz_angles(v, r.a, r.theta, r.c);
  return r;
}

// ---------------------------------------------------------------------------
// Haar sampling

namespace {

// Standard normal deviates built from raw 64-bit generator output, so the
// stream does not depend on the standard library's distribution internals.
class GaussianStream {
 public:
  explicit GaussianStream(std::uint64_t seed) : gen_(seed) {}

  double next() {
    if (have_) {
      have_ = false;
      return spare_;
    }
    const double u1 = ((gen_() >> 11) + 1) * 0x1.0p-53;  // in (0, 1]
    const double u2 = (gen_() >> 11) * 0x1.0p-53;        // in [0, 1)
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double t = 2.0 * M_PI * u2;
    spare_ = r * std::sin(t);
    have_ = true;
    return r * std::cos(t);
  }

 private:
  std::mt19937_64 gen_;
  double spare_ = 0.0;
  bool have_ = false;
};

}  // namespace

SpecialUnitary4 haar_su4(std::uint64_t seed) {
  GaussianStream g(seed);
  Mat4 a;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const double re = g.next();
      const double im = g.next();
      a(i, j) = Complex{re, im};
    }

  // Householder QR; Q is accumulated explicitly.
  Mat4 q = Mat4::identity();
  for (int k = 0; k < 4; ++k) {
    double nx = 0.0;
    for (int r = k; r < 4; ++r) nx += std::norm(a(r, k));
    nx = std::sqrt(nx);
    if (nx < 1e-300) continue;
    const Complex x0 = a(k, k);
    const Complex alpha =
        (std::abs(x0) > 0.0) ? -(x0 / std::abs(x0)) * nx : Complex{-nx};
    std::array<Complex, 4> v{};
    for (int r = k; r < 4; ++r) v[static_cast<size_t>(r)] = a(r, k);
    v[static_cast<size_t>(k)] -= alpha;
    double vv = 0.0;
    for (const auto &x : v) vv += std::norm(x);
    if (vv < 1e-300) continue;
    const double beta = 2.0 / vv;
    // a <- H a with H = I - beta v v^dag
    for (int c = 0; c < 4; ++c) {
      Complex s{};
      for (int r = k; r < 4; ++r) s += std::conj(v[static_cast<size_t>(r)]) * a(r, c);
      s *= beta;
      for (int r = k; r < 4; ++r) a(r, c) -= v[static_cast<size_t>(r)] * s;
    }
    // q <- q H
    for (int r = 0; r < 4; ++r) {
      Complex s{};
      for (int c = k; c < 4; ++c) s += q(r, c) * v[static_cast<size_t>(c)];
      s *= beta;
      for (int c = k; c < 4; ++c) q(r, c) -= s * std::conj(v[static_cast<size_t>(c)]);
    }
  }

  // Fix the residual diagonal phases of R so the distribution is Haar.
  for (int k = 0; k < 4; ++k) {
    const Complex rkk = a(k, k);
    const Complex f = (std::abs(rkk) > 0.0) ? rkk / std::abs(rkk) : Complex{1};
    for (int r = 0; r < 4; ++r) q(r, k) *= f;
  }
  return su4_normalize(q, 1e-12).first;
}

}  // namespace tqc
