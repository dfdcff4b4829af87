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

#include <doctest.h>

#include "random_gates.hpp"
#include "tqc/errors.hpp"
#include "tqc/kak.hpp"
#include "tqc/linalg.hpp"

using namespace tqc;

namespace {
constexpr Complex kI{0.0, 1.0};
const double kSqrt2Inv = 1.0 / std::sqrt(2.0);
}  // namespace

TEST_CASE("pauli matrices have the textbook entries") {
  const Mat2 x = pauli(Axis::X);
  CHECK(x(0, 0) == Complex{0});
  CHECK(x(0, 1) == Complex{1});
  CHECK(x(1, 0) == Complex{1});
  CHECK(x(1, 1) == Complex{0});
  const Mat2 y = pauli(Axis::Y);
  CHECK(y(0, 1) == -kI);
  CHECK(y(1, 0) == kI);
  const Mat2 z = pauli(Axis::Z);
  CHECK(z(0, 0) == Complex{1});
  CHECK(z(1, 1) == Complex{-1});
}

TEST_CASE("rot special values") {
  CHECK(max_abs_diff(rot(Axis::X, 0.0), Mat2::identity()) == 0.0);

  // rot(x, pi/4) is w = (I - i sx)/sqrt2
  const Mat2 w_expected =
      (Mat2::identity() - pauli(Axis::X) * kI) * Complex{kSqrt2Inv};
  CHECK(max_abs_diff(rot(Axis::X, M_PI / 4.0), w_expected) < 1e-15);

  const Mat2 rz = rot(Axis::Z, 0.3);
  CHECK(std::abs(rz(0, 0) - std::exp(-kI * 0.3)) < 1e-15);
  CHECK(std::abs(rz(1, 1) - std::exp(kI * 0.3)) < 1e-15);
  CHECK(std::abs(rz(0, 1)) == 0.0);
}

TEST_CASE("rot is a homomorphism and antiperiodic over pi") {
  test::Rng rng(11);
  for (int i = 0; i < 100; ++i) {
    const double t1 = 10.0 * (rng.uniform() - 0.5);
    const double t2 = 10.0 * (rng.uniform() - 0.5);
    for (Axis ax : {Axis::X, Axis::Y, Axis::Z}) {
      CHECK(max_abs_diff(rot(ax, t1) * rot(ax, t2), rot(ax, t1 + t2)) < 1e-12);
      CHECK(max_abs_diff(rot(ax, t1 + M_PI), rot(ax, t1) * Complex{-1}) < 1e-12);
      CHECK(rot(ax, t1).is_special_unitary(1e-12));
    }
  }
}

TEST_CASE("kron fixed values") {
  CHECK(max_abs_diff(kron(Mat2::identity(), Mat2::identity()),
                     Mat4::identity()) == 0.0);

  const Mat4 xx = kron(pauli(Axis::X), pauli(Axis::X));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      CHECK(xx(i, j) == (i + j == 3 ? Complex{1} : Complex{0}));

  const Mat4 zx = kron(pauli(Axis::Z), pauli(Axis::X));
  CHECK(zx(0, 1) == Complex{1});
  CHECK(zx(1, 0) == Complex{1});
  CHECK(zx(2, 3) == Complex{-1});
  CHECK(zx(3, 2) == Complex{-1});
  CHECK(zx(0, 0) == Complex{0});
}

TEST_CASE("kron mixed-product identity and bilinearity on random locals") {
  for (int i = 0; i < 50; ++i) {
    const Mat2 a = test::haar_su2(4 * i + 1);
    const Mat2 b = test::haar_su2(4 * i + 2);
    const Mat2 c = test::haar_su2(4 * i + 3);
    const Mat2 d = test::haar_su2(4 * i + 4);
    CHECK(max_abs_diff(kron(a, b) * kron(c, d), kron(a * c, b * d)) < 1e-12);
    CHECK(max_abs_diff(kron(a + c, b), kron(a, b) + kron(c, b)) < 1e-12);
    CHECK(max_abs_diff(kron(a, b + d), kron(a, b) + kron(a, d)) < 1e-12);
    CHECK(max_abs_diff(kron(a * Complex{0.5}, b), kron(a, b) * Complex{0.5}) <
          1e-12);
  }
}

TEST_CASE("su4_normalize") {
  SUBCASE("identity") {
    const auto [su, phase] = su4_normalize(Mat4::identity());
    CHECK(phase == 0.0);
    CHECK(max_abs_diff(su.matrix(), Mat4::identity()) == 0.0);
  }
  SUBCASE("pure phase is stripped") {
    const auto [su, phase] = su4_normalize(Mat4::identity() * std::exp(kI * 0.2));
    CHECK(phase == doctest::Approx(0.2).epsilon(1e-14));
    CHECK(max_abs_diff(su.matrix(), Mat4::identity()) < 1e-15);
  }
  SUBCASE("CNOT has determinant -1 and picks up pi/4") {
    Mat4 cnot = Mat4::identity();
    std::swap(cnot(2, 2), cnot(2, 3));
    std::swap(cnot(3, 3), cnot(3, 2));
    const auto [su, phase] = su4_normalize(cnot);
    CHECK(phase == doctest::Approx(M_PI / 4.0).epsilon(1e-14));
    CHECK(std::abs(su.matrix().det() - Complex{1}) < 1e-14);
    CHECK(max_abs_diff(su.matrix() * std::exp(kI * phase), cnot) < 1e-15);
  }
  SUBCASE("phase is the principal fourth-root branch") {
    test::Rng rng(77);
    for (int i = 0; i < 50; ++i) {
      const Mat4 u =
          haar_su4(static_cast<std::uint64_t>(i)).matrix() *
          std::exp(kI * (2.0 * M_PI * (rng.uniform() - 0.5)));
      const auto [su, phase] = su4_normalize(u);
      CHECK(phase > -M_PI / 4.0 - 1e-15);
      CHECK(phase <= M_PI / 4.0 + 1e-15);
      CHECK(max_abs_diff(su.matrix() * std::exp(kI * phase), u) < 1e-12);
    }
  }
  SUBCASE("rejects non-unitary input") {
    Mat4 bad = Mat4::identity();
    bad(0, 0) = Complex{2.0};
    CHECK_THROWS_AS(su4_normalize(bad), NotUnitaryError);
  }
}

TEST_CASE("bell states") {
  const Vec4 g00 = bell(0, 0);
  CHECK(g00[0] == Complex{kSqrt2Inv});
  CHECK(g00[1] == Complex{0});
  CHECK(g00[2] == Complex{0});
  CHECK(g00[3] == Complex{kSqrt2Inv});
  const Vec4 g11 = bell(1, 1);
  CHECK(g11[1] == Complex{kSqrt2Inv});
  CHECK(g11[2] == Complex{-kSqrt2Inv});

  for (int m = 0; m < 2; ++m)
    for (int n = 0; n < 2; ++n)
      for (int mm = 0; mm < 2; ++mm)
        for (int nn = 0; nn < 2; ++nn) {
          const Complex ip = bell(m, n).dot(bell(mm, nn));
          const Complex expect{(m == mm && n == nn) ? 1.0 : 0.0};
          CHECK(std::abs(ip - expect) < 1e-15);
        }
}

TEST_CASE("magic basis conjugates locals into real orthogonal matrices") {
  const Mat4 &q = magic_basis();
  CHECK(q.is_unitary(1e-15));
  const Mat4 qd = q.adjoint();
  for (int i = 0; i < 100; ++i) {
    const Mat4 g = kron(test::haar_su2(2 * i + 1), test::haar_su2(2 * i + 2));
    const Mat4 m = qd * g * q;
    double imag = 0.0;
    for (const auto &x : m.e) imag = std::max(imag, std::abs(x.imag()));
    CHECK(imag < 1e-12);
    CHECK(max_abs_diff(m.transpose() * m, Mat4::identity()) < 1e-12);
  }
}

TEST_CASE("magic basis diagonalises canonical gates") {
  const Mat4 &q = magic_basis();
  const Mat4 qd = q.adjoint();
  for (int i = 0; i < 50; ++i) {
    const Mat4 m = qd * canonical_unitary(test::random_canonical(i)) * q;
    double off = 0.0;
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c)
        if (r != c) off = std::max(off, std::abs(m(r, c)));
    CHECK(off < 1e-12);
  }
}

TEST_CASE("phase_distance") {
  const Mat4 u = haar_su4(5).matrix();
  CHECK(phase_distance(u, u) == 0.0);
  CHECK(phase_distance(u, u * std::exp(kI * 1.3)) < 1e-15);
  CHECK(phase_distance(Mat4::identity(),
                       kron(pauli(Axis::X), Mat2::identity())) ==
        doctest::Approx(1.0));

  // symmetry, phase invariance on either side, left-invariance
  for (int i = 0; i < 25; ++i) {
    const Mat4 a = haar_su4(3 * i + 1).matrix();
    const Mat4 b = haar_su4(3 * i + 2).matrix();
    const Mat4 c = haar_su4(3 * i + 3).matrix();
    const double d = phase_distance(a, b);
    CHECK(d >= 0.0);
    CHECK(phase_distance(b, a) == doctest::Approx(d).epsilon(1e-12));
    CHECK(phase_distance(a * std::exp(kI * 0.7), b) ==
          doctest::Approx(d).epsilon(1e-12));
    CHECK(phase_distance(a, b * std::exp(kI * -2.1)) ==
          doctest::Approx(d).epsilon(1e-12));
    CHECK(phase_distance(c * a, c * b) == doctest::Approx(d).epsilon(1e-10));
  }
}

TEST_CASE("factor_local on exact products") {
  SUBCASE("pauli product") {
    const Mat4 g = kron(pauli(Axis::X), pauli(Axis::Y));
    const LocalFactors f = factor_local(g);
    CHECK(max_abs_diff(kron(f.a, f.b) * std::exp(kI * f.phase), g) < 1e-12);
    CHECK(f.a.is_special_unitary(1e-12));
    CHECK(f.b.is_special_unitary(1e-12));
  }
  SUBCASE("w kron w_dagger") {
    const Mat4 g = kron(rot(Axis::X, M_PI / 4.0), rot(Axis::X, -M_PI / 4.0));
    const LocalFactors f = factor_local(g);
    CHECK(max_abs_diff(kron(f.a, f.b) * std::exp(kI * f.phase), g) < 1e-12);
  }
  SUBCASE("1000 random products round-trip") {
    for (int i = 0; i < 1000; ++i) {
      const Mat4 g = kron(test::haar_su2(2 * i + 1), test::haar_su2(2 * i + 2)) *
                     std::exp(kI * (i * 0.01));
      const LocalFactors f = factor_local(g);
      CHECK(max_abs_diff(kron(f.a, f.b) * std::exp(kI * f.phase), g) < 1e-10);
    }
  }
}

TEST_CASE("factor_local rejects entangling gates") {
  Mat4 cnot = Mat4::identity();
  std::swap(cnot(2, 2), cnot(2, 3));
  std::swap(cnot(3, 3), cnot(3, 2));
  CHECK_THROWS_AS(factor_local(cnot), NotAProductError);

  Mat4 swap = Mat4::zero();
  swap(0, 0) = swap(3, 3) = Complex{1};
  swap(1, 2) = swap(2, 1) = Complex{1};
  CHECK_THROWS_AS(factor_local(swap), NotAProductError);

  CHECK_THROWS_AS(factor_local(canonical_unitary({0.4, 0.2, 0.1})),
                  NotAProductError);
}

TEST_CASE("euler_decompose fixed cases") {
  SUBCASE("identity in ZXZ") {
    const EulerAngles e = euler_decompose(Mat2::identity(), EulerConvention::ZXZ);
    CHECK(e.a == 0.0);
    CHECK(e.theta == 0.0);
    CHECK(e.c == 0.0);
    CHECK(e.phase == 0.0);
  }
  SUBCASE("w in XZX: commuting outer factors tie-break to c = 0") {
    const EulerAngles e =
        euler_decompose(rot(Axis::X, M_PI / 4.0), EulerConvention::XZX);
    CHECK(e.theta == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(e.c == 0.0);
    CHECK(e.a == doctest::Approx(M_PI / 4.0).epsilon(1e-12));
    CHECK(max_abs_diff(e.reconstruct(), rot(Axis::X, M_PI / 4.0)) < 1e-12);
  }
}

TEST_CASE("euler_decompose round-trips random unitaries in both conventions") {
  for (int i = 0; i < 300; ++i) {
    Mat2 u = test::haar_su2(i);
    if (i % 3 == 0) u = u * std::exp(kI * (0.1 * i));  // U(2), not just SU(2)
    for (EulerConvention conv : {EulerConvention::ZXZ, EulerConvention::XZX}) {
      const EulerAngles e = euler_decompose(u, conv);
      CHECK(e.theta >= 0.0);
      CHECK(e.theta <= M_PI / 2.0 + 1e-15);
      CHECK(max_abs_diff(e.reconstruct(), u) < 1e-12);
    }
  }
}

TEST_CASE("haar_su4 determinism and spread") {
  const Mat4 a = haar_su4(1).matrix();
  const Mat4 b = haar_su4(1).matrix();
  CHECK(max_abs_diff(a, b) == 0.0);
  CHECK(phase_distance(haar_su4(1).matrix(), haar_su4(2).matrix()) > 1e-3);
  for (std::uint64_t s = 0; s < 50; ++s) {
    const Mat4 u = haar_su4(s).matrix();
    CHECK(max_abs_diff(u.adjoint() * u, Mat4::identity()) < 1e-12);
    CHECK(std::abs(u.det() - Complex{1}) < 1e-12);
  }
}
