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
//
// Deterministic random gates for tests.

#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "tqc/kak.hpp"
#include "tqc/linalg.hpp"

namespace tqc::test {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double uniform() { return (gen_() >> 11) * 0x1.0p-53; }  // [0, 1)

  double normal() {
    const double u1 = ((gen_() >> 11) + 1) * 0x1.0p-53;
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
  }

  Complex cnormal() { return {normal(), normal()}; }

 private:
  std::mt19937_64 gen_;
};

/// Haar-distributed SU(2) element (Gram-Schmidt of a complex Gaussian).
inline Mat2 haar_su2(std::uint64_t seed) {
  Rng rng(seed);
  Complex x0[2] = {rng.cnormal(), rng.cnormal()};
  Complex x1[2] = {rng.cnormal(), rng.cnormal()};
  const double n0 = std::sqrt(std::norm(x0[0]) + std::norm(x0[1]));
  x0[0] /= n0;
  x0[1] /= n0;
  const Complex ip = std::conj(x0[0]) * x1[0] + std::conj(x0[1]) * x1[1];
  x1[0] -= ip * x0[0];
  x1[1] -= ip * x0[1];
  const double n1 = std::sqrt(std::norm(x1[0]) + std::norm(x1[1]));
  x1[0] /= n1;
  x1[1] /= n1;
  Mat2 q = Mat2::of(x0[0], x1[0], x0[1], x1[1]);
  const Complex f = std::sqrt(q.det());
  return q * (Complex{1} / f);
}

/// Uniform point of the Weyl chamber pi/4 >= hx >= hy >= |hz|.
inline CanonicalParams random_canonical(std::uint64_t seed) {
  Rng rng(seed);
  const double hx = rng.uniform() * M_PI / 4.0;
  const double hy = rng.uniform() * hx;
  const double hz = (2.0 * rng.uniform() - 1.0) * hy;
  return {hx, hy, hz};
}

}  // namespace tqc::test
