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

#include <benchmark/benchmark.h>

#include "tqc/circuit.hpp"
#include "tqc/kak.hpp"
#include "tqc/linalg.hpp"
#include "tqc/synth.hpp"

namespace {

void BM_HaarSample(benchmark::State& state) {
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(tqc::haar_su4(seed++));
  }
}
BENCHMARK(BM_HaarSample);

void BM_KakDecompose(benchmark::State& state) {
  const auto u = tqc::haar_su4(7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(tqc::kak_decompose(u));
  }
}
BENCHMARK(BM_KakDecompose);

void BM_Synth(benchmark::State& state) {
  const tqc::Mat4 u = tqc::haar_su4(7).matrix();
  for (auto _ : state) {
    benchmark::DoNotOptimize(tqc::synth(u));
  }
}
BENCHMARK(BM_Synth);

void BM_CanonicalUnitary(benchmark::State& state) {
  const tqc::CanonicalParams p{0.5, 0.3, 0.1};
  for (auto _ : state) {
    benchmark::DoNotOptimize(tqc::canonical_unitary(p));
  }
}
BENCHMARK(BM_CanonicalUnitary);

void BM_Evaluate3Cnot(benchmark::State& state) {
  const tqc::Circuit c = tqc::synth_canonical_3cnot({0.5, 0.3, 0.1});
  for (auto _ : state) {
    benchmark::DoNotOptimize(tqc::evaluate(c));
  }
}
BENCHMARK(BM_Evaluate3Cnot);

}  // namespace

BENCHMARK_MAIN();
