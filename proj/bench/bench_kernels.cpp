// Copyright 2026 The qclsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Serial reference kernels against the OpenMP ones.
#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "qclsim/channels.hpp"
#include "qclsim/kernels.hpp"

namespace {

using qclsim::Complex;
using qclsim::ComplexMatrix;

ComplexMatrix random_matrix(std::size_t dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  ComplexMatrix m(dim);
  for (Complex& z : m.data()) z = {normal(rng), normal(rng)};
  return m;
}

template <bool kParallel>
void BM_Matmul(benchmark::State& state) {
  const auto dim = static_cast<std::size_t>(state.range(0));
  const ComplexMatrix a = random_matrix(dim, 1), b = random_matrix(dim, 2);
  ComplexMatrix c(dim);
  for (auto _ : state) {
    if constexpr (kParallel) {
      qclsim::kernels::matmul(a.data(), b.data(), c.data(), dim);
    } else {
      qclsim::kernels::reference::matmul(a.data(), b.data(), c.data(), dim);
    }
    benchmark::DoNotOptimize(c.data().data());
  }
}
BENCHMARK(BM_Matmul<false>)->RangeMultiplier(2)->Range(16, 256);
BENCHMARK(BM_Matmul<true>)->RangeMultiplier(2)->Range(16, 256);

template <bool kParallel>
void BM_KrausSandwich(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const std::size_t dim = std::size_t{1} << n;
  const ComplexMatrix rho = qclsim::ComplexMatrix::identity(dim);
  const qclsim::QuantumOperation op =
      qclsim::noise_channel(qclsim::NoiseKind::kDepolarizing, 0.1, n, 0);
  ComplexMatrix out;
  for (auto _ : state) {
    if constexpr (kParallel) {
      qclsim::kernels::kraus_sandwich(op.kraus(), rho, out);
    } else {
      qclsim::kernels::reference::kraus_sandwich(op.kraus(), rho, out);
    }
    benchmark::DoNotOptimize(out.data().data());
  }
}
BENCHMARK(BM_KrausSandwich<false>)->DenseRange(3, 6, 1);
BENCHMARK(BM_KrausSandwich<true>)->DenseRange(3, 8, 1);

template <bool kParallel>
void BM_DrawCounts(benchmark::State& state) {
  std::vector<double> probs(256, 1.0 / 256.0);
  const auto shots = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    auto counts = kParallel ? qclsim::kernels::draw_counts(probs, shots, 7)
                            : qclsim::kernels::reference::draw_counts(probs, shots, 7);
    benchmark::DoNotOptimize(counts.data());
  }
}
BENCHMARK(BM_DrawCounts<false>)->Arg(1 << 20);
BENCHMARK(BM_DrawCounts<true>)->Arg(1 << 20);

}  // namespace

BENCHMARK_MAIN();
