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

#include "qclsim/kernels.hpp"

#include <gtest/gtest.h>
#include <omp.h>

#include <numeric>

#include "qclsim/channels.hpp"
#include "random_quantum.hpp"

namespace qclsim {
namespace {

class KernelsVsReference : public ::testing::TestWithParam<std::size_t> {};

TEST_P(KernelsVsReference, Matmul) {
  const std::size_t dim = GetParam();
  testing::Rng rng(100 + dim);
  const ComplexMatrix a = testing::random_matrix(dim, rng);
  const ComplexMatrix b = testing::random_matrix(dim, rng);
  ComplexMatrix fast(dim), slow(dim);
  kernels::matmul(a.data(), b.data(), fast.data(), dim);
  kernels::reference::matmul(a.data(), b.data(), slow.data(), dim);
  EXPECT_LE(max_norm_diff(fast, slow), 1e-12 * static_cast<double>(dim));
}

TEST_P(KernelsVsReference, Kron) {
  const std::size_t dim = GetParam();
  testing::Rng rng(200 + dim);
  const ComplexMatrix a = testing::random_matrix(2, rng);
  const ComplexMatrix b = testing::random_matrix(dim, rng);
  ComplexMatrix fast(2 * dim), slow(2 * dim);
  kernels::kron(a.data(), 2, b.data(), dim, fast.data());
  kernels::reference::kron(a.data(), 2, b.data(), dim, slow.data());
  EXPECT_EQ(fast, slow);
}

TEST_P(KernelsVsReference, KrausSandwich) {
  const std::size_t dim = GetParam();
  const std::size_t n = qubit_count(dim);
  testing::Rng rng(300 + dim);
  const DensityOperator rho = testing::random_density(n, rng);
  const QuantumOperation op = noise_channel(NoiseKind::kDepolarizing, 0.3, n, n - 1);
  ComplexMatrix fast, slow;
  kernels::kraus_sandwich(op.kraus(), rho.matrix(), fast);
  kernels::reference::kraus_sandwich(op.kraus(), rho.matrix(), slow);
  EXPECT_LE(max_norm_diff(fast, slow), 1e-13);
}

INSTANTIATE_TEST_SUITE_P(Dims, KernelsVsReference, ::testing::Values(2, 4, 8, 32, 64));

TEST(DrawCounts, MatchesReferenceAcrossStreamBoundaries) {
  const std::vector<double> probs = {0.1, 0.0, 0.25, 0.65};
  for (std::uint64_t shots : {std::uint64_t{1}, std::uint64_t{1024}, kernels::kShotsPerStream,
                              kernels::kShotsPerStream + 7, 5 * kernels::kShotsPerStream + 3}) {
    const auto fast = kernels::draw_counts(probs, shots, 42);
    const auto slow = kernels::reference::draw_counts(probs, shots, 42);
    EXPECT_EQ(fast, slow) << "shots=" << shots;
    EXPECT_EQ(std::accumulate(fast.begin(), fast.end(), std::uint64_t{0}), shots);
    EXPECT_EQ(fast[1], 0u);
  }
}

TEST(DrawCounts, IndependentOfThreadCount) {
  const std::vector<double> probs = {0.5, 0.25, 0.125, 0.125};
  const int saved = omp_get_max_threads();
  omp_set_num_threads(1);
  const auto one = kernels::draw_counts(probs, 400000, 9);
  omp_set_num_threads(4);
  const auto four = kernels::draw_counts(probs, 400000, 9);
  omp_set_num_threads(saved);
  EXPECT_EQ(one, four);
}

TEST(DrawCounts, SeedChangesTheDraw) {
  const std::vector<double> probs = {0.5, 0.5};
  EXPECT_NE(kernels::draw_counts(probs, 10000, 1), kernels::draw_counts(probs, 10000, 2));
}

TEST(DrawCounts, PickOutcomeSkipsZeroMassAtTheEdges) {
  const std::vector<double> cdf = {0.0, 0.5, 1.0, 1.0};
  EXPECT_EQ(kernels::pick_outcome(cdf, 0.0), 1u);
  EXPECT_EQ(kernels::pick_outcome(cdf, 0.49), 1u);
  EXPECT_EQ(kernels::pick_outcome(cdf, 0.5), 2u);
  EXPECT_EQ(kernels::pick_outcome(cdf, 0.9999999999), 2u);
}

TEST(StreamSeed, DistinctPerStream) {
  EXPECT_NE(kernels::stream_seed(0, 0), kernels::stream_seed(0, 1));
  EXPECT_NE(kernels::stream_seed(0, 0), kernels::stream_seed(1, 0));
  EXPECT_EQ(kernels::stream_seed(5, 3), kernels::stream_seed(5, 3));
}

}  // namespace
}  // namespace qclsim
