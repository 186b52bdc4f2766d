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

#ifndef QCLSIM_KERNELS_HPP_
#define QCLSIM_KERNELS_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "qclsim/linalg.hpp"

// Hot loops of the simulator. The `kernels` namespace holds the OpenMP
// versions used by the library; `kernels::reference` holds straightforward
// serial versions that the tests compare against and the benchmark times.
namespace qclsim::kernels {

// Below this dimension the OpenMP kernels run on the calling thread.
inline constexpr std::size_t kParallelDimThreshold = 32;

// Shots drawn per random sub-stream. Fixed so the split into streams,
// and hence every histogram, is independent of the thread count.
inline constexpr std::uint64_t kShotsPerStream = 1 << 16;

void matmul(std::span<const Complex> a, std::span<const Complex> b,
            std::span<Complex> out, std::size_t dim);

void kron(std::span<const Complex> a, std::size_t dim_a,
          std::span<const Complex> b, std::size_t dim_b, std::span<Complex> out);

// out = sum_k A_k rho A_k^dagger
void kraus_sandwich(std::span<const ComplexMatrix> kraus,
                    const ComplexMatrix& rho, ComplexMatrix& out);

// Seed of sub-stream `stream` derived from the user seed (splitmix64 mix).
std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t stream);

// Draws `shots` outcomes from the categorical distribution `probs` and
// returns per-outcome counts. Shots are split into kShotsPerStream-sized
// sub-streams, each driven by std::mt19937_64 seeded with stream_seed().
std::vector<std::uint64_t> draw_counts(std::span<const double> probs,
                                       std::uint64_t shots, std::uint64_t seed);

namespace reference {

void matmul(std::span<const Complex> a, std::span<const Complex> b,
            std::span<Complex> out, std::size_t dim);
void kron(std::span<const Complex> a, std::size_t dim_a,
          std::span<const Complex> b, std::size_t dim_b, std::span<Complex> out);
void kraus_sandwich(std::span<const ComplexMatrix> kraus,
                    const ComplexMatrix& rho, ComplexMatrix& out);
std::vector<std::uint64_t> draw_counts(std::span<const double> probs,
                                       std::uint64_t shots, std::uint64_t seed);

}  // namespace reference

// Shared by both draw_counts versions: index of the outcome selected by a
// uniform variate u in [0,1) against the cumulative distribution `cdf`.
std::size_t pick_outcome(std::span<const double> cdf, double u);
// 53-bit uniform double in [0,1) from one 64-bit generator output.
inline double to_unit_interval(std::uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

}  // namespace qclsim::kernels

#endif  // QCLSIM_KERNELS_HPP_
