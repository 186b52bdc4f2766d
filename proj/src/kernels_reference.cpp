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

// Serial reference kernels. Kept deliberately naive: these are the
// oracles the OpenMP kernels are checked against.
#include <algorithm>
#include <random>

#include "qclsim/kernels.hpp"

namespace qclsim::kernels::reference {

void matmul(std::span<const Complex> a, std::span<const Complex> b,
            std::span<Complex> out, std::size_t dim) {
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      Complex sum{};
      for (std::size_t k = 0; k < dim; ++k) sum += a[i * dim + k] * b[k * dim + j];
      out[i * dim + j] = sum;
    }
  }
}

void kron(std::span<const Complex> a, std::size_t dim_a,
          std::span<const Complex> b, std::size_t dim_b, std::span<Complex> out) {
  const std::size_t dim = dim_a * dim_b;
  for (std::size_t ia = 0; ia < dim_a; ++ia) {
    for (std::size_t ja = 0; ja < dim_a; ++ja) {
      for (std::size_t ib = 0; ib < dim_b; ++ib) {
        for (std::size_t jb = 0; jb < dim_b; ++jb) {
          out[(ia * dim_b + ib) * dim + ja * dim_b + jb] =
              a[ia * dim_a + ja] * b[ib * dim_b + jb];
        }
      }
    }
  }
}

void kraus_sandwich(std::span<const ComplexMatrix> kraus,
                    const ComplexMatrix& rho, ComplexMatrix& out) {
  const std::size_t dim = rho.dim();
  out = ComplexMatrix(dim);
  for (const ComplexMatrix& a : kraus) {
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t j = 0; j < dim; ++j) {
        Complex sum{};
        for (std::size_t k = 0; k < dim; ++k) {
          for (std::size_t l = 0; l < dim; ++l) {
            sum += a(i, k) * rho(k, l) * std::conj(a(j, l));
          }
        }
        out(i, j) += sum;
      }
    }
  }
}

std::vector<std::uint64_t> draw_counts(std::span<const double> probs,
                                       std::uint64_t shots, std::uint64_t seed) {
  std::vector<double> cdf(probs.size());
  double run = 0.0;
  for (std::size_t k = 0; k < probs.size(); ++k) {
    run += std::max(probs[k], 0.0);
    cdf[k] = run;
  }
  std::vector<std::uint64_t> counts(probs.size(), 0);
  std::uint64_t stream = 0;
  std::mt19937_64 gen(stream_seed(seed, stream));
  for (std::uint64_t shot = 0; shot < shots; ++shot) {
    if (shot > 0 && shot % kShotsPerStream == 0) gen.seed(stream_seed(seed, ++stream));
    ++counts[pick_outcome(cdf, to_unit_interval(gen()))];
  }
  return counts;
}

}  // namespace qclsim::kernels::reference
