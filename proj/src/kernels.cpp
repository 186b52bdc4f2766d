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

#include <omp.h>

#include <algorithm>
#include <random>

namespace qclsim::kernels {

namespace {

// acc += x * y on real parts. Entries are finite, so the NaN/Inf recovery
// done by the std::complex operator is not needed.
inline void mul_add(Complex& acc, const Complex& x, const Complex& y) {
  const double xr = x.real(), xi = x.imag(), yr = y.real(), yi = y.imag();
  acc = {acc.real() + xr * yr - xi * yi, acc.imag() + xr * yi + xi * yr};
}

// acc += x * conj(y)
inline void mul_conj_add(Complex& acc, const Complex& x, const Complex& y) {
  const double xr = x.real(), xi = x.imag(), yr = y.real(), yi = y.imag();
  acc = {acc.real() + xr * yr + xi * yi, acc.imag() - xr * yi + xi * yr};
}

}  // namespace

void matmul(std::span<const Complex> a, std::span<const Complex> b,
            std::span<Complex> out, std::size_t dim) {
  const auto n = static_cast<std::ptrdiff_t>(dim);
  // i-k-j order keeps the inner loop streaming over contiguous rows of b.
#pragma omp parallel for schedule(static) if (dim >= kParallelDimThreshold)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    Complex* row = out.data() + i * n;
    std::fill(row, row + n, Complex{});
    for (std::ptrdiff_t k = 0; k < n; ++k) {
      const Complex aik = a[i * n + k];
      if (aik == Complex{}) continue;
      const Complex* brow = b.data() + k * n;
      for (std::ptrdiff_t j = 0; j < n; ++j) mul_add(row[j], aik, brow[j]);
    }
  }
}

void kron(std::span<const Complex> a, std::size_t dim_a,
          std::span<const Complex> b, std::size_t dim_b, std::span<Complex> out) {
  const std::size_t dim = dim_a * dim_b;
  const auto rows = static_cast<std::ptrdiff_t>(dim);
#pragma omp parallel for schedule(static) if (dim >= kParallelDimThreshold)
  for (std::ptrdiff_t r = 0; r < rows; ++r) {
    const std::size_t ra = static_cast<std::size_t>(r) / dim_b;
    const std::size_t rb = static_cast<std::size_t>(r) % dim_b;
    for (std::size_t c = 0; c < dim; ++c) {
      out[static_cast<std::size_t>(r) * dim + c] =
          a[ra * dim_a + c / dim_b] * b[rb * dim_b + c % dim_b];
    }
  }
}

void kraus_sandwich(std::span<const ComplexMatrix> kraus,
                    const ComplexMatrix& rho, ComplexMatrix& out) {
  const std::size_t dim = rho.dim();
  const auto n = static_cast<std::ptrdiff_t>(dim);
  out = ComplexMatrix(dim);
  ComplexMatrix left(dim);
  for (const ComplexMatrix& a : kraus) {
    matmul(a.data(), rho.data(), left.data(), dim);
    // out(i,j) += sum_k left(i,k) * conj(a(j,k))
#pragma omp parallel for schedule(static) if (dim >= kParallelDimThreshold)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      for (std::ptrdiff_t j = 0; j < n; ++j) {
        const Complex* lrow = left.data().data() + i * n;
        const Complex* arow = a.data().data() + j * n;
        Complex sum{};
        for (std::ptrdiff_t k = 0; k < n; ++k) mul_conj_add(sum, lrow[k], arow[k]);
        out(i, j) += sum;
      }
    }
  }
}

std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + (stream + 1) * 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::size_t pick_outcome(std::span<const double> cdf, double u) {
  const double target = u * cdf.back();
  auto it = std::upper_bound(cdf.begin(), cdf.end(), target);
  auto idx = static_cast<std::size_t>(it - cdf.begin());
  idx = std::min(idx, cdf.size() - 1);
  // Never land on a zero-probability outcome through rounding at the top.
  while (idx > 0 && cdf[idx] == cdf[idx - 1]) --idx;
  return idx;
}

namespace {

std::vector<double> cumulative(std::span<const double> probs) {
  std::vector<double> cdf(probs.size());
  double run = 0.0;
  for (std::size_t k = 0; k < probs.size(); ++k) {
    run += std::max(probs[k], 0.0);
    cdf[k] = run;
  }
  return cdf;
}

}  // namespace

std::vector<std::uint64_t> draw_counts(std::span<const double> probs,
                                       std::uint64_t shots, std::uint64_t seed) {
  const std::vector<double> cdf = cumulative(probs);
  const std::uint64_t streams = (shots + kShotsPerStream - 1) / kShotsPerStream;
  std::vector<std::uint64_t> counts(probs.size(), 0);

#pragma omp parallel if (streams > 1)
  {
    std::vector<std::uint64_t> local(probs.size(), 0);
#pragma omp for schedule(static)
    for (std::int64_t s = 0; s < static_cast<std::int64_t>(streams); ++s) {
      const auto stream = static_cast<std::uint64_t>(s);
      const std::uint64_t begin = stream * kShotsPerStream;
      const std::uint64_t end = std::min(shots, begin + kShotsPerStream);
      std::mt19937_64 gen(stream_seed(seed, stream));
      for (std::uint64_t shot = begin; shot < end; ++shot) {
        ++local[pick_outcome(cdf, to_unit_interval(gen()))];
      }
    }
#pragma omp critical
    for (std::size_t k = 0; k < local.size(); ++k) counts[k] += local[k];
  }
  return counts;
}

}  // namespace qclsim::kernels
