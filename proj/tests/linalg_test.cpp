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

#include "qclsim/linalg.hpp"

#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <numbers>

#include "qclsim/errors.hpp"
#include "random_quantum.hpp"

namespace qclsim {
namespace {

const double kS = 1.0 / std::numbers::sqrt2;
const ComplexMatrix kI2 = ComplexMatrix::identity(2);
const ComplexMatrix kX{{0.0, 1.0}, {1.0, 0.0}};
const ComplexMatrix kH{{kS, kS}, {kS, -kS}};
const ComplexMatrix kSqrtNot{{Complex(0.5, 0.5), Complex(0.5, -0.5)},
                             {Complex(0.5, -0.5), Complex(0.5, 0.5)}};
const ComplexMatrix kKet0{{1.0, 0.0}, {0.0, 0.0}};
const ComplexMatrix kKet1{{0.0, 0.0}, {0.0, 1.0}};

TEST(Linalg, MatmulExamples) {
  EXPECT_EQ(matmul(kI2, kX), kX);
  EXPECT_EQ(matmul(kX, kX), kI2);
  EXPECT_LE(max_norm_diff(matmul(kH, kH), kI2), 1e-12);
}

TEST(Linalg, MatmulDimensionMismatch) {
  EXPECT_THROW(matmul(kI2, ComplexMatrix::identity(4)), DimensionError);
}

TEST(Linalg, DaggerExamples) {
  EXPECT_EQ(dagger(kI2), kI2);
  const ComplexMatrix a{{0.0, Complex(0, 1)}, {0.0, 0.0}};
  const ComplexMatrix expected{{0.0, 0.0}, {Complex(0, -1), 0.0}};
  EXPECT_EQ(dagger(a), expected);
  EXPECT_LE(max_norm_diff(matmul(dagger(kSqrtNot), kSqrtNot), kI2), 1e-12);
}

TEST(Linalg, DaggerIsAnInvolution) {
  testing::Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const ComplexMatrix a = testing::random_matrix(8, rng);
    EXPECT_EQ(dagger(dagger(a)), a);
  }
}

TEST(Linalg, TensorExamples) {
  EXPECT_EQ(tensor(kI2, kI2), ComplexMatrix::identity(4));
  // Left factor on the high bit: |0><0| (x) |1><1| = |01><01| = diag(0,1,0,0).
  const std::array<Complex, 4> diag = {0.0, 1.0, 0.0, 0.0};
  EXPECT_EQ(tensor(kKet0, kKet1), ComplexMatrix::diagonal(diag));
}

TEST(Linalg, TensorTraceFactorizes) {
  testing::Rng rng(12);
  for (int trial = 0; trial < 50; ++trial) {
    const ComplexMatrix a = testing::random_matrix(2, rng);
    const ComplexMatrix b = testing::random_matrix(2, rng);
    EXPECT_LE(std::abs(trace(tensor(a, b)) - trace(a) * trace(b)), 1e-12);
  }
}

TEST(Linalg, TensorIsAssociativeExactly) {
  testing::Rng rng(13);
  for (int trial = 0; trial < 10; ++trial) {
    // Small integer entries keep every product exact.
    std::uniform_int_distribution<int> digit(-3, 3);
    auto small = [&](std::size_t dim) {
      ComplexMatrix m(dim);
      for (Complex& z : m.data()) z = {static_cast<double>(digit(rng)), static_cast<double>(digit(rng))};
      return m;
    };
    const ComplexMatrix a = small(2), b = small(4), c = small(2);
    EXPECT_EQ(tensor(tensor(a, b), c), tensor(a, tensor(b, c)));
  }
}

TEST(Linalg, TraceExamples) {
  EXPECT_EQ(trace(ComplexMatrix::identity(4)), Complex(4.0));
  EXPECT_EQ(trace(kKet0), Complex(1.0));
}

TEST(Linalg, TraceIsCyclic) {
  testing::Rng rng(14);
  for (std::size_t dim : {4u, 8u}) {
    for (int trial = 0; trial < 25; ++trial) {
      const ComplexMatrix a = testing::random_matrix(dim, rng);
      const ComplexMatrix b = testing::random_matrix(dim, rng);
      EXPECT_LE(std::abs(trace(matmul(a, b)) - trace(matmul(b, a))), 1e-12);
    }
  }
}

TEST(Linalg, PartialTraceOfProductState) {
  testing::Rng rng(15);
  for (int trial = 0; trial < 10; ++trial) {
    const DensityOperator rho = testing::random_density(1, rng);
    const DensityOperator sigma = testing::random_density(1, rng);
    const std::array<std::size_t, 1> second = {1};
    const std::array<std::size_t, 1> first = {0};
    const ComplexMatrix joint = tensor(rho.matrix(), sigma.matrix());
    EXPECT_LE(max_norm_diff(partial_trace(joint, 2, second), rho.matrix()), 1e-12);
    EXPECT_LE(max_norm_diff(partial_trace(joint, 2, first), sigma.matrix()), 1e-12);
  }
}

TEST(Linalg, PartialTraceOfBellStateIsMaximallyMixed) {
  // (|00>+|11>)/sqrt2 as a 4x4 matrix: 1/2 at the four corners {0,3}x{0,3}.
  ComplexMatrix bell(4);
  bell(0, 0) = bell(0, 3) = bell(3, 0) = bell(3, 3) = 0.5;
  const std::array<std::size_t, 1> traced = {1};
  EXPECT_LE(max_norm_diff(partial_trace(bell, 2, traced), Complex(0.5) * kI2), 1e-12);
}

TEST(Linalg, PartialTraceKeepsTheMiddleQubitInOrder) {
  // |0> (x) |1> (x) |+>: tracing qubits 0 and 2 leaves |1><1|.
  const ComplexMatrix plus = Complex(0.5) * ComplexMatrix{{1.0, 1.0}, {1.0, 1.0}};
  const ComplexMatrix joint = tensor(tensor(kKet0, kKet1), plus);
  const std::array<std::size_t, 2> traced = {0, 2};
  EXPECT_LE(max_norm_diff(partial_trace(joint, 3, traced), kKet1), 1e-12);
}

TEST(Linalg, PartialTracePreservesTrace) {
  testing::Rng rng(16);
  const std::vector<std::vector<std::size_t>> subsets = {{0}, {2}, {0, 1}, {1, 2}, {0, 2}};
  for (const auto& subset : subsets) {
    const ComplexMatrix a = testing::random_matrix(8, rng);
    EXPECT_LE(std::abs(trace(partial_trace(a, 3, subset)) - trace(a)), 1e-12);
  }
}

TEST(Linalg, PartialTraceOverEverythingIsTheTrace) {
  testing::Rng rng(17);
  const ComplexMatrix a = testing::random_matrix(8, rng);
  const std::array<std::size_t, 3> all = {0, 1, 2};
  const ComplexMatrix t = partial_trace(a, 3, all);
  ASSERT_EQ(t.dim(), 1u);
  EXPECT_LE(std::abs(t(0, 0) - trace(a)), 1e-12);
}

TEST(Linalg, PartialTraceRejectsBadIndices) {
  const std::array<std::size_t, 1> bad = {2};
  EXPECT_THROW(partial_trace(ComplexMatrix::identity(4), 2, bad), IndexError);
  const std::array<std::size_t, 1> ok = {0};
  EXPECT_THROW(partial_trace(ComplexMatrix::identity(4), 3, ok), DimensionError);
}

TEST(Linalg, HermitianPredicate) {
  EXPECT_TRUE(is_hermitian(kH, 1e-12));
  EXPECT_FALSE(is_hermitian(ComplexMatrix{{0.0, 1.0}, {0.0, 0.0}}, 1e-12));
  EXPECT_FALSE(is_hermitian(kSqrtNot, 1e-12));
}

TEST(Linalg, PsdPredicate) {
  EXPECT_TRUE(is_psd(kKet0, 1e-10));
  EXPECT_FALSE(is_psd(ComplexMatrix{{1.0, 0.0}, {0.0, -0.5}}, 1e-10));
  EXPECT_TRUE(is_psd(Complex(0.5) * kI2, 1e-10));
  EXPECT_THROW(is_psd(kSqrtNot, 1e-10), InvariantError);
}

TEST(Linalg, ProjectorPredicate) {
  EXPECT_TRUE(is_projector(kI2, 1e-12));
  EXPECT_FALSE(is_projector(kH, 1e-12));
  const ComplexMatrix plus = Complex(0.5) * ComplexMatrix{{1.0, 1.0}, {1.0, 1.0}};
  EXPECT_TRUE(is_projector(plus, 1e-12));
}

TEST(Linalg, UnitaryPredicate) {
  EXPECT_TRUE(is_unitary(kH, 1e-12));
  EXPECT_TRUE(is_unitary(kSqrtNot, 1e-12));
  EXPECT_FALSE(is_unitary(kKet0, 1e-12));
}

TEST(Linalg, ProjectorsArePsdWithBinarySpectrum) {
  testing::Rng rng(18);
  for (std::size_t dim : {2u, 4u, 8u}) {
    for (const Projector& p : testing::random_orthogonal_family(dim, 2, rng)) {
      ASSERT_TRUE(is_projector(p.matrix()));
      EXPECT_TRUE(is_psd(p.matrix()));
      for (double v : hermitian_eigenvalues(p.matrix())) {
        EXPECT_TRUE(std::abs(v) <= 1e-10 || std::abs(v - 1.0) <= 1e-10) << v;
      }
    }
  }
}

TEST(Linalg, RejectsNonFiniteEntries) {
  std::vector<Complex> entries = {1.0, 0.0, 0.0, Complex(std::nan(""), 0.0)};
  EXPECT_THROW(ComplexMatrix(2, entries), InvariantError);
}

TEST(Linalg, QubitCount) {
  EXPECT_EQ(qubit_count(1), 0u);
  EXPECT_EQ(qubit_count(32), 5u);
  EXPECT_THROW(qubit_count(6), DimensionError);
}

}  // namespace
}  // namespace qclsim
