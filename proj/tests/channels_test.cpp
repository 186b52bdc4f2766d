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

#include "qclsim/channels.hpp"

#include <gtest/gtest.h>

#include <array>
#include <numbers>

#include "qclsim/errors.hpp"
#include "random_quantum.hpp"

namespace qclsim {
namespace {

// Spanning set of 1-qubit density operators: |0>, |1>, |+>, |+i>.
std::vector<DensityOperator> spanning_set() {
  const double s = 1.0 / std::numbers::sqrt2;
  return {DensityOperator::basis_state(1, 0), DensityOperator::basis_state(1, 1),
          pure_to_density(QuRegister::qubit(s, s)),
          pure_to_density(QuRegister::qubit(s, Complex(0.0, s)))};
}

const std::array<std::size_t, 1> kQ0 = {0};

TEST(BuiltinGate, RosterIsUnitary) {
  for (const char* name : {"I", "Not", "CNot", "Toffoli", "H", "SqrtNot", "id", "sqrtnot"}) {
    const Gate g = builtin_gate(name);
    EXPECT_TRUE(is_unitary(g.matrix)) << name;
    EXPECT_EQ(g.matrix.dim(), std::size_t{1} << g.arity) << name;
  }
  EXPECT_THROW(builtin_gate("swap"), std::invalid_argument);
}

TEST(BuiltinGate, Examples) {
  const Gate sqrt_not = builtin_gate("SqrtNot");
  EXPECT_LE(max_norm_diff(matmul(sqrt_not.matrix, sqrt_not.matrix), builtin_gate("Not").matrix), 1e-12);
  const Gate h = builtin_gate("H");
  EXPECT_LE(max_norm_diff(matmul(h.matrix, h.matrix), ComplexMatrix::identity(2)), 1e-12);
  // Toffoli |110> = |111>: column 6 has its 1 in row 7.
  const Gate t = builtin_gate("Toffoli");
  EXPECT_EQ(t.matrix(7, 6), Complex(1.0));
  EXPECT_EQ(t.matrix(6, 6), Complex(0.0));
}

TEST(LiftUnitary, NotFlipsTheQubit) {
  const QuantumOperation op = lift_unitary(builtin_gate("Not"), 1, kQ0);
  EXPECT_EQ(apply(op, DensityOperator::basis_state(1, 0)).matrix(),
            DensityOperator::basis_state(1, 1).matrix());
}

TEST(LiftUnitary, HadamardTwiceOnTheMiddleQubit) {
  const std::array<std::size_t, 1> middle = {1};
  const QuantumOperation op = lift_unitary(builtin_gate("H"), 3, middle);
  const DensityOperator start = DensityOperator::basis_state(3, 0);
  EXPECT_LE(max_norm_diff(apply(op, apply(op, start)).matrix(), start.matrix()), 1e-12);
  EXPECT_TRUE(is_unitary(op.kraus().front()));
}

TEST(LiftUnitary, ControlsComeFirst) {
  // CNot with control 2 and target 0 on |001> gives |101>.
  const std::array<std::size_t, 2> targets = {2, 0};
  const QuantumOperation op = lift_unitary(builtin_gate("CNot"), 3, targets);
  EXPECT_EQ(apply(op, DensityOperator::basis_state(3, 0b001)).matrix(),
            DensityOperator::basis_state(3, 0b101).matrix());
}

TEST(LiftUnitary, RejectsBadTargets) {
  const std::array<std::size_t, 2> repeated = {0, 0};
  EXPECT_THROW(lift_unitary(builtin_gate("CNot"), 2, repeated), IndexError);
  const std::array<std::size_t, 1> out_of_range = {3};
  EXPECT_THROW(lift_unitary(builtin_gate("H"), 2, out_of_range), IndexError);
  EXPECT_THROW(lift_unitary(builtin_gate("CNot"), 2, kQ0), DimensionError);
}

TEST(LiftUnitary, PreservesPurity) {
  testing::Rng rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const DensityOperator rho = testing::random_density(3, rng);
    const std::array<std::size_t, 2> targets = {static_cast<std::size_t>(trial % 3),
                                                static_cast<std::size_t>((trial + 1) % 3)};
    const DensityOperator out = apply(lift_unitary(builtin_gate("CNot"), 3, targets), rho);
    EXPECT_NEAR(out.purity(), rho.purity(), 1e-10);
  }
}

TEST(Apply, Examples) {
  testing::Rng rng(32);
  const DensityOperator rho = testing::random_density(2, rng);
  EXPECT_LE(max_norm_diff(apply(QuantumOperation::identity(2), rho).matrix(), rho.matrix()), 1e-15);
  const DensityOperator plus = apply(lift_unitary(builtin_gate("H"), 1, kQ0), DensityOperator::basis_state(1, 0));
  EXPECT_LE(max_norm_diff(plus.matrix(), ComplexMatrix{{0.5, 0.5}, {0.5, 0.5}}), 1e-12);
  EXPECT_THROW(apply(QuantumOperation::identity(1), rho), DimensionError);
}

TEST(Apply, RandomChannelsPreserveTrace) {
  testing::Rng rng(33);
  for (int trial = 0; trial < 20; ++trial) {
    // Random channel from a Stiefel isometry V (dim 3*4 x 4), sliced into three Kraus blocks.
    const Eigen::MatrixXcd u = testing::random_unitary_eigen(12, rng);
    std::vector<ComplexMatrix> kraus;
    for (int k = 0; k < 3; ++k) kraus.push_back(testing::from_eigen(u.block(4 * k, 0, 4, 4)));
    const QuantumOperation op(2, kraus);
    const DensityOperator out = apply(op, testing::random_density(2, rng));
    EXPECT_NEAR(trace(out.matrix()).real(), 1.0, 1e-10);
  }
}

TEST(QuantumOperation, RejectsNonTracePreservingFamily) {
  EXPECT_THROW(QuantumOperation(1, {Complex(0.5) * ComplexMatrix::identity(2)}), InvariantError);
  EXPECT_THROW(QuantumOperation(1, {}), InvariantError);
}

TEST(MeasurementChannel, Examples) {
  const QuantumOperation m = measurement_channel(1, kQ0);
  const DensityOperator plus = spanning_set()[2];
  EXPECT_LE(max_norm_diff(apply(m, plus).matrix(), DensityOperator::maximally_mixed(1).matrix()), 1e-12);
  EXPECT_EQ(apply(m, DensityOperator::basis_state(1, 0)).matrix(),
            DensityOperator::basis_state(1, 0).matrix());
  const std::array<std::size_t, 0> none = {};
  EXPECT_THROW(measurement_channel(1, none), IndexError);
}

TEST(MeasurementChannel, KeepsTheDiagonalAndIsIdempotent) {
  testing::Rng rng(34);
  const std::array<std::size_t, 2> measured = {0, 2};
  const QuantumOperation m = measurement_channel(3, measured);
  for (int trial = 0; trial < 10; ++trial) {
    const DensityOperator rho = testing::random_density(3, rng);
    const DensityOperator once = apply(m, rho);
    for (std::size_t i = 0; i < 8; ++i) EXPECT_NEAR(std::abs(once.matrix()(i, i) - rho.matrix()(i, i)), 0.0, 1e-12);
    EXPECT_LE(max_norm_diff(apply(m, once).matrix(), once.matrix()), 1e-12);
    // Coherence between sectors that differ on a measured qubit is gone.
    EXPECT_NEAR(std::abs(once.matrix()(0b000, 0b100)), 0.0, 1e-15);
    // Coherence inside a sector survives.
    EXPECT_NEAR(std::abs(once.matrix()(0b000, 0b010) - rho.matrix()(0b000, 0b010)), 0.0, 1e-15);
  }
}

TEST(NoiseChannel, Examples) {
  testing::Rng rng(35);
  const DensityOperator rho = testing::random_density(1, rng);
  for (NoiseKind kind : {NoiseKind::kBitFlip, NoiseKind::kDepolarizing}) {
    EXPECT_LE(max_norm_diff(apply(noise_channel(kind, 0.0, 1, 0), rho).matrix(), rho.matrix()), 1e-15);
  }
  EXPECT_LE(max_norm_diff(apply(noise_channel(NoiseKind::kBitFlip, 1.0, 1, 0),
                                DensityOperator::basis_state(1, 0)).matrix(),
                          DensityOperator::basis_state(1, 1).matrix()),
            1e-15);
  for (int trial = 0; trial < 10; ++trial) {
    const DensityOperator sigma = testing::random_density(1, rng);
    EXPECT_LE(max_norm_diff(apply(noise_channel(NoiseKind::kDepolarizing, 1.0, 1, 0), sigma).matrix(),
                            DensityOperator::maximally_mixed(1).matrix()),
              1e-12);
  }
  EXPECT_THROW(noise_channel(NoiseKind::kBitFlip, 1.5, 1, 0), InvariantError);
  EXPECT_THROW(noise_channel(NoiseKind::kBitFlip, -0.1, 1, 0), InvariantError);
}

TEST(NoiseChannel, ParsesKindNames) {
  EXPECT_EQ(parse_noise_kind("bitflip"), NoiseKind::kBitFlip);
  EXPECT_EQ(parse_noise_kind("bit_flip"), NoiseKind::kBitFlip);
  EXPECT_EQ(parse_noise_kind("depolarizing"), NoiseKind::kDepolarizing);
  EXPECT_THROW(parse_noise_kind("dephasing"), std::invalid_argument);
}

TEST(Compose, InverseGatesGiveTheIdentityMap) {
  for (const char* name : {"Not", "H"}) {
    const QuantumOperation g = lift_unitary(builtin_gate(name), 1, kQ0);
    const std::vector<QuantumOperation> ops = {g, g};
    const QuantumOperation c = compose(ops);
    for (const DensityOperator& rho : spanning_set()) {
      EXPECT_LE(max_norm_diff(apply(c, rho).matrix(), rho.matrix()), 1e-12) << name;
    }
  }
}

TEST(Compose, SqrtNotTwiceIsNotAsAMap) {
  const QuantumOperation s = lift_unitary(builtin_gate("SqrtNot"), 1, kQ0);
  const QuantumOperation n = lift_unitary(builtin_gate("Not"), 1, kQ0);
  const std::vector<QuantumOperation> ops = {s, s};
  for (const DensityOperator& rho : spanning_set()) {
    EXPECT_LE(max_norm_diff(apply(compose(ops), rho).matrix(), apply(n, rho).matrix()), 1e-12);
  }
}

TEST(Compose, MatchesSequentialApplication) {
  testing::Rng rng(36);
  const std::array<std::size_t, 1> q1 = {1};
  const std::vector<QuantumOperation> ops = {
      lift_unitary(builtin_gate("H"), 2, kQ0), noise_channel(NoiseKind::kDepolarizing, 0.2, 2, 1),
      lift_unitary(builtin_gate("SqrtNot"), 2, q1), noise_channel(NoiseKind::kBitFlip, 0.1, 2, 0)};
  const QuantumOperation c = compose(ops);
  EXPECT_EQ(c.kraus().size(), 8u);
  for (int trial = 0; trial < 10; ++trial) {
    const DensityOperator rho = testing::random_density(2, rng);
    DensityOperator seq = rho;
    for (const QuantumOperation& op : ops) seq = apply(op, seq);
    EXPECT_LE(max_norm_diff(apply(c, rho).matrix(), seq.matrix()), 1e-12);
  }
  const std::vector<QuantumOperation> mismatch = {QuantumOperation::identity(1), QuantumOperation::identity(2)};
  EXPECT_THROW(compose(mismatch), DimensionError);
}

}  // namespace
}  // namespace qclsim
