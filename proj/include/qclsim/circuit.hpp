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

#ifndef QCLSIM_CIRCUIT_HPP_
#define QCLSIM_CIRCUIT_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qclsim/channels.hpp"
#include "qclsim/quantum_state.hpp"

namespace qclsim {

struct GateStep {
  std::string gate;  // DSL spelling: id, not, h, sqrtnot, cnot, toffoli
  std::vector<std::size_t> targets;
  friend bool operator==(const GateStep&, const GateStep&) = default;
};

struct NoiseStep {
  NoiseKind kind;
  double p;
  std::size_t target;
  friend bool operator==(const NoiseStep&, const NoiseStep&) = default;
};

// `measure all` has all = true and an empty qubit list.
struct MeasureStep {
  bool all;
  std::vector<std::size_t> qubits;
  friend bool operator==(const MeasureStep&, const MeasureStep&) = default;
};

using Step = std::variant<GateStep, NoiseStep, MeasureStep>;

struct CircuitIr {
  std::size_t n_qubits = 1;
  std::vector<Step> steps;
  friend bool operator==(const CircuitIr&, const CircuitIr&) = default;
};

// Line-oriented DSL, `#` starts a comment:
//   qubits <n>
//   gate <id|not|h|sqrtnot|cnot|toffoli> <target>...
//   noise <bitflip|depolarizing> <p> <target>
//   measure all | measure <i> [<j>...]      (optional, last)
CircuitIr parse_circuit(std::string_view text);
std::string pretty_print(const CircuitIr& ir);

// Throws InvariantError/IndexError/DimensionError on a malformed IR.
void validate(const CircuitIr& ir);

// Qubits whose outcomes are reported: the MeasureStep's set in ascending
// order, or every qubit when the circuit has no MeasureStep.
std::vector<std::size_t> measured_qubits(const CircuitIr& ir);

// New IR with `noise <kind> <p> <t>` after every gate step, once per target.
CircuitIr inject_noise(const CircuitIr& ir, NoiseKind kind, double p);

// Runs every step on `input` (default |0...0>) and returns the exact output.
DensityOperator simulate(const CircuitIr& ir,
                         const std::optional<DensityOperator>& input = std::nullopt);

using Distribution = std::map<std::string, double>;

// Diagonal of rho keyed by big-endian bit labels. Entries at or below
// kArithmeticTol are treated as numerical zeros and omitted.
Distribution outcome_distribution(const DensityOperator& rho);

// Marginal over `qubits` (labels list them in the given order).
Distribution marginal_distribution(const DensityOperator& rho,
                                   const std::vector<std::size_t>& qubits);

struct Histogram {
  std::uint64_t shots = 0;
  std::uint64_t seed = 0;
  std::map<std::string, std::uint64_t> counts;
  friend bool operator==(const Histogram&, const Histogram&) = default;
};

// Draws `shots` outcomes of the measured qubits from the exact output
// distribution with the seeded stream generator in kernels::draw_counts.
Histogram sample(const CircuitIr& ir, std::uint64_t shots, std::uint64_t seed);
Histogram sample_distribution(const Distribution& dist, std::uint64_t shots,
                              std::uint64_t seed);

}  // namespace qclsim

#endif  // QCLSIM_CIRCUIT_HPP_
