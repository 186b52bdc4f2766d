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

#ifndef QCLSIM_CHANNELS_HPP_
#define QCLSIM_CHANNELS_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qclsim/linalg.hpp"
#include "qclsim/quantum_state.hpp"

namespace qclsim {

// Named unitary on `arity` qubits.
struct Gate {
  std::string name;
  std::size_t arity;
  ComplexMatrix matrix;
};

// Roster: I, Not, CNot, Toffoli, H, SqrtNot. Lookup is case-insensitive
// and also accepts the DSL spellings id, not, cnot, toffoli, h, sqrtnot.
// CNot and Toffoli take their controls first and the negated qubit last.
Gate builtin_gate(std::string_view name);
bool is_builtin_gate(std::string_view name);

ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();

// Trace-preserving Kraus family {A_i} with sum A_i^dagger A_i = I.
class QuantumOperation {
 public:
  QuantumOperation(std::size_t n_qubits, std::vector<ComplexMatrix> kraus,
                   double tol = kStructuralTol);

  static QuantumOperation identity(std::size_t n_qubits);

  std::size_t n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return std::size_t{1} << n_qubits_; }
  const std::vector<ComplexMatrix>& kraus() const { return kraus_; }

 private:
  std::size_t n_qubits_;
  std::vector<ComplexMatrix> kraus_;
};

// Embeds a k-qubit matrix on `targets` of an n-qubit register, identity
// elsewhere. targets[0] maps to the most significant bit of the local index.
ComplexMatrix embed(const ComplexMatrix& local, std::size_t n_qubits,
                    std::span<const std::size_t> targets);

QuantumOperation lift_unitary(const Gate& gate, std::size_t n_qubits,
                              std::span<const std::size_t> targets);

// sum_i A_i rho A_i^dagger, validated as a density operator.
DensityOperator apply(const QuantumOperation& op, const DensityOperator& rho);

// Computational-basis projectors on `measured`, one Kraus element per
// outcome pattern.
QuantumOperation measurement_channel(std::size_t n_qubits,
                                     std::span<const std::size_t> measured);

enum class NoiseKind { kBitFlip, kDepolarizing };

std::string_view to_string(NoiseKind kind);
// Accepts "bitflip", "bit_flip", "depolarizing".
NoiseKind parse_noise_kind(std::string_view text);

// bit flip:      { sqrt(1-p) I, sqrt(p) X }
// depolarizing:  { sqrt(1-3p/4) I, sqrt(p/4) X, sqrt(p/4) Y, sqrt(p/4) Z }
QuantumOperation noise_channel(NoiseKind kind, double p, std::size_t n_qubits,
                               std::size_t target);

// ops[0] acts first. Keeps every ordered product of Kraus elements.
QuantumOperation compose(std::span<const QuantumOperation> ops);

}  // namespace qclsim

#endif  // QCLSIM_CHANNELS_HPP_
