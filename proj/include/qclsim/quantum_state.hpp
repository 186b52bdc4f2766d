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

#ifndef QCLSIM_QUANTUM_STATE_HPP_
#define QCLSIM_QUANTUM_STATE_HPP_

#include <cstddef>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "qclsim/linalg.hpp"

namespace qclsim {

// Unit vector in the n-qubit space. Construction rejects the zero vector,
// silently renormalizes when | ||v||^2 - 1 | <= tol, and rejects anything
// further from unit norm.
class QuRegister {
 public:
  explicit QuRegister(std::vector<Complex> amplitudes,
                      double tol = kStructuralTol);

  // Computational basis vector |index>.
  static QuRegister basis(std::size_t n_qubits, std::size_t index);
  // Basis vector from a big-endian bit label such as "010".
  static QuRegister from_bits(std::string_view bits);
  // c0|0> + c1|1>
  static QuRegister qubit(Complex c0, Complex c1, double tol = kStructuralTol);

  std::size_t n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return amplitudes_.size(); }
  std::span<const Complex> amplitudes() const { return amplitudes_; }
  const Complex& operator[](std::size_t i) const { return amplitudes_[i]; }

 private:
  std::size_t n_qubits_;
  std::vector<Complex> amplitudes_;
};

// <a|b>
Complex inner(const QuRegister& a, const QuRegister& b);

// Hermitian, PSD, unit-trace operator on 2^n dimensions.
class DensityOperator {
 public:
  // Validates all three invariants within `tol`.
  explicit DensityOperator(ComplexMatrix matrix, double tol = kStructuralTol);

  static DensityOperator maximally_mixed(std::size_t n_qubits);
  static DensityOperator basis_state(std::size_t n_qubits, std::size_t index);

  std::size_t n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return matrix_.dim(); }
  const ComplexMatrix& matrix() const { return matrix_; }

  // Tr(rho^2)
  double purity() const;
  bool is_pure(double tol = kStructuralTol) const;

 private:
  std::size_t n_qubits_;
  ComplexMatrix matrix_;
};

// rho (x) sigma, with rho on the leading qubits.
DensityOperator tensor(const DensityOperator& rho, const DensityOperator& sigma);

// Hermitian idempotent on 2^n dimensions.
class Projector {
 public:
  explicit Projector(ComplexMatrix matrix, double tol = kStructuralTol);

  static Projector identity(std::size_t n_qubits);
  static Projector zero(std::size_t n_qubits);
  // |psi><psi|
  static Projector rank_one(const QuRegister& psi);

  std::size_t n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return matrix_.dim(); }
  const ComplexMatrix& matrix() const { return matrix_; }
  // Tr(P), rounded to the nearest integer.
  std::size_t rank() const;

 private:
  std::size_t n_qubits_;
  ComplexMatrix matrix_;
};

// Orthonormal basis {|e_i>} of the register space; outcome i has
// probability |<e_i|psi>|^2.
class MaximalTest {
 public:
  explicit MaximalTest(std::vector<QuRegister> basis,
                       double tol = kStructuralTol);

  static MaximalTest computational(std::size_t n_qubits);

  std::size_t n_outcomes() const { return basis_.size(); }
  const std::vector<QuRegister>& basis() const { return basis_; }

 private:
  std::vector<QuRegister> basis_;
};

DensityOperator pure_to_density(const QuRegister& psi);

// sum_i w_i rho_i; weights non-negative and summing to 1 within `tol`.
DensityOperator mix(std::span<const std::pair<double, DensityOperator>> states,
                    double tol = kStructuralTol);

double born_probability(const QuRegister& psi, const MaximalTest& test,
                        std::size_t outcome_index);

// Re Tr(rho P). Values in [-tol, 1+tol] are clamped into [0,1]; anything
// outside signals a broken upstream invariant and throws InvariantError.
double born_expectation(const DensityOperator& rho, const Projector& p,
                        double tol = kStructuralTol);

}  // namespace qclsim

#endif  // QCLSIM_QUANTUM_STATE_HPP_
