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

#include "qclsim/quantum_state.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qclsim/errors.hpp"

namespace qclsim {

QuRegister::QuRegister(std::vector<Complex> amplitudes, double tol)
    : amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.empty()) throw DimensionError("QuRegister: no amplitudes");
  if (amplitudes_.size() > kMaxDim) throw DimensionError("QuRegister: too many qubits");
  n_qubits_ = qubit_count(amplitudes_.size());
  double norm2 = 0.0;
  for (const Complex& c : amplitudes_) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      throw InvariantError("QuRegister: non-finite amplitude");
    }
    norm2 += std::norm(c);
  }
  if (norm2 == 0.0) throw InvariantError("QuRegister: zero vector");
  if (std::abs(norm2 - 1.0) > tol) {
    throw InvariantError("QuRegister: squared norm " + std::to_string(norm2) +
                         " is not 1");
  }
  const double scale = 1.0 / std::sqrt(norm2);
  for (Complex& c : amplitudes_) c *= scale;
}

QuRegister QuRegister::basis(std::size_t n_qubits, std::size_t index) {
  const std::size_t dim = std::size_t{1} << n_qubits;
  if (index >= dim) {
    throw IndexError("QuRegister::basis: index " + std::to_string(index) +
                     " out of range");
  }
  std::vector<Complex> amps(dim);
  amps[index] = 1.0;
  return QuRegister(std::move(amps));
}

QuRegister QuRegister::from_bits(std::string_view bits) {
  if (bits.empty()) throw DimensionError("QuRegister::from_bits: empty label");
  std::size_t index = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') {
      throw InvariantError("QuRegister::from_bits: bad character in label");
    }
    index = (index << 1) | static_cast<std::size_t>(c - '0');
  }
  return basis(bits.size(), index);
}

QuRegister QuRegister::qubit(Complex c0, Complex c1, double tol) {
  return QuRegister({c0, c1}, tol);
}

Complex inner(const QuRegister& a, const QuRegister& b) {
  if (a.dim() != b.dim()) throw DimensionError("inner: dimension mismatch");
  Complex sum = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) sum += std::conj(a[i]) * b[i];
  return sum;
}

DensityOperator::DensityOperator(ComplexMatrix matrix, double tol)
    : n_qubits_(qubit_count(matrix.dim())), matrix_(std::move(matrix)) {
  if (!is_hermitian(matrix_, tol)) {
    throw InvariantError("DensityOperator: matrix is not hermitian");
  }
  const Complex tr = trace(matrix_);
  if (std::abs(tr - Complex(1.0)) > tol) {
    throw InvariantError("DensityOperator: trace " + std::to_string(tr.real()) +
                         " is not 1");
  }
  if (!is_psd(matrix_, tol)) {
    throw InvariantError("DensityOperator: matrix is not positive semidefinite");
  }
}

DensityOperator DensityOperator::maximally_mixed(std::size_t n_qubits) {
  const std::size_t dim = std::size_t{1} << n_qubits;
  return DensityOperator(Complex(1.0 / static_cast<double>(dim)) *
                         ComplexMatrix::identity(dim));
}

DensityOperator DensityOperator::basis_state(std::size_t n_qubits,
                                             std::size_t index) {
  return pure_to_density(QuRegister::basis(n_qubits, index));
}

double DensityOperator::purity() const {
  // Tr(rho^2) = sum_ij |rho_ij|^2 for hermitian rho.
  double sum = 0.0;
  for (const Complex& z : matrix_.data()) sum += std::norm(z);
  return sum;
}

bool DensityOperator::is_pure(double tol) const {
  return std::abs(purity() - 1.0) <= tol;
}

DensityOperator tensor(const DensityOperator& rho, const DensityOperator& sigma) {
  return DensityOperator(tensor(rho.matrix(), sigma.matrix()));
}

Projector::Projector(ComplexMatrix matrix, double tol)
    : n_qubits_(qubit_count(matrix.dim())), matrix_(std::move(matrix)) {
  if (!is_projector(matrix_, tol)) {
    throw InvariantError("Projector: matrix is not a hermitian idempotent");
  }
}

Projector Projector::identity(std::size_t n_qubits) {
  return Projector(ComplexMatrix::identity(std::size_t{1} << n_qubits));
}

Projector Projector::zero(std::size_t n_qubits) {
  return Projector(ComplexMatrix::zero(std::size_t{1} << n_qubits));
}

Projector Projector::rank_one(const QuRegister& psi) {
  return Projector(ComplexMatrix::outer(psi.amplitudes(), psi.amplitudes()));
}

std::size_t Projector::rank() const {
  return static_cast<std::size_t>(std::llround(trace(matrix_).real()));
}

MaximalTest::MaximalTest(std::vector<QuRegister> basis, double tol)
    : basis_(std::move(basis)) {
  if (basis_.empty()) throw DimensionError("MaximalTest: empty basis");
  const std::size_t dim = basis_.front().dim();
  if (basis_.size() != dim) {
    throw DimensionError("MaximalTest: " + std::to_string(basis_.size()) +
                         " vectors do not span dimension " + std::to_string(dim));
  }
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (basis_[i].dim() != dim) throw DimensionError("MaximalTest: mixed dimensions");
    for (std::size_t j = i; j < basis_.size(); ++j) {
      const double expected = i == j ? 1.0 : 0.0;
      if (std::abs(inner(basis_[i], basis_[j]) - expected) > tol) {
        throw InvariantError("MaximalTest: basis is not orthonormal");
      }
    }
  }
}

MaximalTest MaximalTest::computational(std::size_t n_qubits) {
  std::vector<QuRegister> basis;
  for (std::size_t i = 0; i < (std::size_t{1} << n_qubits); ++i) {
    basis.push_back(QuRegister::basis(n_qubits, i));
  }
  return MaximalTest(std::move(basis));
}

DensityOperator pure_to_density(const QuRegister& psi) {
  return DensityOperator(ComplexMatrix::outer(psi.amplitudes(), psi.amplitudes()));
}

DensityOperator mix(std::span<const std::pair<double, DensityOperator>> states,
                    double tol) {
  if (states.empty()) throw DimensionError("mix: no states");
  const std::size_t dim = states.front().second.dim();
  double total = 0.0;
  ComplexMatrix sum(dim);
  for (const auto& [weight, rho] : states) {
    if (rho.dim() != dim) throw DimensionError("mix: dimension mismatch");
    if (weight < 0.0) throw InvariantError("mix: negative weight");
    total += weight;
    sum += Complex(weight) * rho.matrix();
  }
  if (std::abs(total - 1.0) > tol) {
    throw InvariantError("mix: weights sum to " + std::to_string(total));
  }
  return DensityOperator(std::move(sum), tol);
}

double born_probability(const QuRegister& psi, const MaximalTest& test,
                        std::size_t outcome_index) {
  if (outcome_index >= test.n_outcomes()) {
    throw IndexError("born_probability: outcome " + std::to_string(outcome_index) +
                     " out of range");
  }
  return std::norm(inner(test.basis()[outcome_index], psi));
}

double born_expectation(const DensityOperator& rho, const Projector& p, double tol) {
  if (rho.dim() != p.dim()) throw DimensionError("born_expectation: dimension mismatch");
  // Tr(rho P) = sum_ij rho_ij P_ji
  const std::size_t dim = rho.dim();
  double value = 0.0;
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      value += (rho.matrix()(i, j) * p.matrix()(j, i)).real();
    }
  }
  if (value < -tol || value > 1.0 + tol) {
    throw InvariantError("born_expectation: value " + std::to_string(value) +
                         " outside [0,1]");
  }
  return std::clamp(value, 0.0, 1.0);
}

}  // namespace qclsim
