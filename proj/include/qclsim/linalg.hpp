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

#ifndef QCLSIM_LINALG_HPP_
#define QCLSIM_LINALG_HPP_

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace qclsim {

using Complex = std::complex<double>;

// Default tolerances. Structural checks (hermitian, PSD, unit trace) use
// kStructuralTol; exact algebraic identities are tested at kArithmeticTol.
inline constexpr double kStructuralTol = 1e-10;
inline constexpr double kArithmeticTol = 1e-12;

// Largest operator dimension the artifact accepts (2^10).
inline constexpr std::size_t kMaxDim = std::size_t{1} << 10;

// Dense square complex matrix, row-major. Basis index i of an n-qubit
// operator encodes |x_0 x_1 ... x_{n-1}> with qubit 0 as the most
// significant bit.
class ComplexMatrix {
 public:
  ComplexMatrix() : ComplexMatrix(1) {}
  explicit ComplexMatrix(std::size_t dim);
  ComplexMatrix(std::size_t dim, std::vector<Complex> entries);
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix zero(std::size_t dim) { return ComplexMatrix(dim); }
  static ComplexMatrix diagonal(std::span<const Complex> diag);
  // |v><w|
  static ComplexMatrix outer(std::span<const Complex> v,
                             std::span<const Complex> w);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return entries_.size(); }

  Complex& operator()(std::size_t row, std::size_t col) {
    return entries_[row * dim_ + col];
  }
  const Complex& operator()(std::size_t row, std::size_t col) const {
    return entries_[row * dim_ + col];
  }

  std::span<Complex> data() { return entries_; }
  std::span<const Complex> data() const { return entries_; }

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scale);

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t dim_;
  std::vector<Complex> entries_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex scale, ComplexMatrix a);

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix dagger(const ComplexMatrix& a);
// Kronecker product; `a` occupies the more significant index positions.
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix tensor(std::span<const ComplexMatrix> factors);
Complex trace(const ComplexMatrix& a);

// Traces out the listed qubit positions of an n-qubit operator. The
// surviving qubits keep their relative order.
ComplexMatrix partial_trace(const ComplexMatrix& a, std::size_t n_qubits,
                            std::span<const std::size_t> traced);

// max_ij |a_ij - b_ij|
double max_norm_diff(const ComplexMatrix& a, const ComplexMatrix& b);

bool is_hermitian(const ComplexMatrix& a, double tol = kStructuralTol);
// Throws InvariantError when `a` is not hermitian within `tol`.
bool is_psd(const ComplexMatrix& a, double tol = kStructuralTol);
bool is_projector(const ComplexMatrix& a, double tol = kStructuralTol);
bool is_unitary(const ComplexMatrix& a, double tol = kStructuralTol);

// Ascending eigenvalues of a hermitian matrix. Only the lower triangle is
// read; callers are expected to have checked hermiticity.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& a);

// Number of qubits n with 2^n == dim; throws DimensionError otherwise.
std::size_t qubit_count(std::size_t dim);

}  // namespace qclsim

#endif  // QCLSIM_LINALG_HPP_
