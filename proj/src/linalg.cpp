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

#include <Eigen/Dense>
#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "qclsim/errors.hpp"
#include "qclsim/kernels.hpp"

namespace qclsim {

namespace {

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b,
                      const char* op) {
  if (a.dim() != b.dim()) {
    throw DimensionError(std::string(op) + ": dimension mismatch (" +
                         std::to_string(a.dim()) + " vs " +
                         std::to_string(b.dim()) + ")");
  }
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t dim)
    : dim_(dim), entries_(dim * dim) {
  if (dim == 0) throw DimensionError("ComplexMatrix: dimension must be >= 1");
}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), entries_(std::move(entries)) {
  if (dim == 0) throw DimensionError("ComplexMatrix: dimension must be >= 1");
  if (entries_.size() != dim * dim) {
    throw DimensionError("ComplexMatrix: expected " +
                         std::to_string(dim * dim) + " entries, got " +
                         std::to_string(entries_.size()));
  }
  for (const Complex& z : entries_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw InvariantError("ComplexMatrix: non-finite entry");
    }
  }
}

ComplexMatrix::ComplexMatrix(
    std::initializer_list<std::initializer_list<Complex>> rows)
    : dim_(rows.size()) {
  if (dim_ == 0) throw DimensionError("ComplexMatrix: empty initializer");
  entries_.reserve(dim_ * dim_);
  for (const auto& row : rows) {
    if (row.size() != dim_) throw DimensionError("ComplexMatrix: not square");
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> diag) {
  ComplexMatrix m(diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

ComplexMatrix ComplexMatrix::outer(std::span<const Complex> v,
                                   std::span<const Complex> w) {
  if (v.size() != w.size()) throw DimensionError("outer: length mismatch");
  ComplexMatrix m(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = 0; j < w.size(); ++j) m(i, j) = v[i] * std::conj(w[j]);
  }
  return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  require_same_dim(*this, other, "operator+");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += other.entries_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  require_same_dim(*this, other, "operator-");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= other.entries_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scale) {
  for (Complex& z : entries_) z *= scale;
  return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
ComplexMatrix operator*(Complex scale, ComplexMatrix a) { return a *= scale; }

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "matmul");
  ComplexMatrix out(a.dim());
  kernels::matmul(a.data(), b.data(), out.data(), a.dim());
  return out;
}

ComplexMatrix dagger(const ComplexMatrix& a) {
  ComplexMatrix out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) out(j, i) = std::conj(a(i, j));
  }
  return out;
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t dim = a.dim() * b.dim();
  if (dim > kMaxDim) {
    throw DimensionError("tensor: result dimension " + std::to_string(dim) +
                         " exceeds " + std::to_string(kMaxDim));
  }
  ComplexMatrix out(dim);
  kernels::kron(a.data(), a.dim(), b.data(), b.dim(), out.data());
  return out;
}

ComplexMatrix tensor(std::span<const ComplexMatrix> factors) {
  if (factors.empty()) return ComplexMatrix::identity(1);
  ComplexMatrix out = factors.front();
  for (std::size_t k = 1; k < factors.size(); ++k) out = tensor(out, factors[k]);
  return out;
}

Complex trace(const ComplexMatrix& a) {
  Complex sum = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) sum += a(i, i);
  return sum;
}

ComplexMatrix partial_trace(const ComplexMatrix& a, std::size_t n_qubits,
                            std::span<const std::size_t> traced) {
  if (a.dim() != (std::size_t{1} << n_qubits)) {
    throw DimensionError("partial_trace: matrix dimension " +
                         std::to_string(a.dim()) + " is not 2^" +
                         std::to_string(n_qubits));
  }
  std::vector<bool> is_traced(n_qubits, false);
  for (std::size_t q : traced) {
    if (q >= n_qubits) {
      throw IndexError("partial_trace: qubit " + std::to_string(q) +
                       " out of range for " + std::to_string(n_qubits) +
                       " qubits");
    }
    is_traced[q] = true;
  }
  // Bit masks (in full-index positions) of kept and traced qubits, listed
  // most significant first so packing preserves relative order.
  std::vector<std::size_t> kept_bits, traced_bits;
  for (std::size_t q = 0; q < n_qubits; ++q) {
    const std::size_t bit = std::size_t{1} << (n_qubits - 1 - q);
    (is_traced[q] ? traced_bits : kept_bits).push_back(bit);
  }
  auto expand = [](std::size_t packed, const std::vector<std::size_t>& bits) {
    std::size_t full = 0;
    for (std::size_t k = 0; k < bits.size(); ++k) {
      if (packed & (std::size_t{1} << (bits.size() - 1 - k))) full |= bits[k];
    }
    return full;
  };

  const std::size_t kept_dim = std::size_t{1} << kept_bits.size();
  const std::size_t traced_dim = std::size_t{1} << traced_bits.size();
  ComplexMatrix out(kept_dim);
  for (std::size_t r = 0; r < kept_dim; ++r) {
    const std::size_t row_base = expand(r, kept_bits);
    for (std::size_t c = 0; c < kept_dim; ++c) {
      const std::size_t col_base = expand(c, kept_bits);
      Complex sum = 0.0;
      for (std::size_t t = 0; t < traced_dim; ++t) {
        const std::size_t env = expand(t, traced_bits);
        sum += a(row_base | env, col_base | env);
      }
      out(r, c) = sum;
    }
  }
  return out;
}

double max_norm_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "max_norm_diff");
  double worst = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    worst = std::max(worst, std::abs(a.data()[k] - b.data()[k]));
  }
  return worst;
}

bool is_hermitian(const ComplexMatrix& a, double tol) {
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = i; j < a.dim(); ++j) {
      if (std::abs(a(i, j) - std::conj(a(j, i))) > tol) return false;
    }
  }
  return true;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& a) {
  const auto n = static_cast<Eigen::Index>(a.dim());
  Eigen::MatrixXcd m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      m(i, j) = a(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw InvariantError("hermitian_eigenvalues: eigensolver did not converge");
  }
  const Eigen::VectorXd& values = solver.eigenvalues();
  return {values.data(), values.data() + values.size()};
}

bool is_psd(const ComplexMatrix& a, double tol) {
  if (!is_hermitian(a, tol)) throw InvariantError("is_psd: input is not hermitian");
  const auto values = hermitian_eigenvalues(a);
  return values.front() >= -tol;
}

bool is_projector(const ComplexMatrix& a, double tol) {
  if (!is_hermitian(a, tol)) return false;
  return max_norm_diff(matmul(a, a), a) <= tol;
}

bool is_unitary(const ComplexMatrix& a, double tol) {
  return max_norm_diff(matmul(dagger(a), a), ComplexMatrix::identity(a.dim())) <= tol;
}

std::size_t qubit_count(std::size_t dim) {
  if (!std::has_single_bit(dim)) {
    throw DimensionError("dimension " + std::to_string(dim) +
                         " is not a power of two");
  }
  return static_cast<std::size_t>(std::countr_zero(dim));
}

}  // namespace qclsim
