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

#include "qclsim/psa.hpp"

#include <Eigen/Dense>
#include <array>
#include <cmath>
#include <exception>
#include <numbers>

#include "qclsim/channels.hpp"
#include "qclsim/errors.hpp"

namespace qclsim {

namespace {

void require_orthogonal(std::span<const Projector> ps, double tol, const char* who) {
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (ps[i].dim() != ps.front().dim()) {
      throw DimensionError(std::string(who) + ": projectors of different dimension");
    }
    for (std::size_t j = 0; j < i; ++j) {
      const ComplexMatrix product = matmul(ps[i].matrix(), ps[j].matrix());
      if (max_norm_diff(product, ComplexMatrix::zero(product.dim())) > tol) {
        throw InvariantError(std::string(who) + ": projectors " + std::to_string(j) +
                             " and " + std::to_string(i) + " are not orthogonal");
      }
    }
  }
}

}  // namespace

Context::Context(std::vector<Projector> projectors, std::vector<std::string> labels,
                 double tol)
    : projectors_(std::move(projectors)), labels_(std::move(labels)) {
  if (projectors_.empty()) throw InvariantError("Context: no projectors");
  require_orthogonal(projectors_, tol, "Context");
  ComplexMatrix sum(dim());
  for (const Projector& p : projectors_) sum += p.matrix();
  if (max_norm_diff(sum, ComplexMatrix::identity(dim())) > tol) {
    throw InvariantError("Context: projectors do not sum to the identity");
  }
  if (labels_.empty()) {
    for (std::size_t k = 0; k < projectors_.size(); ++k) labels_.push_back("P" + std::to_string(k));
  }
  if (labels_.size() != projectors_.size()) {
    throw DimensionError("Context: label count does not match projector count");
  }
}

Context Context::from_basis(std::span<const QuRegister> basis,
                            std::vector<std::string> labels) {
  std::vector<Projector> ps;
  ps.reserve(basis.size());
  for (const QuRegister& v : basis) ps.push_back(Projector::rank_one(v));
  return Context(std::move(ps), std::move(labels));
}

Context Context::computational(std::size_t n_qubits) {
  std::vector<QuRegister> basis;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < (std::size_t{1} << n_qubits); ++i) {
    basis.push_back(QuRegister::basis(n_qubits, i));
    std::string label(n_qubits, '0');
    for (std::size_t q = 0; q < n_qubits; ++q) {
      if (i & (std::size_t{1} << (n_qubits - 1 - q))) label[q] = '1';
    }
    labels.push_back(std::move(label));
  }
  return from_basis(basis, std::move(labels));
}

double intensity(const Psa& psa, const Projector& p) {
  return born_expectation(psa.rho(), p);
}

Projector join_projectors(std::span<const Projector> ps, double tol) {
  if (ps.empty()) throw InvariantError("join_projectors: empty family");
  require_orthogonal(ps, tol, "join_projectors");
  ComplexMatrix sum(ps.front().dim());
  for (const Projector& p : ps) sum += p.matrix();
  return Projector(std::move(sum), tol);
}

bool check_additivity(const Psa& psa, std::span<const Projector> ps, double tol) {
  const Projector joined = join_projectors(ps);
  double sum = 0.0;
  for (const Projector& p : ps) sum += intensity(psa, p);
  return std::abs(intensity(psa, joined) - sum) <= tol;
}

std::vector<ValuationEntry> global_valuation(const Psa& psa,
                                             std::span<const Context> contexts) {
  for (const Context& c : contexts) {
    if (c.dim() != psa.dim()) throw DimensionError("global_valuation: context dimension");
  }
  std::vector<std::vector<double>> rows(contexts.size());
  std::exception_ptr failure;
  const auto n = static_cast<std::ptrdiff_t>(contexts.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t c = 0; c < n; ++c) {
    try {
      const Context& ctx = contexts[static_cast<std::size_t>(c)];
      std::vector<double> row;
      row.reserve(ctx.size());
      for (const Projector& p : ctx.projectors()) row.push_back(intensity(psa, p));
      rows[static_cast<std::size_t>(c)] = std::move(row);
    } catch (...) {
#pragma omp critical
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<ValuationEntry> table;
  for (std::size_t c = 0; c < contexts.size(); ++c) {
    for (std::size_t k = 0; k < rows[c].size(); ++k) {
      table.push_back({c, k, contexts[c].labels()[k], rows[c][k]});
    }
  }
  return table;
}

bool check_noncontextuality(const Psa& psa, const Context& c1, const Context& c2,
                            double tol) {
  for (const Projector& p : c1.projectors()) {
    for (const Projector& q : c2.projectors()) {
      if (p.dim() != q.dim() || max_norm_diff(p.matrix(), q.matrix()) > tol) continue;
      if (std::abs(intensity(psa, p) - intensity(psa, q)) > tol) return false;
    }
  }
  return true;
}

std::vector<ComplexMatrix> pauli_basis(std::size_t n_qubits) {
  const std::array<ComplexMatrix, 4> singles = {ComplexMatrix::identity(2), pauli_x(),
                                                pauli_y(), pauli_z()};
  std::vector<ComplexMatrix> basis = {ComplexMatrix::identity(1)};
  for (std::size_t q = 0; q < n_qubits; ++q) {
    std::vector<ComplexMatrix> next;
    next.reserve(basis.size() * 4);
    for (const ComplexMatrix& b : basis) {
      for (const ComplexMatrix& s : singles) next.push_back(tensor(b, s));
    }
    basis = std::move(next);
  }
  return basis;
}

DensityOperator reconstruct_density(std::span<const IntensitySample> samples,
                                    std::size_t n_qubits, double tol) {
  const std::size_t dim = std::size_t{1} << n_qubits;
  const std::vector<ComplexMatrix> basis = pauli_basis(n_qubits);
  const auto rows = static_cast<Eigen::Index>(samples.size());
  const auto cols = static_cast<Eigen::Index>(basis.size());

  // rho = 2^-n sum_k r_k B_k with r_k = Tr(rho B_k); each sample gives
  // sum_k r_k Tr(B_k P_i) / 2^n = v_i.
  Eigen::MatrixXd system(rows, cols);
  Eigen::VectorXd values(rows);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const IntensitySample& s = samples[static_cast<std::size_t>(i)];
    if (s.projector.dim() != dim) throw DimensionError("reconstruct_density: sample dimension");
    for (Eigen::Index k = 0; k < cols; ++k) {
      system(i, k) = trace(matmul(basis[static_cast<std::size_t>(k)], s.projector.matrix())).real() /
                     static_cast<double>(dim);
    }
    values(i) = s.intensity;
  }

  if (rows < cols) {
    throw InvariantError("reconstruct_density: " + std::to_string(rows) +
                         " samples cannot span the " + std::to_string(cols) +
                         "-dimensional hermitian space");
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(system, Eigen::ComputeThinU | Eigen::ComputeThinV);
  svd.setThreshold(1e-10);
  if (svd.rank() < cols) {
    throw InvariantError("reconstruct_density: projector family has rank " +
                         std::to_string(svd.rank()) + ", needs " + std::to_string(cols) +
                         " (not informationally complete)");
  }
  const Eigen::VectorXd coords = svd.solve(values);
  const double residual = (system * coords - values).cwiseAbs().maxCoeff();
  if (residual > tol) {
    throw InvariantError("reconstruct_density: inconsistent intensities (residual " +
                         std::to_string(residual) + ")");
  }

  ComplexMatrix rho(dim);
  for (std::size_t k = 0; k < basis.size(); ++k) {
    rho += Complex(coords(static_cast<Eigen::Index>(k)) / static_cast<double>(dim)) * basis[k];
  }
  return DensityOperator(std::move(rho), tol);
}

void require_dichotomic(const ComplexMatrix& observable, double tol) {
  if (!is_hermitian(observable, tol)) {
    throw InvariantError("observable is not hermitian");
  }
  for (double v : hermitian_eigenvalues(observable)) {
    if (std::abs(std::abs(v) - 1.0) > tol) {
      throw InvariantError("observable has eigenvalue " + std::to_string(v) +
                           ", expected spectrum in {-1, +1}");
    }
  }
}

double correlator(const DensityOperator& rho, const ComplexMatrix& x,
                  const ComplexMatrix& y) {
  return trace(matmul(rho.matrix(), tensor(x, y))).real();
}

double chsh_value(const DensityOperator& rho, const ChshSettings& s) {
  if (rho.n_qubits() != 2) throw DimensionError("chsh_value: state must have two qubits");
  for (const ComplexMatrix* o : {&s.a, &s.a_prime, &s.b, &s.b_prime}) {
    if (o->dim() != 2) throw DimensionError("chsh_value: observables must act on one qubit");
    require_dichotomic(*o);
  }
  return correlator(rho, s.a, s.b) + correlator(rho, s.a, s.b_prime) +
         correlator(rho, s.a_prime, s.b) - correlator(rho, s.a_prime, s.b_prime);
}

DensityOperator singlet_state() {
  const double s = 1.0 / std::numbers::sqrt2;
  return pure_to_density(QuRegister({0.0, s, -s, 0.0}));
}

ChshSettings singlet_optimal_settings() {
  const Complex s(-1.0 / std::numbers::sqrt2);
  return {pauli_z(), pauli_x(), s * (pauli_z() + pauli_x()), s * (pauli_z() - pauli_x())};
}

DensityOperator product_preset_state() { return DensityOperator::basis_state(2, 0); }

}  // namespace qclsim
