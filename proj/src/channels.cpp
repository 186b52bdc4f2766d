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

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <numbers>

#include "qclsim/errors.hpp"
#include "qclsim/kernels.hpp"

namespace qclsim {

namespace {

std::string lowercase(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

ComplexMatrix permutation_matrix(std::size_t dim, auto&& image) {
  ComplexMatrix m(dim);
  for (std::size_t col = 0; col < dim; ++col) m(image(col), col) = 1.0;
  return m;
}

void check_targets(std::size_t n_qubits, std::span<const std::size_t> targets,
                   const char* who) {
  for (std::size_t k = 0; k < targets.size(); ++k) {
    if (targets[k] >= n_qubits) {
      throw IndexError(std::string(who) + ": qubit " + std::to_string(targets[k]) +
                       " out of range for " + std::to_string(n_qubits) + " qubits");
    }
    for (std::size_t l = 0; l < k; ++l) {
      if (targets[l] == targets[k]) {
        throw IndexError(std::string(who) + ": repeated qubit " +
                         std::to_string(targets[k]));
      }
    }
  }
}

}  // namespace

ComplexMatrix pauli_x() { return {{0.0, 1.0}, {1.0, 0.0}}; }
ComplexMatrix pauli_y() { return {{0.0, Complex(0, -1)}, {Complex(0, 1), 0.0}}; }
ComplexMatrix pauli_z() { return {{1.0, 0.0}, {0.0, -1.0}}; }

bool is_builtin_gate(std::string_view name) {
  static constexpr std::array<std::string_view, 6> kNames = {
      "i", "not", "cnot", "toffoli", "h", "sqrtnot"};
  std::string key = lowercase(name);
  if (key == "id") key = "i";
  return std::find(kNames.begin(), kNames.end(), key) != kNames.end();
}

Gate builtin_gate(std::string_view name) {
  const std::string key = lowercase(name);
  if (key == "i" || key == "id") return {"I", 1, ComplexMatrix::identity(2)};
  if (key == "not") return {"Not", 1, pauli_x()};
  if (key == "h") {
    const double s = 1.0 / std::numbers::sqrt2;
    return {"H", 1, {{s, s}, {s, -s}}};
  }
  if (key == "sqrtnot") {
    const Complex p(0.5, 0.5), m(0.5, -0.5);
    return {"SqrtNot", 1, {{p, m}, {m, p}}};
  }
  if (key == "cnot") {
    return {"CNot", 2,
            permutation_matrix(4, [](std::size_t x) { return (x & 2) ? x ^ 1 : x; })};
  }
  if (key == "toffoli") {
    return {"Toffoli", 3, permutation_matrix(8, [](std::size_t x) {
              return (x & 6) == 6 ? x ^ 1 : x;
            })};
  }
  throw std::invalid_argument("unknown gate '" + std::string(name) + "'");
}

QuantumOperation::QuantumOperation(std::size_t n_qubits,
                                   std::vector<ComplexMatrix> kraus, double tol)
    : n_qubits_(n_qubits), kraus_(std::move(kraus)) {
  if (kraus_.empty()) throw InvariantError("QuantumOperation: empty Kraus family");
  const std::size_t d = dim();
  ComplexMatrix completeness(d);
  for (const ComplexMatrix& a : kraus_) {
    if (a.dim() != d) throw DimensionError("QuantumOperation: Kraus element dimension");
    completeness += matmul(dagger(a), a);
  }
  if (max_norm_diff(completeness, ComplexMatrix::identity(d)) > tol) {
    throw InvariantError("QuantumOperation: Kraus family is not trace preserving");
  }
}

QuantumOperation QuantumOperation::identity(std::size_t n_qubits) {
  return QuantumOperation(n_qubits, {ComplexMatrix::identity(std::size_t{1} << n_qubits)});
}

ComplexMatrix embed(const ComplexMatrix& local, std::size_t n_qubits,
                    std::span<const std::size_t> targets) {
  check_targets(n_qubits, targets, "embed");
  if (local.dim() != (std::size_t{1} << targets.size())) {
    throw DimensionError("embed: local matrix does not act on " +
                         std::to_string(targets.size()) + " qubits");
  }
  const std::size_t dim = std::size_t{1} << n_qubits;
  if (dim > kMaxDim) throw DimensionError("embed: register too large");
  std::size_t target_mask = 0;
  std::vector<std::size_t> bits(targets.size());
  for (std::size_t k = 0; k < targets.size(); ++k) {
    bits[k] = std::size_t{1} << (n_qubits - 1 - targets[k]);
    target_mask |= bits[k];
  }
  auto local_index = [&](std::size_t full) {
    std::size_t idx = 0;
    for (std::size_t bit : bits) idx = (idx << 1) | ((full & bit) ? 1 : 0);
    return idx;
  };
  ComplexMatrix out(dim);
  for (std::size_t r = 0; r < dim; ++r) {
    const std::size_t lr = local_index(r);
    for (std::size_t c = 0; c < dim; ++c) {
      if ((r & ~target_mask) != (c & ~target_mask)) continue;
      out(r, c) = local(lr, local_index(c));
    }
  }
  return out;
}

QuantumOperation lift_unitary(const Gate& gate, std::size_t n_qubits,
                              std::span<const std::size_t> targets) {
  if (targets.size() != gate.arity) {
    throw DimensionError("lift_unitary: gate " + gate.name + " takes " +
                         std::to_string(gate.arity) + " qubit(s), got " +
                         std::to_string(targets.size()));
  }
  return QuantumOperation(n_qubits, {embed(gate.matrix, n_qubits, targets)});
}

DensityOperator apply(const QuantumOperation& op, const DensityOperator& rho) {
  if (op.dim() != rho.dim()) {
    throw DimensionError("apply: operation acts on " + std::to_string(op.n_qubits()) +
                         " qubits, state has " + std::to_string(rho.n_qubits()));
  }
  ComplexMatrix out(rho.dim());
  kernels::kraus_sandwich(op.kraus(), rho.matrix(), out);
  return DensityOperator(std::move(out));
}

QuantumOperation measurement_channel(std::size_t n_qubits,
                                     std::span<const std::size_t> measured) {
  if (measured.empty()) throw IndexError("measurement_channel: no qubits measured");
  check_targets(n_qubits, measured, "measurement_channel");
  const std::size_t outcomes = std::size_t{1} << measured.size();
  std::vector<ComplexMatrix> kraus;
  kraus.reserve(outcomes);
  for (std::size_t pattern = 0; pattern < outcomes; ++pattern) {
    std::vector<Complex> diag(outcomes);
    diag[pattern] = 1.0;
    kraus.push_back(embed(ComplexMatrix::diagonal(diag), n_qubits, measured));
  }
  return QuantumOperation(n_qubits, std::move(kraus));
}

std::string_view to_string(NoiseKind kind) {
  return kind == NoiseKind::kBitFlip ? "bitflip" : "depolarizing";
}

NoiseKind parse_noise_kind(std::string_view text) {
  const std::string key = lowercase(text);
  if (key == "bitflip" || key == "bit_flip") return NoiseKind::kBitFlip;
  if (key == "depolarizing") return NoiseKind::kDepolarizing;
  throw std::invalid_argument("unknown noise kind '" + std::string(text) + "'");
}

QuantumOperation noise_channel(NoiseKind kind, double p, std::size_t n_qubits,
                               std::size_t target) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw InvariantError("noise_channel: p = " + std::to_string(p) +
                         " outside [0,1]");
  }
  const std::array<std::size_t, 1> where = {target};
  std::vector<ComplexMatrix> local;
  if (kind == NoiseKind::kBitFlip) {
    local = {Complex(std::sqrt(1.0 - p)) * ComplexMatrix::identity(2),
             Complex(std::sqrt(p)) * pauli_x()};
  } else {
    const double w = std::sqrt(p / 4.0);
    local = {Complex(std::sqrt(1.0 - 3.0 * p / 4.0)) * ComplexMatrix::identity(2),
             Complex(w) * pauli_x(), Complex(w) * pauli_y(), Complex(w) * pauli_z()};
  }
  std::vector<ComplexMatrix> kraus;
  for (const ComplexMatrix& k : local) kraus.push_back(embed(k, n_qubits, where));
  return QuantumOperation(n_qubits, std::move(kraus));
}

QuantumOperation compose(std::span<const QuantumOperation> ops) {
  if (ops.empty()) throw DimensionError("compose: no operations");
  const std::size_t n = ops.front().n_qubits();
  std::vector<ComplexMatrix> family = ops.front().kraus();
  for (std::size_t k = 1; k < ops.size(); ++k) {
    if (ops[k].n_qubits() != n) throw DimensionError("compose: qubit count mismatch");
    std::vector<ComplexMatrix> next;
    next.reserve(family.size() * ops[k].kraus().size());
    for (const ComplexMatrix& later : ops[k].kraus()) {
      for (const ComplexMatrix& earlier : family) next.push_back(matmul(later, earlier));
    }
    family = std::move(next);
  }
  return QuantumOperation(n, std::move(family));
}

}  // namespace qclsim
