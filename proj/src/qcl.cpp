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

#include "qclsim/qcl.hpp"

#include <array>

#include "qclsim/channels.hpp"
#include "qclsim/errors.hpp"

namespace qclsim {

TruthProjectors truth_projectors(std::size_t n_qubits) {
  if (n_qubits == 0) throw DimensionError("truth_projectors: need at least one qubit");
  const ComplexMatrix rest = ComplexMatrix::identity(std::size_t{1} << (n_qubits - 1));
  const ComplexMatrix zero{{1.0, 0.0}, {0.0, 0.0}};
  const ComplexMatrix one{{0.0, 0.0}, {0.0, 1.0}};
  return {n_qubits, Projector(tensor(rest, zero)), Projector(tensor(rest, one))};
}

double truth_probability(const DensityOperator& rho) {
  return born_expectation(rho, truth_projectors(rho.n_qubits()).truth);
}

DensityOperator qcl_not(const DensityOperator& rho) {
  const std::array<std::size_t, 1> last = {rho.n_qubits() - 1};
  return apply(lift_unitary(builtin_gate("Not"), rho.n_qubits(), last), rho);
}

DensityOperator qcl_and(const DensityOperator& rho, const DensityOperator& sigma) {
  const std::size_t n = rho.n_qubits();
  const std::size_t m = sigma.n_qubits();
  const DensityOperator ancilla = DensityOperator::basis_state(1, 0);
  const DensityOperator joint = tensor(tensor(rho, sigma), ancilla);
  const std::array<std::size_t, 3> wires = {n - 1, n + m - 1, n + m};
  return apply(lift_unitary(builtin_gate("Toffoli"), n + m + 1, wires), joint);
}

DensityOperator qcl_or(const DensityOperator& rho, const DensityOperator& sigma) {
  return qcl_not(qcl_and(qcl_not(rho), qcl_not(sigma)));
}

DensityOperator eval_formula_state(const Formula& f, const Bindings& bindings) {
  struct Evaluator {
    const Bindings& bindings;

    DensityOperator operator()(const AtomNode& n) const {
      auto it = bindings.find(n.name);
      if (it == bindings.end()) throw BindingError("unbound atom '" + n.name + "'");
      return it->second;
    }
    DensityOperator operator()(const NotNode& n) const { return qcl_not(eval(n.child)); }
    DensityOperator operator()(const AndNode& n) const {
      return qcl_and(eval(n.left), eval(n.right));
    }
    DensityOperator operator()(const OrNode& n) const {
      return qcl_or(eval(n.left), eval(n.right));
    }
    DensityOperator operator()(const GateNode& n) const {
      const Gate gate = builtin_gate(n.gate);
      if (gate.arity != 1) {
        throw std::invalid_argument("gate '" + n.gate + "' in a formula must act on one qubit");
      }
      DensityOperator child = eval(n.child);
      const std::array<std::size_t, 1> last = {child.n_qubits() - 1};
      return apply(lift_unitary(gate, child.n_qubits(), last), child);
    }
    DensityOperator eval(const Formula& g) const { return std::visit(*this, g.node); }
    DensityOperator eval(const FormulaPtr& g) const {
      if (!g) throw InvariantError("malformed formula tree: missing operand");
      return eval(*g);
    }
  };
  return Evaluator{bindings}.eval(f);
}

double eval_formula(const Formula& f, const Bindings& bindings) {
  return truth_probability(eval_formula_state(f, bindings));
}

}  // namespace qclsim
