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

#ifndef QCLSIM_QCL_HPP_
#define QCLSIM_QCL_HPP_

#include <cstddef>
#include <map>
#include <string>

#include "qclsim/formula.hpp"
#include "qclsim/quantum_state.hpp"

// Quantum computational logic: a state is "true" to the extent that its
// last qubit is found in |1>.
namespace qclsim {

// P0 = I^(n-1) (x) |0><0|,  P1 = I^(n-1) (x) |1><1|
struct TruthProjectors {
  std::size_t n_qubits;
  Projector falsity;
  Projector truth;
};

TruthProjectors truth_projectors(std::size_t n_qubits);

// p(rho) = Tr(P1 rho)
double truth_probability(const DensityOperator& rho);

// Not on the last qubit: p(Not rho) = 1 - p(rho).
DensityOperator qcl_not(const DensityOperator& rho);

// Toffoli on rho (x) sigma (x) |0><0| controlled by the truth qubits of rho
// and sigma, targeting the appended ancilla. The full (n+m+1)-qubit output is
// returned: p(AND) = p(rho) p(sigma).
DensityOperator qcl_and(const DensityOperator& rho, const DensityOperator& sigma);

// Not(And(Not rho, Not sigma)): p(OR) = 1 - (1-p(rho))(1-p(sigma)).
DensityOperator qcl_or(const DensityOperator& rho, const DensityOperator& sigma);

using Bindings = std::map<std::string, DensityOperator, std::less<>>;

// Composite state denoted by `f`. Each occurrence of an atom contributes an
// independent copy of its bound state.
DensityOperator eval_formula_state(const Formula& f, const Bindings& bindings);

double eval_formula(const Formula& f, const Bindings& bindings);

}  // namespace qclsim

#endif  // QCLSIM_QCL_HPP_
