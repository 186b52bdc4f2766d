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

#ifndef QCLSIM_PSA_HPP_
#define QCLSIM_PSA_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qclsim/linalg.hpp"
#include "qclsim/quantum_state.hpp"

namespace qclsim {

// Potential state of affairs: the intensive valuation P -> Tr(rho P) of all
// projectors generated by one density operator.
class Psa {
 public:
  explicit Psa(DensityOperator rho) : rho_(std::move(rho)) {}

  std::size_t n_qubits() const { return rho_.n_qubits(); }
  std::size_t dim() const { return rho_.dim(); }
  const DensityOperator& rho() const { return rho_; }

 private:
  DensityOperator rho_;
};

// A projective decomposition of the identity: pairwise orthogonal
// projectors summing to I. Labels are carried along for reporting.
class Context {
 public:
  explicit Context(std::vector<Projector> projectors,
                   std::vector<std::string> labels = {},
                   double tol = kStructuralTol);

  // Rank-one projectors onto an orthonormal basis.
  static Context from_basis(std::span<const QuRegister> basis,
                            std::vector<std::string> labels = {});
  static Context computational(std::size_t n_qubits);

  std::size_t size() const { return projectors_.size(); }
  std::size_t dim() const { return projectors_.front().dim(); }
  const std::vector<Projector>& projectors() const { return projectors_; }
  const std::vector<std::string>& labels() const { return labels_; }

 private:
  std::vector<Projector> projectors_;
  std::vector<std::string> labels_;
};

// Potentia of the immanent power `p`.
double intensity(const Psa& psa, const Projector& p);

// Join of pairwise-orthogonal projectors (their sum). Throws
// InvariantError when some pair has ||P_i P_j|| > tol.
Projector join_projectors(std::span<const Projector> ps, double tol = kStructuralTol);

// |Psi(join ps) - sum Psi(P_i)| <= tol. Non-orthogonal families throw.
bool check_additivity(const Psa& psa, std::span<const Projector> ps,
                      double tol = kStructuralTol);

struct ValuationEntry {
  std::size_t context;
  std::size_t projector;
  std::string label;
  double intensity;
};

// Intensity of every projector of every context, ordered by (context,
// projector). Contexts are valued in parallel.
std::vector<ValuationEntry> global_valuation(const Psa& psa,
                                             std::span<const Context> contexts);

// For each projector shared by both contexts (max-norm distance <= tol),
// the two assigned intensities agree within tol.
bool check_noncontextuality(const Psa& psa, const Context& c1, const Context& c2,
                            double tol = kStructuralTol);

struct IntensitySample {
  Projector projector;
  double intensity;
};

// Linear inversion of Tr(rho P_i) = v_i over the Pauli basis of hermitian
// matrices. Throws InvariantError when the family does not span the 4^n
// dimensional hermitian space, when the samples are inconsistent (residual
// above `tol`), or when the solution is not a density operator.
DensityOperator reconstruct_density(std::span<const IntensitySample> samples,
                                    std::size_t n_qubits, double tol = 1e-8);

// Tensor products of {I, X, Y, Z}; index digits are base 4, qubit 0 most
// significant. Hermitian and orthogonal: Tr(B_k B_l) = 2^n delta_kl.
std::vector<ComplexMatrix> pauli_basis(std::size_t n_qubits);

// Hermitian with spectrum in {-1, +1}.
void require_dichotomic(const ComplexMatrix& observable, double tol = kStructuralTol);

struct ChshSettings {
  ComplexMatrix a, a_prime, b, b_prime;
};

// S = E(a,b) + E(a,b') + E(a',b) - E(a',b'),  E(x,y) = Tr(rho (x (x) y)).
double chsh_value(const DensityOperator& rho, const ChshSettings& settings);

// Correlator E(x,y) for a two-qubit state.
double correlator(const DensityOperator& rho, const ComplexMatrix& x,
                  const ComplexMatrix& y);

// (|01> - |10>)/sqrt2
DensityOperator singlet_state();
// a = Z, a' = X, b = -(Z+X)/sqrt2, b' = -(Z-X)/sqrt2. Against the singlet
// these give S = +2 sqrt2; the unsigned axes (Z+-X)/sqrt2 give -2 sqrt2.
ChshSettings singlet_optimal_settings();
// Preset pair: |00><00| measured with the singlet-optimal settings.
DensityOperator product_preset_state();

}  // namespace qclsim

#endif  // QCLSIM_PSA_HPP_
