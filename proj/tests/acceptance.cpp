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

// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>

#include "qclsim/circuit.hpp"
#include "qclsim/input_files.hpp"
#include "qclsim/psa.hpp"
#include "qclsim/qcl.hpp"
#include "random_quantum.hpp"

namespace {

using namespace qclsim;
namespace qt = qclsim::testing;

int failures = 0;

void report(int id, const char* name, bool ok, const std::string& detail) {
  std::printf("[%s] criterion %d %s: %s\n", ok ? "PASS" : "FAIL", id, name, detail.c_str());
  if (!ok) ++failures;
}

std::string fmt(const char* format, double a, double b = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, format, a, b);
  return buf;
}

const CircuitIr kHadamard = parse_circuit("qubits 1\ngate h 0\nmeasure all\n");
const CircuitIr kThreeWire = parse_circuit(
    "qubits 3\ngate not 0\ngate not 0\ngate h 1\ngate h 1\ngate id 2\nmeasure all\n");

void hadamard_halves() {
  const Distribution d = outcome_distribution(simulate(kHadamard));
  const double err = std::max(std::abs(d.at("0") - 0.5), std::abs(d.at("1") - 0.5));
  report(1, "hadamard-halves", d.size() == 2 && err <= 1e-12,
         fmt("max |p - 0.5| = %.3g (tol 1e-12)", err));
}

void three_wire_noiseless() {
  const Distribution d = outcome_distribution(simulate(kThreeWire));
  const double err = std::abs(d.at("000") - 1.0);
  int point_masses = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Histogram h = sample(kThreeWire, 1024, seed);
    if (h.counts.size() == 1 && h.counts.at("000") == 1024) ++point_masses;
  }
  report(2, "three-wire-noiseless", d.size() == 1 && err <= 1e-12 && point_masses == 100,
         fmt("|p(000) - 1| = %.3g (tol 1e-12); {000: 1024} in %.0f/100 seeds", err, point_masses));
}

void three_wire_bitflip() {
  const CircuitIr noisy = inject_noise(kThreeWire, NoiseKind::kBitFlip, 0.05);
  int modal = 0, spread = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Histogram h = sample(noisy, 1024, seed);
    const auto mode = std::max_element(h.counts.begin(), h.counts.end(),
                                       [](const auto& a, const auto& b) { return a.second < b.second; });
    if (mode->first == "000") ++modal;
    if (h.counts.size() > 1) ++spread;
  }
  report(3, "three-wire-bitflip-0.05", modal >= 99 && spread >= 99,
         fmt("modal 000 in %.0f/100 seeds, non-000 outcome present in %.0f/100 (need >= 99 each)",
             modal, spread));
}

void qcl_not_law() {
  qt::Rng rng(1001);
  double worst = 0.0;
  for (int k = 0; k < 200; ++k) {
    const DensityOperator rho = qt::random_density(1 + k % 3, rng);
    worst = std::max(worst, std::abs(truth_probability(qcl_not(rho)) - (1.0 - truth_probability(rho))));
  }
  report(4, "qcl-not-law", worst <= 1e-12, fmt("max deviation %.3g over 200 states (tol 1e-12)", worst));
}

void qcl_and_law() {
  qt::Rng rng(1002);
  double worst = 0.0;
  for (int k = 0; k < 200; ++k) {
    const DensityOperator rho = qt::random_density(1 + k % 2, rng, k % 3 == 0 ? 1 : 0);
    const DensityOperator sigma = qt::random_density(1 + (k / 2) % 2, rng);
    worst = std::max(worst, std::abs(truth_probability(qcl_and(rho, sigma)) -
                                     truth_probability(rho) * truth_probability(sigma)));
  }
  bool table = true;
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      const double p = truth_probability(qcl_and(DensityOperator::basis_state(1, a), DensityOperator::basis_state(1, b)));
      table = table && p == static_cast<double>(a & b);
    }
  }
  report(5, "qcl-and-law", worst <= 1e-12 && table,
         fmt("max deviation %.3g over 200 pairs (tol 1e-12); boolean table exact: ", worst) +
             (table ? "yes" : "no"));
}

void psa_axioms() {
  qt::Rng rng(1003);
  double worst_unit = 0.0, worst_add = 0.0;
  for (int k = 0; k < 100; ++k) {
    const std::size_t n = 1 + k % 4;
    const std::size_t dim = std::size_t{1} << n;
    const Psa psi(qt::random_density(n, rng));
    worst_unit = std::max(worst_unit, std::abs(intensity(psi, Projector::identity(n)) - 1.0));
    auto family = qt::random_orthogonal_family(dim, 1 + rng() % dim, rng);
    if (family.size() > 1 && k % 2 == 0) family.pop_back();
    double sum = 0.0;
    for (const Projector& p : family) sum += intensity(psi, p);
    worst_add = std::max(worst_add, std::abs(intensity(psi, join_projectors(family)) - sum));
  }
  report(6, "psa-axioms", worst_unit <= 1e-10 && worst_add <= 1e-10,
         fmt("max |Psi(I) - 1| = %.3g, max additivity gap = %.3g (tol 1e-10)", worst_unit, worst_add));
}

void noncontextuality() {
  qt::Rng rng(1004);
  int equal = 0;
  double worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    const std::size_t dim = std::size_t{2} << (k % 3);  // 2, 4, 8
    const std::size_t n = qubit_count(dim);
    const Psa psi(qt::random_density(n, rng));
    // First context: a random orthonormal basis, grouped. Its first member P is shared.
    const Eigen::MatrixXcd basis = qt::random_unitary_eigen(dim, rng);
    const Eigen::Index shared_rank = 1 + static_cast<Eigen::Index>(rng() % (dim - 1));
    const Eigen::Index rest = static_cast<Eigen::Index>(dim) - shared_rank;
    const Eigen::MatrixXcd b_shared = basis.leftCols(shared_rank);
    const Eigen::MatrixXcd b_rest = basis.rightCols(rest);
    std::vector<Projector> first = {Projector(qt::from_eigen(b_shared * b_shared.adjoint()))};
    for (Eigen::Index c = 0; c < rest; ++c) {
      first.emplace_back(qt::from_eigen(b_rest.col(c) * b_rest.col(c).adjoint()));
    }
    // Second context: conjugate the first by W = P + B U B^dagger, which fixes P's range
    // and rotates its complement, so P reappears only up to rounding.
    const Eigen::MatrixXcd w = b_shared * b_shared.adjoint() +
                               b_rest * qt::random_unitary_eigen(static_cast<std::size_t>(rest), rng) *
                                   b_rest.adjoint();
    std::vector<Projector> second;
    for (const Projector& p : first) {
      const Eigen::MatrixXcd m = w * qt::to_eigen(p.matrix()) * w.adjoint();
      second.emplace_back(qt::from_eigen(0.5 * (m + m.adjoint())));
    }
    const std::vector<Context> contexts = {Context(first), Context(second)};
    const auto table = global_valuation(psi, contexts);
    const double gap = std::abs(table[0].intensity - table[first.size()].intensity);
    worst = std::max(worst, gap);
    if (gap <= 1e-12 && check_noncontextuality(psi, contexts[0], contexts[1], 1e-12)) ++equal;
  }
  report(7, "noncontextuality", equal == 100,
         fmt("equal intensities in %.0f/100 trials, max gap %.3g (tol 1e-12)", equal, worst));
}

void gleason_round_trip() {
  qt::Rng rng(1005);
  const double s = 1.0 / std::numbers::sqrt2;
  const std::vector<Projector> tetra = {
      Projector::rank_one(QuRegister::qubit(1.0, 0.0)), Projector::rank_one(QuRegister::qubit(0.0, 1.0)),
      Projector::rank_one(QuRegister::qubit(s, s)), Projector::rank_one(QuRegister::qubit(s, Complex(0, s)))};
  std::vector<Projector> tetra2;
  for (const Projector& p : tetra) {
    for (const Projector& q : tetra) tetra2.emplace_back(tensor(p.matrix(), q.matrix()));
  }
  double worst = 0.0;
  for (int k = 0; k < 50; ++k) {
    const std::size_t n = 1 + k % 2;
    const DensityOperator rho = qt::random_density(n, rng, k % 5 == 0 ? 1 : 0);
    std::vector<IntensitySample> samples;
    for (const Projector& p : n == 1 ? tetra : tetra2) samples.push_back({p, born_expectation(rho, p)});
    worst = std::max(worst, max_norm_diff(reconstruct_density(samples, n).matrix(), rho.matrix()));
  }
  report(8, "gleason-round-trip", worst <= 1e-8, fmt("max-norm error %.3g over 50 states (tol 1e-8)", worst));
}

void chsh_witness() {
  const ChshInput preset = chsh_preset("singlet-optimal");
  const double s = chsh_value(preset.rho, preset.settings);
  qt::Rng rng(1006);
  double worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    std::vector<std::pair<double, DensityOperator>> terms;
    const int n_terms = 1 + k % 3;
    for (int t = 0; t < n_terms; ++t) {
      terms.emplace_back(1.0 / n_terms, tensor(qt::random_density(1, rng), qt::random_density(1, rng)));
    }
    const DensityOperator rho = mix(terms);
    const ChshSettings o{qt::random_dichotomic(rng), qt::random_dichotomic(rng),
                         qt::random_dichotomic(rng), qt::random_dichotomic(rng)};
    worst = std::max(worst, std::abs(chsh_value(rho, o)));
  }
  report(9, "chsh-witness", std::abs(s - 2.828427) <= 1e-6 && s > 2.0 && worst <= 2.0 + 1e-9,
         fmt("singlet-optimal S = %.9f (want 2.828427 +- 1e-6); max separable |S| = %.9f (<= 2 + 1e-9)",
             s, worst));
}

void statistical_soundness() {
  const auto start = std::chrono::steady_clock::now();
  const Histogram h = sample(kHadamard, 1000000, 20261019);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const double f = static_cast<double>(h.counts.at("0")) / 1e6;
  report(10, "statistical-soundness", f >= 0.498 && f <= 0.502 && seconds < 30.0,
         fmt("freq(0) = %.6f in [0.498, 0.502]; %.3f s (< 30 s)", f, seconds));
}

}  // namespace

int main() {
  const std::pair<const char*, void (*)()> checks[] = {
      {"hadamard-halves", hadamard_halves}, {"three-wire-noiseless", three_wire_noiseless},
      {"three-wire-bitflip-0.05", three_wire_bitflip},  {"qcl-not-law", qcl_not_law},
      {"qcl-and-law", qcl_and_law},         {"psa-axioms", psa_axioms},
      {"noncontextuality", noncontextuality}, {"gleason-round-trip", gleason_round_trip},
      {"chsh-witness", chsh_witness},       {"statistical-soundness", statistical_soundness}};
  int id = 0;
  for (const auto& [name, check] : checks) {
    ++id;
    try {
      check();
    } catch (const std::exception& e) {
      report(id, name, false, std::string("exception: ") + e.what());
    }
  }
  std::printf("%d of 10 criteria passed\n", 10 - failures);
  return failures == 0 ? 0 : 1;
}
