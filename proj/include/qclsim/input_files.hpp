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

#ifndef QCLSIM_INPUT_FILES_HPP_
#define QCLSIM_INPUT_FILES_HPP_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "qclsim/formula.hpp"
#include "qclsim/psa.hpp"
#include "qclsim/qcl.hpp"

// Text inputs for the command-line tool. All formats are line oriented and
// treat `#` as a comment marker. Numeric lists may separate their values
// with spaces, commas or parentheses. Paths named inside a file resolve
// relative to that file's directory.
namespace qclsim {

// Literal vectors are renormalized when their squared norm is within this
// distance of 1, so six-decimal hand-typed amplitudes are accepted.
inline constexpr double kLiteralNormTol = 1e-6;

// Throws std::runtime_error naming `path` when it cannot be read.
std::string read_text_file(const std::filesystem::path& path);

// Formula file:
//   atoms
//     a = (c0_re, c0_im, c1_re, c1_im)
//     b = circuit path/to/file.qc
//   end
//   a & !b
struct FormulaFile {
  FormulaPtr formula;
  Bindings bindings;
};
FormulaFile parse_formula_file(std::string_view text,
                               const std::filesystem::path& base_dir);

// State declaration, shared by the PSA and CHSH formats:
//   state vector <re> <im> ...      2^n amplitudes
//   state matrix <re> <im> ...      4^n entries, row-major
//   state circuit <path>            output of the circuit
//
// PSA file:
//   qubits <n>
//   state ...
//   context <name>
//     computational | hadamard       (built-in bases), or any number of
//     ket <label> <re> <im> ...      rank-one projector onto the vector
//     projector <label> <re> <im> ...
//   end
struct PsaInput {
  Psa psa;
  std::vector<std::string> context_names;
  std::vector<Context> contexts;
};
PsaInput parse_psa_file(std::string_view text, const std::filesystem::path& base_dir,
                        double tol = kStructuralTol);

// CHSH file (two qubits):
//   state singlet | state product | state vector ... | state matrix ...
//   observable a  <re> <im> x4
//   observable a' ...
//   observable b  ...
//   observable b' ...
// Observable spectra are checked by chsh_value, not here.
struct ChshInput {
  DensityOperator rho;
  ChshSettings settings;
};
ChshInput parse_chsh_file(std::string_view text, const std::filesystem::path& base_dir,
                          double tol = kStructuralTol);

// "singlet-optimal" or "product"; throws std::invalid_argument otherwise.
ChshInput chsh_preset(std::string_view name);
bool is_chsh_preset(std::string_view name);

}  // namespace qclsim

#endif  // QCLSIM_INPUT_FILES_HPP_
