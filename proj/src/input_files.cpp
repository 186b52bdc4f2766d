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

#include "qclsim/input_files.hpp"

#include <bit>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <optional>
#include <sstream>

#include "qclsim/channels.hpp"
#include "qclsim/circuit.hpp"
#include "qclsim/errors.hpp"

namespace qclsim {

namespace {

struct Line {
  std::size_t number;
  std::string_view text;  // comment stripped, trimmed
};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t pos = 0, number = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view raw = text.substr(pos, eol - pos);
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    ++number;
    if (auto t = trim(raw); !t.empty()) lines.push_back({number, t});
    pos = eol + 1;
  }
  return lines;
}

// First whitespace-delimited word and the trimmed rest.
std::pair<std::string_view, std::string_view> split_word(std::string_view s) {
  const auto end = s.find_first_of(" \t");
  if (end == std::string_view::npos) return {s, {}};
  return {s.substr(0, end), trim(s.substr(end))};
}

std::vector<double> parse_numbers(std::string_view s, std::size_t line) {
  std::vector<double> out;
  std::size_t i = 0;
  auto is_sep = [](char c) { return c == ' ' || c == '\t' || c == ',' || c == '(' || c == ')'; };
  while (i < s.size()) {
    while (i < s.size() && is_sep(s[i])) ++i;
    const std::size_t start = i;
    while (i < s.size() && !is_sep(s[i])) ++i;
    if (i == start) break;
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s.data() + start, s.data() + i, v);
    if (ec != std::errc() || ptr != s.data() + i) {
      throw ParseError("expected a number, got '" + std::string(s.substr(start, i - start)) + "'",
                       line, 0);
    }
    out.push_back(v);
  }
  return out;
}

std::vector<Complex> parse_complex_list(std::string_view s, std::size_t expected,
                                        std::size_t line) {
  const std::vector<double> nums = parse_numbers(s, line);
  if (nums.size() != 2 * expected) {
    throw ParseError("expected " + std::to_string(expected) + " complex values (" +
                         std::to_string(2 * expected) + " numbers), got " +
                         std::to_string(nums.size()) + " numbers",
                     line, 0);
  }
  std::vector<Complex> out(expected);
  for (std::size_t k = 0; k < expected; ++k) out[k] = {nums[2 * k], nums[2 * k + 1]};
  return out;
}

QuRegister literal_vector(std::vector<Complex> amps, std::size_t line) {
  try {
    return QuRegister(std::move(amps), kLiteralNormTol);
  } catch (const std::exception& e) {
    throw ParseError(e.what(), line, 0);
  }
}

DensityOperator circuit_state(std::string_view rel, const std::filesystem::path& base_dir) {
  const std::filesystem::path path = base_dir / std::filesystem::path(std::string(rel));
  try {
    return simulate(parse_circuit(read_text_file(path)));
  } catch (const ParseError& e) {
    throw std::runtime_error(path.string() + ": " + e.what());
  }
}

// Handles the text after `state`. `n_qubits` is the expected register size,
// or 0 to infer it from the data.
DensityOperator parse_state(std::string_view rest, std::size_t n_qubits, std::size_t line,
                            const std::filesystem::path& base_dir, double tol) {
  auto [kind, args] = split_word(rest);
  std::optional<DensityOperator> rho;
  if (kind == "circuit") {
    if (args.empty()) throw ParseError("expected 'state circuit <path>'", line, 0);
    rho = circuit_state(args, base_dir);
  } else if (kind == "vector" || kind == "matrix") {
    std::vector<double> nums = parse_numbers(args, line);
    if (nums.empty() || nums.size() % 2 != 0) {
      throw ParseError("expected re/im pairs after 'state " + std::string(kind) + "'", line, 0);
    }
    std::vector<Complex> values(nums.size() / 2);
    for (std::size_t k = 0; k < values.size(); ++k) values[k] = {nums[2 * k], nums[2 * k + 1]};
    try {
      if (kind == "vector") {
        rho = pure_to_density(literal_vector(std::move(values), line));
      } else {
        std::size_t dim = 1;
        while (dim * dim < values.size()) dim *= 2;
        if (dim * dim != values.size()) {
          throw ParseError("matrix entry count is not 4^n", line, 0);
        }
        rho = DensityOperator(ComplexMatrix(dim, std::move(values)), tol);
      }
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& e) {
      throw ParseError(e.what(), line, 0);
    }
  } else if (kind == "singlet") {
    rho = singlet_state();
  } else if (kind == "product") {
    rho = product_preset_state();
  } else {
    throw ParseError("unknown state form '" + std::string(kind) + "'", line, 0);
  }
  if (n_qubits != 0 && rho->n_qubits() != n_qubits) {
    throw ParseError("state has " + std::to_string(rho->n_qubits()) + " qubits, expected " +
                         std::to_string(n_qubits),
                     line, 0);
  }
  return *rho;
}

std::string basis_label(std::size_t value, std::size_t width, char zero, char one) {
  std::string label(width, zero);
  for (std::size_t k = 0; k < width; ++k) {
    if (value & (std::size_t{1} << (width - 1 - k))) label[k] = one;
  }
  return label;
}

Context hadamard_context(std::size_t n_qubits) {
  const std::size_t dim = std::size_t{1} << n_qubits;
  const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
  std::vector<QuRegister> basis;
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < dim; ++k) {
    std::vector<Complex> amps(dim);
    for (std::size_t x = 0; x < dim; ++x) {
      const int parity = std::popcount(k & x) % 2;
      amps[x] = parity ? -scale : scale;
    }
    basis.emplace_back(std::move(amps));
    labels.push_back(basis_label(k, n_qubits, '+', '-'));
  }
  return Context::from_basis(basis, std::move(labels));
}

}  // namespace

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

FormulaFile parse_formula_file(std::string_view text, const std::filesystem::path& base_dir) {
  const std::vector<Line> lines = split_lines(text);
  if (lines.empty() || lines.front().text != "atoms") {
    throw ParseError("formula file must start with an 'atoms' block",
                     lines.empty() ? 1 : lines.front().number, 0);
  }
  FormulaFile file;
  std::size_t k = 1;
  for (; k < lines.size() && lines[k].text != "end"; ++k) {
    const Line& line = lines[k];
    const auto eq = line.text.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError("expected '<name> = <qubit literal | circuit path>'", line.number, 0);
    }
    const std::string name(trim(line.text.substr(0, eq)));
    const std::string_view value = trim(line.text.substr(eq + 1));
    if (name.empty()) throw ParseError("missing atom name", line.number, 0);
    if (file.bindings.contains(name)) {
      throw ParseError("atom '" + name + "' bound twice", line.number, 0);
    }
    auto [word, rest] = split_word(value);
    if (word == "circuit") {
      if (rest.empty()) throw ParseError("expected 'circuit <path>'", line.number, 0);
      file.bindings.emplace(name, circuit_state(rest, base_dir));
    } else {
      file.bindings.emplace(
          name, pure_to_density(literal_vector(parse_complex_list(value, 2, line.number),
                                               line.number)));
    }
  }
  if (k == lines.size()) throw ParseError("'atoms' block is not closed by 'end'", lines.back().number, 0);
  if (k + 1 == lines.size()) throw ParseError("missing formula after 'end'", lines[k].number, 0);

  // The formula is everything after `end`, possibly spread over lines.
  std::string body;
  for (std::size_t j = k + 1; j < lines.size(); ++j) {
    body += std::string(lines[j].text);
    body += '\n';
  }
  file.formula = parse_formula(body, lines[k + 1].number);
  for (const std::string& a : atom_names(*file.formula)) {
    if (!file.bindings.contains(a)) throw BindingError("unbound atom '" + a + "'");
  }
  return file;
}

PsaInput parse_psa_file(std::string_view text, const std::filesystem::path& base_dir,
                        double tol) {
  const std::vector<Line> lines = split_lines(text);
  std::size_t n_qubits = 0;
  std::optional<DensityOperator> rho;
  std::vector<std::string> names;
  std::vector<Context> contexts;

  for (std::size_t k = 0; k < lines.size(); ++k) {
    auto [word, rest] = split_word(lines[k].text);
    const std::size_t ln = lines[k].number;
    if (word == "qubits") {
      if (n_qubits != 0) throw ParseError("duplicate 'qubits' statement", ln, 0);
      const auto nums = parse_numbers(rest, ln);
      if (nums.size() != 1 || nums[0] < 1 || nums[0] > 10 || nums[0] != std::floor(nums[0])) {
        throw ParseError("expected 'qubits <n>' with 1 <= n <= 10", ln, 0);
      }
      n_qubits = static_cast<std::size_t>(nums[0]);
    } else if (word == "state") {
      if (n_qubits == 0) throw ParseError("'qubits' must precede 'state'", ln, 0);
      if (rho) throw ParseError("duplicate 'state' statement", ln, 0);
      rho = parse_state(rest, n_qubits, ln, base_dir, tol);
    } else if (word == "context") {
      if (n_qubits == 0) throw ParseError("'qubits' must precede 'context'", ln, 0);
      if (rest.empty()) throw ParseError("expected 'context <name>'", ln, 0);
      const std::string name(rest);
      const std::size_t dim = std::size_t{1} << n_qubits;
      std::vector<Projector> projectors;
      std::vector<std::string> labels;
      std::optional<Context> builtin;
      ++k;
      for (; k < lines.size() && lines[k].text != "end"; ++k) {
        auto [entry, args] = split_word(lines[k].text);
        const std::size_t eln = lines[k].number;
        if (entry == "computational") {
          builtin = Context::computational(n_qubits);
        } else if (entry == "hadamard") {
          builtin = hadamard_context(n_qubits);
        } else if (entry == "ket" || entry == "projector") {
          auto [label, values] = split_word(args);
          if (label.empty() || values.empty()) {
            throw ParseError("expected '" + std::string(entry) + " <label> <values>'", eln, 0);
          }
          labels.emplace_back(label);
          try {
            if (entry == "ket") {
              projectors.push_back(
                  Projector::rank_one(literal_vector(parse_complex_list(values, dim, eln), eln)));
            } else {
              projectors.emplace_back(
                  ComplexMatrix(dim, parse_complex_list(values, dim * dim, eln)), tol);
            }
          } catch (const ParseError&) {
            throw;
          } catch (const std::exception& e) {
            throw ParseError(e.what(), eln, 0);
          }
        } else {
          throw ParseError("unknown context entry '" + std::string(entry) + "'", eln, 0);
        }
      }
      if (k == lines.size()) throw ParseError("context '" + name + "' is not closed by 'end'", ln, 0);
      if (builtin && !projectors.empty()) {
        throw ParseError("context '" + name + "' mixes a built-in basis with explicit entries",
                         ln, 0);
      }
      try {
        contexts.push_back(builtin ? *builtin
                                   : Context(std::move(projectors), std::move(labels), tol));
      } catch (const std::exception& e) {
        throw InvariantError("context '" + name + "' (line " + std::to_string(ln) +
                             "): " + e.what());
      }
      names.push_back(name);
    } else {
      throw ParseError("unknown statement '" + std::string(word) + "'", ln, 0);
    }
  }
  if (!rho) throw ParseError("missing 'state' statement", lines.empty() ? 1 : lines.back().number, 0);
  if (contexts.empty()) throw ParseError("no contexts declared", lines.back().number, 0);
  return {Psa(std::move(*rho)), std::move(names), std::move(contexts)};
}

ChshInput parse_chsh_file(std::string_view text, const std::filesystem::path& base_dir,
                          double tol) {
  std::optional<DensityOperator> rho;
  std::optional<ComplexMatrix> a, ap, b, bp;
  for (const Line& line : split_lines(text)) {
    auto [word, rest] = split_word(line.text);
    if (word == "state") {
      if (rho) throw ParseError("duplicate 'state' statement", line.number, 0);
      rho = parse_state(rest, 2, line.number, base_dir, tol);
    } else if (word == "observable") {
      auto [name, values] = split_word(rest);
      std::optional<ComplexMatrix>* slot = name == "a"    ? &a
                                           : name == "a'" ? &ap
                                           : name == "b"  ? &b
                                           : name == "b'" ? &bp
                                                          : nullptr;
      if (slot == nullptr) {
        throw ParseError("observable name must be one of a, a', b, b'", line.number, 0);
      }
      if (slot->has_value()) {
        throw ParseError("observable " + std::string(name) + " declared twice", line.number, 0);
      }
      *slot = ComplexMatrix(2, parse_complex_list(values, 4, line.number));
    } else {
      throw ParseError("unknown statement '" + std::string(word) + "'", line.number, 0);
    }
  }
  if (!rho) throw ParseError("missing 'state' statement", 1, 0);
  if (!a || !ap || !b || !bp) throw ParseError("all four observables a, a', b, b' are required", 1, 0);
  return {std::move(*rho), {std::move(*a), std::move(*ap), std::move(*b), std::move(*bp)}};
}

bool is_chsh_preset(std::string_view name) {
  return name == "singlet-optimal" || name == "product";
}

ChshInput chsh_preset(std::string_view name) {
  if (name == "singlet-optimal") return {singlet_state(), singlet_optimal_settings()};
  if (name == "product") return {product_preset_state(), singlet_optimal_settings()};
  throw std::invalid_argument("unknown CHSH preset '" + std::string(name) + "'");
}

}  // namespace qclsim
