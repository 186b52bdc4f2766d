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

#include "qclsim/circuit.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cstdio>
#include <sstream>

#include "qclsim/errors.hpp"
#include "qclsim/kernels.hpp"

namespace qclsim {

namespace {

inline constexpr std::size_t kMaxQubits = 10;

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) tokens.push_back({line.substr(start, i - start), start + 1});
  }
  return tokens;
}

std::size_t parse_index(const Token& t, std::size_t line) {
  std::size_t value = 0;
  const auto* end = t.text.data() + t.text.size();
  auto [ptr, ec] = std::from_chars(t.text.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw ParseError("expected a non-negative integer, got '" + std::string(t.text) + "'",
                     line, t.column);
  }
  return value;
}

double parse_real(const Token& t, std::size_t line) {
  double value = 0.0;
  const auto* end = t.text.data() + t.text.size();
  auto [ptr, ec] = std::from_chars(t.text.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw ParseError("expected a number, got '" + std::string(t.text) + "'", line, t.column);
  }
  return value;
}

std::string canonical_gate(std::string_view name) {
  std::string key(name);
  std::transform(key.begin(), key.end(), key.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (key == "i") key = "id";
  return key;
}

std::string format_real(double p) {
  // Shortest text that reads back to the same double.
  std::array<char, 32> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), p);
  return std::string(buf.data(), ptr);
}

std::string bits_label(std::size_t value, std::size_t width) {
  std::string label(width, '0');
  for (std::size_t k = 0; k < width; ++k) {
    if (value & (std::size_t{1} << (width - 1 - k))) label[k] = '1';
  }
  return label;
}

}  // namespace

CircuitIr parse_circuit(std::string_view text) {
  CircuitIr ir;
  bool have_header = false;
  bool measured = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    const std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;

    const std::vector<Token> tokens = tokenize(line);
    if (tokens.empty()) continue;
    const Token& head = tokens.front();
    auto require_count = [&](std::size_t at_least, const char* usage) {
      if (tokens.size() < at_least) {
        throw ParseError(std::string("expected '") + usage + "'", line_no, head.column);
      }
    };
    auto qubit_arg = [&](const Token& t) {
      const std::size_t q = parse_index(t, line_no);
      if (q >= ir.n_qubits) {
        throw ParseError("qubit " + std::to_string(q) + " out of range for " +
                             std::to_string(ir.n_qubits) + " qubits",
                         line_no, t.column);
      }
      return q;
    };

    if (!have_header) {
      if (head.text != "qubits") {
        throw ParseError("first statement must be 'qubits <n>'", line_no, head.column);
      }
      if (tokens.size() != 2) throw ParseError("expected 'qubits <n>'", line_no, head.column);
      ir.n_qubits = parse_index(tokens[1], line_no);
      if (ir.n_qubits == 0 || ir.n_qubits > kMaxQubits) {
        throw ParseError("qubit count must be between 1 and " + std::to_string(kMaxQubits),
                         line_no, tokens[1].column);
      }
      have_header = true;
      continue;
    }
    if (measured) {
      throw ParseError("'measure' must be the last statement", line_no, head.column);
    }

    if (head.text == "qubits") {
      throw ParseError("duplicate 'qubits' statement", line_no, head.column);
    } else if (head.text == "gate") {
      require_count(3, "gate <name> <target>...");
      const std::string name = canonical_gate(tokens[1].text);
      if (!is_builtin_gate(name)) {
        throw ParseError("unknown gate '" + std::string(tokens[1].text) + "'", line_no,
                         tokens[1].column);
      }
      const std::size_t arity = builtin_gate(name).arity;
      if (tokens.size() - 2 != arity) {
        throw ParseError("gate '" + name + "' takes " + std::to_string(arity) +
                             " target(s), got " + std::to_string(tokens.size() - 2),
                         line_no, tokens[1].column);
      }
      GateStep step{name, {}};
      for (std::size_t k = 2; k < tokens.size(); ++k) {
        const std::size_t q = qubit_arg(tokens[k]);
        if (std::find(step.targets.begin(), step.targets.end(), q) != step.targets.end()) {
          throw ParseError("repeated target " + std::to_string(q), line_no, tokens[k].column);
        }
        step.targets.push_back(q);
      }
      ir.steps.emplace_back(std::move(step));
    } else if (head.text == "noise") {
      if (tokens.size() != 4) {
        throw ParseError("expected 'noise <bitflip|depolarizing> <p> <target>'", line_no,
                         head.column);
      }
      NoiseKind kind;
      try {
        kind = parse_noise_kind(tokens[1].text);
      } catch (const std::invalid_argument&) {
        throw ParseError("unknown noise kind '" + std::string(tokens[1].text) + "'", line_no,
                         tokens[1].column);
      }
      const double p = parse_real(tokens[2], line_no);
      if (!(p >= 0.0 && p <= 1.0)) {
        throw ParseError("noise probability must lie in [0,1]", line_no, tokens[2].column);
      }
      ir.steps.emplace_back(NoiseStep{kind, p, qubit_arg(tokens[3])});
    } else if (head.text == "measure") {
      require_count(2, "measure all | measure <i>...");
      MeasureStep step{false, {}};
      if (tokens.size() == 2 && tokens[1].text == "all") {
        step.all = true;
      } else {
        for (std::size_t k = 1; k < tokens.size(); ++k) {
          const std::size_t q = qubit_arg(tokens[k]);
          if (std::find(step.qubits.begin(), step.qubits.end(), q) != step.qubits.end()) {
            throw ParseError("repeated qubit " + std::to_string(q), line_no, tokens[k].column);
          }
          step.qubits.push_back(q);
        }
      }
      ir.steps.emplace_back(std::move(step));
      measured = true;
    } else {
      throw ParseError("unknown statement '" + std::string(head.text) + "'", line_no,
                       head.column);
    }
  }
  if (!have_header) throw ParseError("missing 'qubits <n>' statement", line_no, 0);
  return ir;
}

std::string pretty_print(const CircuitIr& ir) {
  std::ostringstream out;
  out << "qubits " << ir.n_qubits << '\n';
  for (const Step& step : ir.steps) {
    if (const auto* g = std::get_if<GateStep>(&step)) {
      out << "gate " << g->gate;
      for (std::size_t t : g->targets) out << ' ' << t;
    } else if (const auto* n = std::get_if<NoiseStep>(&step)) {
      out << "noise " << to_string(n->kind) << ' ' << format_real(n->p) << ' ' << n->target;
    } else {
      const auto& m = std::get<MeasureStep>(step);
      out << "measure";
      if (m.all) {
        out << " all";
      } else {
        for (std::size_t q : m.qubits) out << ' ' << q;
      }
    }
    out << '\n';
  }
  return out.str();
}

void validate(const CircuitIr& ir) {
  if (ir.n_qubits == 0 || ir.n_qubits > kMaxQubits) {
    throw DimensionError("circuit qubit count must be between 1 and " +
                         std::to_string(kMaxQubits));
  }
  auto check_index = [&](std::size_t q) {
    if (q >= ir.n_qubits) throw IndexError("qubit " + std::to_string(q) + " out of range");
  };
  for (std::size_t k = 0; k < ir.steps.size(); ++k) {
    const Step& step = ir.steps[k];
    if (const auto* g = std::get_if<GateStep>(&step)) {
      const Gate gate = builtin_gate(g->gate);
      if (gate.arity != g->targets.size()) {
        throw DimensionError("gate '" + g->gate + "' arity mismatch");
      }
      for (std::size_t i = 0; i < g->targets.size(); ++i) {
        check_index(g->targets[i]);
        for (std::size_t j = 0; j < i; ++j) {
          if (g->targets[i] == g->targets[j]) throw IndexError("repeated gate target");
        }
      }
    } else if (const auto* n = std::get_if<NoiseStep>(&step)) {
      check_index(n->target);
      if (!(n->p >= 0.0 && n->p <= 1.0)) throw InvariantError("noise probability outside [0,1]");
    } else {
      const auto& m = std::get<MeasureStep>(step);
      if (k + 1 != ir.steps.size()) throw InvariantError("measure step must be last");
      if (m.all != m.qubits.empty()) {
        throw InvariantError("measure step must list qubits exactly when it is not 'all'");
      }
      for (std::size_t q : m.qubits) check_index(q);
    }
  }
}

std::vector<std::size_t> measured_qubits(const CircuitIr& ir) {
  std::vector<std::size_t> qubits;
  if (!ir.steps.empty()) {
    const auto* m = std::get_if<MeasureStep>(&ir.steps.back());
    if (m && !m->all) qubits = m->qubits;
  }
  if (qubits.empty()) {
    for (std::size_t q = 0; q < ir.n_qubits; ++q) qubits.push_back(q);
  }
  std::sort(qubits.begin(), qubits.end());
  return qubits;
}

CircuitIr inject_noise(const CircuitIr& ir, NoiseKind kind, double p) {
  CircuitIr out{ir.n_qubits, {}};
  for (const Step& step : ir.steps) {
    out.steps.push_back(step);
    if (const auto* g = std::get_if<GateStep>(&step)) {
      for (std::size_t t : g->targets) out.steps.emplace_back(NoiseStep{kind, p, t});
    }
  }
  validate(out);
  return out;
}

DensityOperator simulate(const CircuitIr& ir, const std::optional<DensityOperator>& input) {
  validate(ir);
  DensityOperator rho = input ? *input : DensityOperator::basis_state(ir.n_qubits, 0);
  if (rho.n_qubits() != ir.n_qubits) {
    throw DimensionError("simulate: input state has " + std::to_string(rho.n_qubits()) +
                         " qubits, circuit has " + std::to_string(ir.n_qubits));
  }
  for (const Step& step : ir.steps) {
    if (const auto* g = std::get_if<GateStep>(&step)) {
      rho = apply(lift_unitary(builtin_gate(g->gate), ir.n_qubits, g->targets), rho);
    } else if (const auto* n = std::get_if<NoiseStep>(&step)) {
      rho = apply(noise_channel(n->kind, n->p, ir.n_qubits, n->target), rho);
    } else {
      rho = apply(measurement_channel(ir.n_qubits, measured_qubits(ir)), rho);
    }
  }
  return rho;
}

Distribution outcome_distribution(const DensityOperator& rho) {
  std::vector<std::size_t> all(rho.n_qubits());
  for (std::size_t q = 0; q < all.size(); ++q) all[q] = q;
  return marginal_distribution(rho, all);
}

Distribution marginal_distribution(const DensityOperator& rho,
                                   const std::vector<std::size_t>& qubits) {
  const std::size_t n = rho.n_qubits();
  for (std::size_t q : qubits) {
    if (q >= n) throw IndexError("marginal_distribution: qubit " + std::to_string(q));
  }
  std::vector<double> probs(std::size_t{1} << qubits.size(), 0.0);
  for (std::size_t i = 0; i < rho.dim(); ++i) {
    std::size_t key = 0;
    for (std::size_t q : qubits) key = (key << 1) | ((i >> (n - 1 - q)) & 1);
    probs[key] += rho.matrix()(i, i).real();
  }
  Distribution dist;
  for (std::size_t k = 0; k < probs.size(); ++k) {
    if (probs[k] > kArithmeticTol) dist.emplace(bits_label(k, qubits.size()), probs[k]);
  }
  return dist;
}

Histogram sample_distribution(const Distribution& dist, std::uint64_t shots,
                              std::uint64_t seed) {
  if (shots == 0) throw InvariantError("sample: shots must be >= 1");
  if (dist.empty()) throw InvariantError("sample: empty distribution");
  std::vector<std::string> labels;
  std::vector<double> probs;
  for (const auto& [label, p] : dist) {
    labels.push_back(label);
    probs.push_back(p);
  }
  const std::vector<std::uint64_t> counts = kernels::draw_counts(probs, shots, seed);
  Histogram h{shots, seed, {}};
  for (std::size_t k = 0; k < labels.size(); ++k) {
    if (counts[k] > 0) h.counts.emplace(labels[k], counts[k]);
  }
  return h;
}

Histogram sample(const CircuitIr& ir, std::uint64_t shots, std::uint64_t seed) {
  return sample_distribution(marginal_distribution(simulate(ir), measured_qubits(ir)), shots,
                             seed);
}

}  // namespace qclsim
