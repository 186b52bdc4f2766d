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

#include "qclsim/commands.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "qclsim/circuit.hpp"
#include "qclsim/errors.hpp"
#include "qclsim/input_files.hpp"
#include "qclsim/psa.hpp"
#include "qclsim/qcl.hpp"

namespace qclsim::cli {

namespace {

std::string fixed6(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", value);
  return buf;
}

CircuitIr load_circuit(const RunConfig& config) {
  CircuitIr ir;
  try {
    ir = parse_circuit(read_text_file(config.input));
  } catch (const ParseError& e) {
    throw std::runtime_error(config.input.string() + ": " + e.what());
  }
  if (config.noise) ir = inject_noise(ir, config.noise->kind, config.noise->p);
  return ir;
}

std::filesystem::path base_dir(const RunConfig& config) {
  return config.input.has_parent_path() ? config.input.parent_path()
                                        : std::filesystem::path(".");
}

double tolerance(const RunConfig& config) { return config.tol.value_or(kStructuralTol); }

template <typename Fn>
auto with_path_context(const RunConfig& config, Fn&& fn) {
  try {
    return fn();
  } catch (const ParseError& e) {
    throw std::runtime_error(config.input.string() + ": " + e.what());
  }
}

}  // namespace

NoiseSpec parse_noise_spec(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw std::invalid_argument("noise spec must look like <bitflip|depolarizing>:<p>");
  }
  const NoiseKind kind = parse_noise_kind(text.substr(0, colon));
  const std::string p_text(text.substr(colon + 1));
  std::size_t used = 0;
  double p = 0.0;
  try {
    p = std::stod(p_text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != p_text.size()) {
    throw std::invalid_argument("noise probability '" + p_text + "' is not a number");
  }
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("noise probability must lie in [0,1]");
  return {kind, p};
}

OutputFormat parse_output_format(std::string_view text) {
  if (text == "table") return OutputFormat::kTable;
  if (text == "csv") return OutputFormat::kCsv;
  if (text == "record") return OutputFormat::kRecord;
  throw std::invalid_argument("unknown format '" + std::string(text) + "'");
}

void cmd_run(const RunConfig& config, std::ostream& out) {
  const CircuitIr ir = load_circuit(config);
  const Distribution dist = marginal_distribution(simulate(ir), measured_qubits(ir));
  switch (config.format) {
    case OutputFormat::kTable:
      for (const auto& [label, p] : dist) out << label << ' ' << fixed6(p) << '\n';
      break;
    case OutputFormat::kCsv:
      out << "outcome,probability\n";
      for (const auto& [label, p] : dist) out << label << ',' << fixed6(p) << '\n';
      break;
    case OutputFormat::kRecord: {
      nlohmann::json record = {{"distribution", dist}};
      out << record.dump() << '\n';
      break;
    }
  }
}

void cmd_sample(const RunConfig& config, std::ostream& out) {
  const CircuitIr ir = load_circuit(config);
  const Histogram h = sample(ir, config.shots, config.seed);
  switch (config.format) {
    case OutputFormat::kTable:
      out << "shots " << h.shots << '\n' << "seed " << h.seed << '\n';
      for (const auto& [label, count] : h.counts) out << label << ' ' << count << '\n';
      break;
    case OutputFormat::kCsv:
      out << "# shots=" << h.shots << " seed=" << h.seed << '\n' << "outcome,count\n";
      for (const auto& [label, count] : h.counts) out << label << ',' << count << '\n';
      break;
    case OutputFormat::kRecord: {
      nlohmann::json record = {{"shots", h.shots}, {"seed", h.seed}, {"counts", h.counts}};
      out << record.dump() << '\n';
      break;
    }
  }
}

void cmd_eval(const RunConfig& config, std::ostream& out) {
  const FormulaFile file = with_path_context(
      config, [&] { return parse_formula_file(read_text_file(config.input), base_dir(config)); });
  const double p = eval_formula(*file.formula, file.bindings);
  if (config.format == OutputFormat::kRecord) {
    nlohmann::json record = {{"formula", to_string(*file.formula)}, {"probability", p}};
    out << record.dump() << '\n';
  } else {
    out << fixed6(p) << '\n';
  }
}

void cmd_psa_table(const RunConfig& config, std::ostream& out) {
  const double tol = tolerance(config);
  const PsaInput input = with_path_context(config, [&] {
    return parse_psa_file(read_text_file(config.input), base_dir(config), tol);
  });
  const auto table = global_valuation(input.psa, input.contexts);

  std::vector<double> row_sums(input.contexts.size(), 0.0);
  for (const ValuationEntry& e : table) row_sums[e.context] += e.intensity;
  for (std::size_t c = 0; c < row_sums.size(); ++c) {
    if (std::abs(row_sums[c] - 1.0) > tol) {
      throw InvariantError("context '" + input.context_names[c] + "' intensities sum to " +
                           std::to_string(row_sums[c]));
    }
  }

  switch (config.format) {
    case OutputFormat::kTable:
      for (const ValuationEntry& e : table) {
        out << input.context_names[e.context] << ' ' << e.label << ' ' << fixed6(e.intensity)
            << '\n';
      }
      break;
    case OutputFormat::kCsv:
      out << "context,projector,intensity\n";
      for (const ValuationEntry& e : table) {
        out << input.context_names[e.context] << ',' << e.label << ',' << fixed6(e.intensity)
            << '\n';
      }
      break;
    case OutputFormat::kRecord: {
      nlohmann::json rows = nlohmann::json::array();
      for (const ValuationEntry& e : table) {
        rows.push_back({{"context", input.context_names[e.context]},
                        {"projector", e.label},
                        {"intensity", e.intensity}});
      }
      out << nlohmann::json{{"rows", rows}}.dump() << '\n';
      break;
    }
  }
}

void cmd_chsh(const RunConfig& config, std::ostream& out) {
  const std::string name = config.input.string();
  const ChshInput input =
      is_chsh_preset(name) ? chsh_preset(name) : with_path_context(config, [&] {
        return parse_chsh_file(read_text_file(config.input), base_dir(config), tolerance(config));
      });
  const double s = chsh_value(input.rho, input.settings);
  if (config.format == OutputFormat::kRecord) {
    const ChshSettings& o = input.settings;
    nlohmann::json record = {{"S", s},
                             {"E_ab", correlator(input.rho, o.a, o.b)},
                             {"E_ab'", correlator(input.rho, o.a, o.b_prime)},
                             {"E_a'b", correlator(input.rho, o.a_prime, o.b)},
                             {"E_a'b'", correlator(input.rho, o.a_prime, o.b_prime)}};
    out << record.dump() << '\n';
  } else {
    out << fixed6(s) << '\n';
  }
}

int run_command(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.subcommand == "sample" && config.shots == 0) {
      throw std::invalid_argument("--shots must be >= 1");
    }
    std::ostringstream buffer;
    if (config.subcommand == "run") {
      cmd_run(config, buffer);
    } else if (config.subcommand == "sample") {
      cmd_sample(config, buffer);
    } else if (config.subcommand == "eval") {
      cmd_eval(config, buffer);
    } else if (config.subcommand == "psa-table") {
      cmd_psa_table(config, buffer);
    } else if (config.subcommand == "chsh") {
      cmd_chsh(config, buffer);
    } else {
      throw std::invalid_argument("unknown subcommand '" + config.subcommand + "'");
    }
    if (config.output) {
      std::ofstream file(*config.output, std::ios::binary | std::ios::trunc);
      if (!file) throw std::runtime_error("cannot write '" + config.output->string() + "'");
      file << buffer.str();
    } else {
      out << buffer.str();
    }
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace qclsim::cli
