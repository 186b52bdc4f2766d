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

#ifndef QCLSIM_COMMANDS_HPP_
#define QCLSIM_COMMANDS_HPP_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "qclsim/channels.hpp"

namespace qclsim::cli {

enum class OutputFormat { kTable, kCsv, kRecord };

struct NoiseSpec {
  NoiseKind kind;
  double p;
};

struct RunConfig {
  std::string subcommand;  // run | sample | eval | psa-table | chsh
  std::filesystem::path input;
  std::uint64_t shots = 1024;
  std::uint64_t seed = 0;
  std::optional<NoiseSpec> noise;
  OutputFormat format = OutputFormat::kTable;
  std::optional<double> tol;
  std::optional<std::filesystem::path> output;
};

// "<bitflip|depolarizing>:<p>"
NoiseSpec parse_noise_spec(std::string_view text);
OutputFormat parse_output_format(std::string_view text);

// Each command writes its result to `out` and throws on any error.
void cmd_run(const RunConfig& config, std::ostream& out);
void cmd_sample(const RunConfig& config, std::ostream& out);
void cmd_eval(const RunConfig& config, std::ostream& out);
void cmd_psa_table(const RunConfig& config, std::ostream& out);
void cmd_chsh(const RunConfig& config, std::ostream& out);

// Dispatches on config.subcommand. Results go to `out` (or to
// config.output when set), diagnostics to `err`. Returns 0 on success and
// 1 after printing a diagnostic.
int run_command(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace qclsim::cli

#endif  // QCLSIM_COMMANDS_HPP_
