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

// qclsim command-line front end.
//
//   qclsim run       <circuit.qc>   exact outcome distribution
//   qclsim sample    <circuit.qc>   seeded shot histogram
//   qclsim eval      <formula.qcl>  truth probability of a formula
//   qclsim psa-table <psa.txt>      intensity table over contexts
//   qclsim chsh      <file|preset>  CHSH value
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "qclsim/commands.hpp"

int main(int argc, char** argv) {
  using qclsim::cli::RunConfig;

  CLI::App app{"Density-operator circuit simulator and quantum computational logic evaluator"};
  app.require_subcommand(1);

  RunConfig config;
  std::string noise, format = "table", output;
  double tol = 0.0;

  auto add_common = [&](CLI::App* sub, const std::string& input_help) {
    sub->add_option("input", config.input, input_help)->required();
    sub->add_option("--seed", config.seed, "PRNG seed (echoed in the output)");
    sub->add_option("--format", format, "table | csv | record")
        ->check(CLI::IsMember({"table", "csv", "record"}));
    sub->add_option("--tol", tol, "structural tolerance override")->check(CLI::PositiveNumber);
    sub->add_option("--output", output, "write results to this path instead of stdout");
  };

  CLI::App* run = app.add_subcommand("run", "print the exact outcome distribution of a circuit");
  add_common(run, "circuit file");
  run->add_option("--noise", noise, "inject <bitflip|depolarizing>:<p> after every gate");

  CLI::App* sample = app.add_subcommand("sample", "draw a seeded shot histogram from a circuit");
  add_common(sample, "circuit file");
  sample->add_option("--shots", config.shots, "number of shots")->check(CLI::PositiveNumber);
  sample->add_option("--noise", noise, "inject <bitflip|depolarizing>:<p> after every gate");

  CLI::App* eval = app.add_subcommand("eval", "truth probability of a formula file");
  add_common(eval, "formula file");

  CLI::App* psa = app.add_subcommand("psa-table", "intensive valuation over contexts");
  add_common(psa, "PSA input file");

  CLI::App* chsh = app.add_subcommand("chsh", "CHSH value of a state and four observables");
  add_common(chsh, "CHSH input file, or a preset: singlet-optimal | product");

  CLI11_PARSE(app, argc, argv);

  config.subcommand = app.get_subcommands().front()->get_name();
  try {
    config.format = qclsim::cli::parse_output_format(format);
    if (!noise.empty()) config.noise = qclsim::cli::parse_noise_spec(noise);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  if (tol > 0.0) config.tol = tol;
  if (!output.empty()) config.output = output;

  return qclsim::cli::run_command(config, std::cout, std::cerr);
}
