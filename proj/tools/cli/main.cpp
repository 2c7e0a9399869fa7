/*
 * Copyright 2026 The gablab Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */


// gablab: batch driver for the verification tasks.
//
//   gablab run <spec.json> [--out report.json]
//   gablab enumerate --moduli 4,3
//   gablab sweep <spec.json> [--out sweep.csv]
//
// Exit codes: 0 every verdict passed, 1 some verdict failed, 2 input error.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "cli/experiment.hpp"
#include "gablab/error.hpp"

namespace {

constexpr int kExitFail = 1;
constexpr int kExitInput = 2;

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw gablab::cli::InputError("cannot write " + path);
  out << text;
  if (!out) throw gablab::cli::InputError("write failed for " + path);
}

}  // namespace

int main(int argc, char** argv) {
  using namespace gablab;
  CLI::App app{"Gabor duality and R-duality checks on finite abelian groups"};
  app.require_subcommand(1);

  std::string spec_path;
  std::string out_path;
  std::vector<int> moduli;

  CLI::App* run = app.add_subcommand("run", "Run every task of a spec and write a JSON report");
  run->add_option("spec", spec_path, "Experiment spec (JSON)")->required();
  run->add_option("--out", out_path, "Report path (stdout if omitted)");

  CLI::App* enumerate = app.add_subcommand("enumerate", "List subgroups, annihilators and sections");
  enumerate->add_option("--moduli", moduli, "Cyclic moduli, comma separated")
      ->required()
      ->delimiter(',');

  CLI::App* sweep = app.add_subcommand("sweep", "Write the theta sweep of every lattice pair as CSV");
  sweep->add_option("spec", spec_path, "Experiment spec (JSON)")->required();
  sweep->add_option("--out", out_path, "CSV path (stdout if omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (run->parsed()) {
      const cli::ExperimentSpec spec = cli::load_spec(spec_path);
      const cli::RunResult result = cli::run_experiment(spec);
      write_output(out_path, cli::report_json(spec, result, cli::utc_timestamp()).dump(2) + "\n");
      std::cerr << result.cases.size() << " cases: " << result.passed << " pass (" << result.skipped
                << " skipped), " << result.failed << " fail\n";
      return result.ok() ? 0 : kExitFail;
    }
    if (enumerate->parsed()) {
      try {
        const GroupSpec g = GroupSpec::make(moduli, max_order_from_env());
        write_output("", cli::enumerate_json(g).dump(2) + "\n");
      } catch (const Error& e) {
        throw cli::InputError(e.what());
      }
      return 0;
    }
    if (sweep->parsed()) {
      const cli::ExperimentSpec spec = cli::load_spec(spec_path);
      const cli::SweepOutput result = cli::run_sweep(spec);
      write_output(out_path, result.csv);
      return result.ok ? 0 : kExitFail;
    }
  } catch (const cli::InputError& e) {
    std::cerr << "gablab: " << e.what() << '\n';
    return kExitInput;
  } catch (const Error& e) {
    std::cerr << "gablab: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}
