// Copyright 2026 The hubcast developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end.  All behavior lives in hubcast/cli.hpp; this file
// only maps flags onto the argument structs and exit codes.

#include <exception>
#include <iostream>

#include <CLI11.hpp>

#include "hubcast/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "hubcast: hub-based entanglement allocation — verification, resource\n"
      "comparison, sampling, circuit export, and block-encoding checks"};
  app.require_subcommand(1);

  hubcast::cli::VerifyArgs verify_args;
  CLI::App* verify = app.add_subcommand(
      "verify", "check every measurement branch restores the target exactly");
  verify->add_option("--state", verify_args.state, "state family: w or ghz")
      ->capture_default_str();
  verify->add_option("--n", verify_args.n, "number of end nodes")
      ->capture_default_str();
  verify->add_option("--corrupt-node", verify_args.corrupt_node,
                     "sabotage this node's recovery (negative test)");
  verify->add_option("--out", verify_args.out, "write JSON report here");
  verify->add_flag("--json", verify_args.json, "print the JSON report");

  hubcast::cli::CompareArgs compare_args;
  CLI::App* compare = app.add_subcommand(
      "compare", "resource table: hub protocols vs teleportation baseline");
  compare->add_option("--n", compare_args.n, "number of end nodes")
      ->capture_default_str();
  compare->add_option("--out", compare_args.out, "write JSON report here");
  compare->add_flag("--json", compare_args.json, "print the JSON report");

  hubcast::cli::RunArgs run_args;
  CLI::App* run = app.add_subcommand(
      "run", "sample measurement outcomes and show the classical messages");
  run->add_option("--state", run_args.state, "state family: w or ghz")
      ->capture_default_str();
  run->add_option("--n", run_args.n, "number of end nodes")
      ->capture_default_str();
  run->add_option("--shots", run_args.shots, "number of samples")
      ->capture_default_str();
  run->add_option("--seed", run_args.seed, "RNG seed")->capture_default_str();
  run->add_option("--out", run_args.out, "write JSON report here");
  run->add_flag("--json", run_args.json, "print the JSON report");

  hubcast::cli::CircuitArgs circuit_args;
  CLI::App* circuit = app.add_subcommand(
      "circuit", "export a central-unitary circuit after an equivalence check");
  circuit->add_option("--state", circuit_args.state, "state family: w or ghz")
      ->capture_default_str();
  circuit->add_option("--n", circuit_args.n, "number of end nodes")
      ->capture_default_str();
  circuit->add_option("--variant", circuit_args.variant,
                      "direct | recursive | ladder3 | ghz (default by state)");
  circuit->add_option("--format", circuit_args.format, "export format")
      ->capture_default_str();
  circuit->add_option("--out", circuit_args.out, "write the gate list here");
  circuit->add_flag("--json", circuit_args.json, "print the JSON report");

  hubcast::cli::BlockencArgs blockenc_args;
  CLI::App* blockenc = app.add_subcommand(
      "blockenc", "build the LCU block encoding and print its certificate");
  blockenc->add_option("--n", blockenc_args.n, "number of end nodes")
      ->capture_default_str();
  blockenc->add_option("--out", blockenc_args.out, "write JSON report here");
  blockenc->add_flag("--json", blockenc_args.json, "print the JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return hubcast::cli::kExitUsage;
  }

  try {
    if (verify->parsed()) return hubcast::cli::cmd_verify(verify_args, std::cout);
    if (compare->parsed())
      return hubcast::cli::cmd_compare(compare_args, std::cout);
    if (run->parsed()) return hubcast::cli::cmd_run(run_args, std::cout);
    if (circuit->parsed())
      return hubcast::cli::cmd_circuit(circuit_args, std::cout);
    if (blockenc->parsed())
      return hubcast::cli::cmd_blockenc(blockenc_args, std::cout);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return hubcast::cli::kExitUsage;
  }
  return hubcast::cli::kExitUsage;
}
