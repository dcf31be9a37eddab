// Copyright 2026 The descriptor-lab Authors
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

#include <exception>
#include <iostream>

#include "CLI11.hpp"

#include "commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"descriptor-lab: Heisenberg-picture descriptor simulation"};
  app.require_subcommand(1);

  dlab::cli::SimulateParams simulate;
  CLI::App* sim = app.add_subcommand(
      "simulate", "Run a circuit file through one or both picture engines");
  sim->add_option("file", simulate.circuit_path, "circuit JSON file")->required();
  sim->add_option("--picture", simulate.picture,
                  "heisenberg | schrodinger | both (default both)");
  sim->add_option("--observable", simulate.observables,
                  "PauliSum text, e.g. \"ZZ\" or \"0.5*XX;0.5*ZZ\" (repeatable)");
  sim->add_option("--format", simulate.format, "text | json | csv");
  sim->add_option("--dump-frame", simulate.dump_frame_path,
                  "write the final descriptor frame snapshot to this path");
  sim->add_flag("--dense-frame", simulate.dense_frame,
                "force dense components in the frame snapshot");

  dlab::cli::VerifyParams verify;
  CLI::App* ver = app.add_subcommand(
      "verify", "Run a property suite: equivalence | locality | theorem1 | "
                "noniso | recovery");
  ver->add_option("suite", verify.suite, "suite name")->required();
  ver->add_option("--seed", verify.seed, "base seed (default 42)");
  ver->add_option("--cases", verify.cases, "case count (default per suite)");
  ver->add_option("--format", verify.format, "text | json | csv");

  dlab::cli::ProtocolParams protocol;
  CLI::App* pro = app.add_subcommand(
      "protocol", "Run a protocol: sdc | teleport | branching | chsh");
  pro->add_option("name", protocol.name, "protocol name")->required();
  pro->add_option("--i", protocol.i, "sdc: first bit");
  pro->add_option("--j", protocol.j, "sdc: second bit");
  pro->add_option("--alpha", protocol.alpha, "teleport: amplitude of |0>");
  pro->add_option("--beta", protocol.beta,
                  "teleport: amplitude of |1>, e.g. \"0.8i\"");
  pro->add_flag("--decohere", protocol.decohere,
                "teleport: fully dephase the channel");
  pro->add_option("--hops", protocol.hops,
                  "teleport: transmission legs incl. Alice's write and Bob's "
                  "read; n-1 carrier pairs (default 2)");
  pro->add_option("--a", protocol.a, "chsh: Alice angle for setting 0");
  pro->add_option("--a-prime", protocol.a_prime, "chsh: Alice angle for setting 1");
  pro->add_option("--b", protocol.b, "chsh: Bob angle for setting 0");
  pro->add_option("--b-prime", protocol.b_prime, "chsh: Bob angle for setting 1");
  pro->add_option("--format", protocol.format, "text | json | csv");
  pro->add_option("--csv", protocol.csv_path, "write branch measures CSV here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return dlab::cli::kExitUsage;
  }

  try {
    if (sim->parsed()) return dlab::cli::cmd_simulate(simulate);
    if (ver->parsed()) return dlab::cli::cmd_verify(verify);
    if (pro->parsed()) return dlab::cli::cmd_protocol(protocol);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return dlab::cli::kExitUsage;
  }
  return dlab::cli::kExitUsage;
}
