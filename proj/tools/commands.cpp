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

#include "commands.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "dlab/frame_io.hpp"
#include "dlab/pictures.hpp"
#include "dlab/protocols.hpp"
#include "dlab/tensor.hpp"

namespace dlab::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open file: " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot write file: " + path);
  }
  out << text;
}

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

/// Widen a sum so single-letter shorthand works: observables must span the
/// whole layout.
PauliSum parse_observable(const std::string& text, std::size_t width) {
  PauliSum sum = PauliSum::parse(text);
  if (sum.n_qubits() != width) {
    throw std::invalid_argument("observable '" + text + "' must have " +
                                std::to_string(width) + " letters");
  }
  return sum;
}

}  // namespace

int cmd_simulate(const SimulateParams& params) {
  const CircuitFile file = parse_circuit_file(read_file(params.circuit_path));
  const SystemLayout layout = file.layout();
  const Circuit circuit = file.circuit();
  validate_circuit(circuit, layout);

  if (params.picture != "both" && params.picture != "heisenberg" &&
      params.picture != "schrodinger") {
    throw std::invalid_argument("unknown picture: " + params.picture);
  }

  std::vector<std::string> observable_texts = params.observables;
  if (observable_texts.empty()) {
    // Default: Z on the first qubit subsystem.
    std::string letters(layout.size(), 'I');
    for (std::size_t s = 0; s < layout.size(); ++s) {
      if (layout.is_qubit(s)) {
        letters[s] = 'Z';
        break;
      }
    }
    observable_texts.push_back(letters);
  }

  nlohmann::json results = nlohmann::json::array();
  std::string csv = "observable,picture,value\n";
  bool all_pass = true;

  const bool want_h = params.picture != "schrodinger";
  const bool want_s = params.picture != "heisenberg";
  DescriptorFrame frame{layout, Vector(), {}, 0, Matrix()};
  SchrodingerState state{layout, Vector()};
  if (want_h) frame = run_heisenberg(circuit, layout);
  if (want_s) state = schrodinger_run(circuit, layout);

  for (const std::string& text : observable_texts) {
    const PauliSum observable = parse_observable(text, layout.size());
    nlohmann::json entry{{"observable", text}};
    if (params.picture == "both") {
      const EquivalenceTriple triple =
          instrumental_equivalence_check(circuit, observable, layout);
      entry["schrodinger"] = triple.schrodinger;
      entry["agnostic"] = triple.agnostic;
      entry["heisenberg"] = triple.heisenberg;
      entry["max_difference"] = triple.max_difference;
      entry["pass"] = triple.pass;
      all_pass = all_pass && triple.pass;
      csv += text + ",schrodinger," + num(triple.schrodinger) + "\n";
      csv += text + ",agnostic," + num(triple.agnostic) + "\n";
      csv += text + ",heisenberg," + num(triple.heisenberg) + "\n";
    } else if (params.picture == "heisenberg") {
      const double value = expectation(frame, observable);
      entry["heisenberg"] = value;
      csv += text + ",heisenberg," + num(value) + "\n";
    } else {
      ComponentMap initial;
      for (const auto& [letters, coeff] : observable.terms()) {
        for (std::size_t q = 0; q < letters.size(); ++q) {
          if (letters[q] == Pauli::I || initial.count(q)) continue;
          initial[q] = XZComponents{tensor_embed(pauli_x(), {q}, layout),
                                    tensor_embed(pauli_z(), {q}, layout)};
        }
      }
      const double value = born_expectation(
          state, pauli_eval(observable, initial, layout.total_dim()));
      entry["schrodinger"] = value;
      csv += text + ",schrodinger," + num(value) + "\n";
    }
    results.push_back(std::move(entry));
  }

  if (!params.dump_frame_path.empty()) {
    if (!want_h) {
      throw std::invalid_argument("--dump-frame needs the heisenberg engine");
    }
    write_file(params.dump_frame_path,
               frame_to_string(frame, params.dense_frame));
  }

  const nlohmann::json output{{"command", "simulate"},
                              {"file", params.circuit_path},
                              {"picture", params.picture},
                              {"tolerance", tol::expectation},
                              {"results", results},
                              {"pass", all_pass}};
  if (params.format == "json") {
    std::cout << output.dump(2) << "\n";
  } else if (params.format == "csv") {
    std::cout << csv;
  } else {
    for (const auto& entry : results) {
      std::cout << "observable " << entry.at("observable").get<std::string>() << ":";
      for (const char* key : {"schrodinger", "agnostic", "heisenberg"}) {
        if (entry.contains(key)) {
          std::cout << " " << key << "=" << num(entry.at(key).get<double>());
        }
      }
      if (entry.contains("pass")) {
        std::cout << (entry.at("pass").get<bool>() ? "  PASS" : "  FAIL");
      }
      std::cout << "\n";
    }
  }
  if (params.picture == "both" && !all_pass) return kExitCheckFailed;
  return kExitPass;
}

int cmd_verify(const VerifyParams& params) {
  Report report;
  if (params.suite == "equivalence") {
    report = run_equivalence_suite(params.seed, params.cases ? params.cases : 100);
  } else if (params.suite == "locality") {
    report = run_locality_suite(params.seed, params.cases ? params.cases : 100);
  } else if (params.suite == "theorem1") {
    report = run_theorem1_suite(params.seed, params.cases ? params.cases : 200);
  } else if (params.suite == "noniso") {
    report = run_noniso_suite(params.seed, params.cases ? params.cases : 100);
  } else if (params.suite == "recovery") {
    report = run_recovery_suite(params.seed, params.cases ? params.cases : 100);
  } else {
    throw std::invalid_argument("unknown suite: " + params.suite);
  }

  if (params.format == "json") {
    std::cout << report.to_json().dump(2) << "\n";
  } else if (params.format == "csv") {
    std::cout << "metric,value\n";
    for (const auto& [key, value] : report.metrics.items()) {
      std::cout << key << "," << value.dump() << "\n";
    }
    std::cout << "pass," << (report.pass ? "1" : "0") << "\n";
  } else {
    std::cout << "check: " << report.check << "\n";
    std::cout << "metrics: " << report.metrics.dump() << "\n";
    std::cout << (report.pass ? "PASS" : "FAIL") << "\n";
  }
  return report.pass ? kExitPass : kExitCheckFailed;
}

int cmd_protocol(const ProtocolParams& params) {
  protocols::ProtocolReport report;
  if (params.name == "sdc") {
    report = protocols::superdense_coding(params.i, params.j);
  } else if (params.name == "teleport") {
    protocols::TeleportOptions options;
    options.decohere_channel = params.decohere;
    options.hops = params.hops;
    report = protocols::teleportation(parse_complex(params.alpha),
                                      parse_complex(params.beta), options);
  } else if (params.name == "branching") {
    report = protocols::local_branching_demo();
  } else if (params.name == "chsh") {
    protocols::ChshAngles angles;
    angles.a = params.a;
    angles.a_prime = params.a_prime;
    angles.b = params.b;
    angles.b_prime = params.b_prime;
    report = protocols::chsh_game(angles);
  } else {
    throw std::invalid_argument("unknown protocol: " + params.name);
  }

  if (!params.csv_path.empty()) {
    write_file(params.csv_path, report.branch_csv());
  }

  if (params.format == "json") {
    std::cout << report.to_json().dump(2) << "\n";
  } else if (params.format == "csv") {
    std::cout << report.branch_csv();
  } else {
    std::cout << "protocol: " << report.protocol << "\n";
    std::cout << "steps: " << report.steps.size() << " (all audits "
              << (report.pass ? "consistent" : "NOT consistent") << ")\n";
    std::cout << "outcome: " << report.outcome.dump() << "\n";
    std::cout << (report.pass ? "PASS" : "FAIL") << "\n";
  }
  return report.pass ? kExitPass : kExitCheckFailed;
}

}  // namespace dlab::cli
