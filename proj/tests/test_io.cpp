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

#include "doctest.h"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "dlab/circuit.hpp"
#include "dlab/frame_io.hpp"

using namespace dlab;

namespace {

struct CommandResult {
  int exit_code;
  std::string output;
};

CommandResult run_cli(const std::string& args) {
  const std::string command = std::string(DLAB_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  std::array<char, 512> buffer{};
  while (fgets(buffer.data(), buffer.size(), pipe)) output += buffer.data();
  const int status = pclose(pipe);
  return CommandResult{WEXITSTATUS(status), output};
}

std::string write_temp(const std::string& name, const std::string& text) {
  const std::string path = std::string("/tmp/dlab_test_") + name;
  std::ofstream out(path);
  out << text;
  return path;
}

const char* kBell = R"({
  "qubits": 2,
  "gates": [
    {"name": "h", "targets": [0]},
    {"name": "cnot", "targets": [0, 1]}
  ]
})";

}  // namespace

TEST_CASE("circuit files round trip") {
  const CircuitFile file = parse_circuit_file(kBell);
  CHECK(file.qubits == 2);
  CHECK(file.gates.size() == 2);
  CHECK(file.gates[1].name == "cnot");
  const CircuitFile again = parse_circuit_file(serialize_circuit_file(file));
  CHECK(again == file);

  // Explicit dims, including qudits.
  const CircuitFile mixed = parse_circuit_file(
      R"({"qubits": 2, "dims": [2, 3], "gates": [{"name": "h", "targets": [0]}]})");
  CHECK(mixed.layout().dim(1) == 3);
  CHECK(parse_circuit_file(serialize_circuit_file(mixed)) == mixed);
}

TEST_CASE("malformed circuits carry positions") {
  try {
    parse_circuit_file("{\"qubits\": 2,\n  \"gates\": [}");
    FAIL("expected CircuitParseError");
  } catch (const CircuitParseError& e) {
    CHECK(e.byte_offset() > 0);
    CHECK(e.line() == 2);
    CHECK(std::string(e.what()).find("byte") != std::string::npos);
  }

  CHECK_THROWS_AS(
      parse_circuit_file(R"({"qubits": 2, "dims": [2], "gates": []})"),
      CircuitParseError);
}

TEST_CASE("circuit validation errors") {
  const SystemLayout two({2, 2});
  CHECK_THROWS_AS(
      validate_circuit(Circuit{{GateOp{"warp", {0}, {}}}}, two),
      std::invalid_argument);
  CHECK_THROWS_AS(
      validate_circuit(Circuit{{GateOp{"cnot", {0}, {}}}}, two),
      std::invalid_argument);
  CHECK_THROWS_AS(
      validate_circuit(Circuit{{GateOp{"cnot", {0, 0}, {}}}}, two),
      std::invalid_argument);
  CHECK_THROWS_AS(
      validate_circuit(Circuit{{GateOp{"h", {9}, {}}}}, two),
      std::out_of_range);
  CHECK_THROWS_AS(
      validate_circuit(Circuit{{GateOp{"h", {0}, {0.5}}}}, two),
      std::invalid_argument);
  const SystemLayout mixed({2, 3});
  CHECK_THROWS_AS(
      validate_circuit(Circuit{{GateOp{"h", {1}, {}}}}, mixed),
      std::invalid_argument);
}

TEST_CASE("cli simulate on a bell pair") {
  const std::string path = write_temp("bell.json", kBell);
  const CommandResult both =
      run_cli("simulate " + path + " --picture both --observable ZZ");
  CHECK(both.exit_code == 0);
  CHECK(both.output.find("PASS") != std::string::npos);
  CHECK(both.output.find("heisenberg=1") != std::string::npos);

  const CommandResult single =
      run_cli("simulate " + path + " --picture heisenberg --observable ZZ "
              "--format json");
  CHECK(single.exit_code == 0);
  const nlohmann::json j = nlohmann::json::parse(single.output);
  CHECK(j.at("results")[0].at("heisenberg").get<double>() ==
        doctest::Approx(1.0).epsilon(1e-9));

  const CommandResult csv =
      run_cli("simulate " + path + " --observable ZZ --format csv");
  CHECK(csv.exit_code == 0);
  CHECK(csv.output.rfind("observable,picture,value\n", 0) == 0);
}

TEST_CASE("cli surfaces parse errors with positions and exit code 2") {
  const std::string path = write_temp("broken.json", "{\"qubits\": 2, \"gates\": [}");
  const CommandResult result = run_cli("simulate " + path);
  CHECK(result.exit_code == 2);
  CHECK(result.output.find("byte") != std::string::npos);

  const CommandResult missing = run_cli("simulate /tmp/definitely_not_there.json");
  CHECK(missing.exit_code == 2);

  const CommandResult usage = run_cli("simulate");
  CHECK(usage.exit_code == 2);

  const CommandResult unknown_suite = run_cli("verify warp");
  CHECK(unknown_suite.exit_code == 2);
}

TEST_CASE("cli verify and protocol round trips") {
  const CommandResult theorem = run_cli("verify theorem1 --cases 10 --format json");
  CHECK(theorem.exit_code == 0);
  const nlohmann::json j = nlohmann::json::parse(theorem.output);
  CHECK(j.at("pass").get<bool>());
  CHECK(j.at("metrics").at("forward_same_class").get<std::size_t>() == 10);

  const CommandResult sdc = run_cli("protocol sdc --i 1 --j 0 --format json");
  CHECK(sdc.exit_code == 0);
  const nlohmann::json sj = nlohmann::json::parse(sdc.output);
  CHECK(sj.at("outcome").at("decoded_i").get<int>() == 1);
  CHECK(sj.at("outcome").at("decoded_j").get<int>() == 0);

  const CommandResult teleport =
      run_cli("protocol teleport --alpha 0.6 --beta 0.8i --decohere --format json");
  CHECK(teleport.exit_code == 0);
  const nlohmann::json tj = nlohmann::json::parse(teleport.output);
  CHECK(tj.at("outcome").at("fidelity").get<double>() >= 1.0 - 1e-9);

  const CommandResult bad = run_cli("protocol teleport --alpha 1 --beta 1");
  CHECK(bad.exit_code == 2);
}

TEST_CASE("the dimension cap honors DESCRIPTOR_LAB_MAX_DIM") {
  const std::string path = write_temp("bell3.json", kBell);
  // A 2-qubit circuit needs dimension 4; cap it at 2 and the layout must be
  // rejected before any engine runs.
  const CommandResult capped =
      run_cli("simulate " + path + " --picture schrodinger");
  CHECK(capped.exit_code == 0);
  const std::string env_prefix = "DESCRIPTOR_LAB_MAX_DIM=2 ";
  const std::string command =
      env_prefix + std::string(DLAB_CLI_PATH) + " simulate " + path + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  std::array<char, 512> buffer{};
  while (fgets(buffer.data(), buffer.size(), pipe)) output += buffer.data();
  const int status = pclose(pipe);
  CHECK(WEXITSTATUS(status) == 2);
  CHECK(output.find("cap") != std::string::npos);
}

TEST_CASE("cli reports are deterministic for a fixed seed") {
  const CommandResult a = run_cli("verify recovery --seed 5 --cases 5 --format json");
  const CommandResult b = run_cli("verify recovery --seed 5 --cases 5 --format json");
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
}

TEST_CASE("cli frame dumps reimport bit-exact") {
  const std::string circuit = write_temp("bell2.json", kBell);
  const std::string dump = "/tmp/dlab_test_frame.json";
  const CommandResult result = run_cli("simulate " + circuit +
                                       " --picture heisenberg --dump-frame " + dump +
                                       " --dense-frame");
  CHECK(result.exit_code == 0);

  std::ifstream in(dump);
  REQUIRE(in.good());
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  const DescriptorFrame imported = frame_from_string(text);
  CHECK(imported.time == 2);
  // Re-export reproduces the document byte-for-byte.
  CHECK(frame_to_string(imported, true) == text);
}
