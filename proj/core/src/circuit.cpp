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

#include "dlab/circuit.hpp"

#include <set>

namespace dlab {

CircuitParseError::CircuitParseError(const std::string& message, std::size_t byte,
                                     std::size_t line, std::size_t column)
    : std::runtime_error(message), byte_(byte), line_(line), column_(column) {}

SystemLayout CircuitFile::layout() const {
  if (dims.empty()) {
    return SystemLayout(std::vector<std::size_t>(qubits, 2));
  }
  return SystemLayout(dims);
}

void to_json(nlohmann::json& j, const GateOp& op) {
  j = nlohmann::json{{"name", op.name}, {"targets", op.targets}};
  if (!op.params.empty()) j["params"] = op.params;
}

void from_json(const nlohmann::json& j, GateOp& op) {
  op.name = j.at("name").get<std::string>();
  op.targets = j.at("targets").get<std::vector<std::size_t>>();
  op.params = j.value("params", std::vector<double>{});
}

void to_json(nlohmann::json& j, const CircuitFile& file) {
  j = nlohmann::json{{"qubits", file.qubits}, {"gates", file.gates}};
  if (!file.dims.empty()) j["dims"] = file.dims;
}

void from_json(const nlohmann::json& j, CircuitFile& file) {
  file.qubits = j.at("qubits").get<std::size_t>();
  file.dims = j.value("dims", std::vector<std::size_t>{});
  file.gates = j.value("gates", std::vector<GateOp>{});
  if (!file.dims.empty() && file.dims.size() != file.qubits) {
    throw std::invalid_argument(
        "circuit file: 'dims' length must equal 'qubits'");
  }
}

namespace {

void locate(const std::string& text, std::size_t byte, std::size_t* line,
            std::size_t* column) {
  *line = 1;
  *column = 1;
  for (std::size_t k = 0; k < byte && k < text.size(); ++k) {
    if (text[k] == '\n') {
      ++*line;
      *column = 1;
    } else {
      ++*column;
    }
  }
}

}  // namespace

CircuitFile parse_circuit_file(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 0, column = 0;
    locate(text, e.byte, &line, &column);
    throw CircuitParseError("circuit parse error at byte " + std::to_string(e.byte) +
                                " (line " + std::to_string(line) + ", column " +
                                std::to_string(column) + "): " + e.what(),
                            e.byte, line, column);
  }
  try {
    return j.get<CircuitFile>();
  } catch (const std::exception& e) {
    throw CircuitParseError(std::string("circuit schema error: ") + e.what(), 0, 1, 1);
  }
}

std::string serialize_circuit_file(const CircuitFile& file, int indent) {
  return nlohmann::json(file).dump(indent);
}

void validate_circuit(const Circuit& circuit, const SystemLayout& layout) {
  for (const GateOp& op : circuit.gates) {
    const GateSignature sig = gate_signature(op.name);
    if (op.targets.size() != sig.arity) {
      throw std::invalid_argument("gate " + op.name + ": expected " +
                                  std::to_string(sig.arity) + " target(s)");
    }
    if (op.params.size() != sig.param_count) {
      throw std::invalid_argument("gate " + op.name + ": expected " +
                                  std::to_string(sig.param_count) + " parameter(s)");
    }
    std::set<std::size_t> seen;
    for (std::size_t t : op.targets) {
      if (t >= layout.size()) {
        throw std::out_of_range("gate " + op.name + ": target " +
                                std::to_string(t) + " out of range");
      }
      if (!seen.insert(t).second) {
        throw std::invalid_argument("gate " + op.name + ": duplicate target");
      }
      if (!layout.is_qubit(t)) {
        throw std::invalid_argument("gate " + op.name + ": target " +
                                    std::to_string(t) + " is not a qubit");
      }
    }
  }
}

}  // namespace dlab
