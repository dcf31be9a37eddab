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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "dlab/gates.hpp"
#include "dlab/system_layout.hpp"

namespace dlab {

/// Ordered gate list, the shared input to both picture engines.
struct Circuit {
  std::vector<GateOp> gates;

  bool operator==(const Circuit& other) const = default;
};

/// Parse failure with position information.
class CircuitParseError : public std::runtime_error {
 public:
  CircuitParseError(const std::string& message, std::size_t byte,
                    std::size_t line, std::size_t column);
  std::size_t byte_offset() const { return byte_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t byte_;
  std::size_t line_;
  std::size_t column_;
};

/// On-disk circuit description: subsystem count (field "qubits"), optional
/// per-subsystem dimension list and the gate sequence.
struct CircuitFile {
  std::size_t qubits = 0;
  std::vector<std::size_t> dims;  // empty means all qubits
  std::vector<GateOp> gates;

  SystemLayout layout() const;
  Circuit circuit() const { return Circuit{gates}; }

  bool operator==(const CircuitFile& other) const = default;
};

void to_json(nlohmann::json& j, const GateOp& op);
void from_json(const nlohmann::json& j, GateOp& op);
void to_json(nlohmann::json& j, const CircuitFile& file);
void from_json(const nlohmann::json& j, CircuitFile& file);

/// Parse JSON text into a CircuitFile. Malformed JSON or schema violations
/// raise CircuitParseError carrying the byte offset plus line/column.
CircuitFile parse_circuit_file(const std::string& text);

std::string serialize_circuit_file(const CircuitFile& file, int indent = 2);

/// Check every gate against the layout: known name, parameter and target
/// arity, distinct in-range targets, qubit-dimensional targets.
void validate_circuit(const Circuit& circuit, const SystemLayout& layout);

}  // namespace dlab
