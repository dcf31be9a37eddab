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
#include <string>
#include <vector>

#include "dlab/types.hpp"

namespace dlab {

/// One gate application: a library gate name (case-insensitive), the
/// subsystems it acts on (order matters for two-qubit gates) and any
/// real angle parameters, in radians.
struct GateOp {
  std::string name;
  std::vector<std::size_t> targets;
  std::vector<double> params;

  bool operator==(const GateOp& other) const = default;
};

struct GateSignature {
  std::size_t arity;        // number of target qubits
  std::size_t param_count;  // number of angle parameters
};

/// Library gates: h, x, y, z, s, t, rx, ry, rz, cnot, cz, swap, cp.
bool is_known_gate(const std::string& name);

/// Signature lookup; throws std::invalid_argument for unknown names.
GateSignature gate_signature(const std::string& name);

/// The gate's unitary on its own 2^arity-dimensional space, with the first
/// listed target as the leftmost factor (cnot/cz/cp: control first).
/// Throws std::invalid_argument for unknown names or wrong parameter count.
Matrix gate_matrix(const std::string& name, const std::vector<double>& params = {});
Matrix gate_matrix(const GateOp& op);

// Fixed single-qubit operators, handy as literals.
Matrix pauli_x();
Matrix pauli_y();
Matrix pauli_z();
Matrix identity(std::size_t dim);

}  // namespace dlab
