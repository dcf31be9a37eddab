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
#include <vector>

#include "dlab/circuit.hpp"
#include "dlab/system_layout.hpp"
#include "dlab/types.hpp"

namespace dlab {

/// A time-evolving state vector over a fixed layout; unit norm throughout.
struct SchrodingerState {
  SystemLayout layout;
  Vector amplitudes;
};

/// |0...0> on the given layout.
SchrodingerState initial_state(const SystemLayout& layout);

/// Apply one gate in place (validated against the layout).
void apply_gate(SchrodingerState& state, const GateOp& op);

/// Run the circuit on |0...0>, applying gates in order.
SchrodingerState schrodinger_run(const Circuit& circuit,
                                 const SystemLayout& layout);

/// Ordered product of embedded gates: the full evolution operator U_t such
/// that schrodinger_run(circuit) = U_t |0...0>.
Matrix total_unitary(const Circuit& circuit, const SystemLayout& layout);

/// <psi| O |psi> for a Hermitian observable. The imaginary residue must stay
/// below the expectation tolerance; it is checked and discarded.
double born_expectation(const SchrodingerState& state, const Matrix& observable);

/// True iff the states agree up to a global phase: |<a|b>| >= 1 - tolerance.
bool projective_equal(const SchrodingerState& a, const SchrodingerState& b,
                      double tolerance = tol::projective);

}  // namespace dlab
