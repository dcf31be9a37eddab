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
#include <map>
#include <string>
#include <vector>

#include "json.hpp"

#include "dlab/circuit.hpp"
#include "dlab/gates.hpp"
#include "dlab/pauli.hpp"
#include "dlab/system_layout.hpp"
#include "dlab/types.hpp"

namespace dlab {

/// One subsystem's evolving generator set. Qubits carry components "x" and
/// "z" (the conjugated Pauli pair); a d-dimensional subsystem carries the
/// d^2 canonical matrix units under keys "E_j,i" (the component that starts
/// life as |j><i| embedded on the subsystem).
struct Descriptor {
  std::size_t system = 0;
  std::map<std::string, Matrix> components;
};

std::string matrix_unit_key(std::size_t j, std::size_t i);

/// The Heisenberg-picture state of the whole network: the fixed reference
/// vector, one descriptor per subsystem, a step counter, and the cumulative
/// evolution operator.
///
/// `cumulative` exists for test oracles only; no descriptor operation other
/// than those oracles may read it.
struct DescriptorFrame {
  SystemLayout layout;
  Vector reference;
  std::vector<Descriptor> descriptors;
  std::size_t time = 0;
  Matrix cumulative;
};

/// A gate together with its functional representation: a Pauli polynomial
/// over the target qubits (slot k of the polynomial stands for targets[k])
/// that rebuilds the gate from generator components. Evaluated on the
/// initial components it reproduces the embedded gate; evaluated on evolved
/// components it yields the step-evolution conjugator.
struct GateEvent {
  GateOp op;
  Matrix matrix;       // the gate on its own 2^k space
  PauliSum functional; // decomposition of `matrix` over the k target slots
};

/// Build an event for a library gate. Validates targets against the layout
/// (distinct, in range, qubit-dimensional) and checks the functional's
/// defining property on the target space within 1e-10.
GateEvent make_gate_event(const GateOp& op, const SystemLayout& layout);

/// Same, for an explicit unitary on the listed target qubits.
GateEvent make_gate_event(const std::string& name, const Matrix& matrix,
                          const std::vector<std::size_t>& targets,
                          const SystemLayout& layout);

/// Fresh frame at time 0: reference |0...0>, every component the embedded
/// initial generator, cumulative identity.
DescriptorFrame init_frame(const SystemLayout& layout);

/// Conjugate every component of every descriptor by u (Heisenberg evolution
/// by the global operator u inserted at time 0): component -> u+ c u,
/// cumulative -> cumulative * u, time -> time + 1.
///
/// Evolving a fresh frame by the full evolution operator of a circuit gives
/// that circuit's Heisenberg frame in one shot; to advance an already
/// evolved frame by a later gate, use evolve_step.
DescriptorFrame evolve_global(const DescriptorFrame& frame, const Matrix& u);

/// One local step: build M = functional(evolved target components), then
/// conjugate the target descriptors by M. Descriptors of subsystems outside
/// the targets commute with M and are carried over bit-for-bit unchanged.
/// cumulative -> embed(gate) * cumulative, time -> time + 1.
DescriptorFrame evolve_step(const DescriptorFrame& frame, const GateEvent& event);

/// Run a whole circuit step-by-step on a fresh frame.
DescriptorFrame run_heisenberg(const Circuit& circuit, const SystemLayout& layout);

/// Per-subsystem max-norm deltas between two consecutive frames, judged
/// against the locality tolerance for subsystems outside `targets`.
struct LocalityReport {
  std::vector<double> deltas;
  std::vector<std::size_t> targets;
  double max_off_target = 0.0;
  bool pass = false;
};

LocalityReport locality_audit(const DescriptorFrame& before,
                              const DescriptorFrame& after,
                              const std::vector<std::size_t>& targets);

nlohmann::json to_json(const LocalityReport& report);

/// Reduced density matrix of the subset, reconstructed from the subset's
/// descriptors alone: <i|rho|j> = <0| f_ij(q(t)) |0> with f_ij generating
/// the evolved matrix unit |j><i| from the components.
Matrix reconstruct_density(const DescriptorFrame& frame,
                           const std::vector<std::size_t>& subset);

/// <0| f(evolved components) |0> for a Hermitian Pauli observable whose
/// letters sit on qubit subsystems (identity on any qudit).
double expectation(const DescriptorFrame& frame, const PauliSum& observable);

/// Reconstruct the evolution operator from the descriptors alone, up to a
/// global phase, fixed so the first nonzero entry of column 0 is real
/// positive. Matches `cumulative` up to phase within the recovery tolerance.
Matrix recover_unitary(const DescriptorFrame& frame);

/// Largest component delta between two frames over all subsystems.
double frame_delta(const DescriptorFrame& a, const DescriptorFrame& b);

/// Largest max-norm of [a, b] over components a of descriptor i and b of
/// descriptor j != i; stays at float-dust level at all times.
double cross_commutator_defect(const DescriptorFrame& frame);

}  // namespace dlab
