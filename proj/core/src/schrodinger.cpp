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

#include "dlab/schrodinger.hpp"

#include <cmath>
#include <stdexcept>

#include "dlab/tensor.hpp"

namespace dlab {

SchrodingerState initial_state(const SystemLayout& layout) {
  Vector amplitudes = Vector::Zero(layout.total_dim());
  amplitudes[0] = Complex(1.0, 0.0);
  return SchrodingerState{layout, std::move(amplitudes)};
}

void apply_gate(SchrodingerState& state, const GateOp& op) {
  validate_circuit(Circuit{{op}}, state.layout);
  state.amplitudes =
      apply_embedded(gate_matrix(op), op.targets, state.layout, state.amplitudes);
}

SchrodingerState schrodinger_run(const Circuit& circuit, const SystemLayout& layout) {
  validate_circuit(circuit, layout);
  SchrodingerState state = initial_state(layout);
  for (const GateOp& op : circuit.gates) {
    state.amplitudes =
        apply_embedded(gate_matrix(op), op.targets, layout, state.amplitudes);
  }
  if (std::abs(state.amplitudes.norm() - 1.0) > tol::unitary) {
    throw std::runtime_error("schrodinger_run: norm drifted past tolerance");
  }
  return state;
}

Matrix total_unitary(const Circuit& circuit, const SystemLayout& layout) {
  validate_circuit(circuit, layout);
  const std::size_t n = layout.total_dim();
  Matrix u = Matrix::Identity(n, n);
  for (const GateOp& op : circuit.gates) {
    u = tensor_embed(gate_matrix(op), op.targets, layout) * u;
  }
  return u;
}

double born_expectation(const SchrodingerState& state, const Matrix& observable) {
  if (observable.rows() != state.amplitudes.size()) {
    throw std::invalid_argument("born_expectation: dimension mismatch");
  }
  require_hermitian(observable, "born_expectation");
  const Complex value = state.amplitudes.dot(observable * state.amplitudes);
  if (std::abs(value.imag()) > tol::locality) {
    throw std::runtime_error("born_expectation: imaginary residue too large");
  }
  return value.real();
}

bool projective_equal(const SchrodingerState& a, const SchrodingerState& b,
                      double tolerance) {
  if (!(a.layout == b.layout)) {
    throw std::invalid_argument("projective_equal: layouts differ");
  }
  return std::abs(a.amplitudes.dot(b.amplitudes)) >= 1.0 - tolerance;
}

}  // namespace dlab
