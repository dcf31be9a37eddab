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

#include "dlab/pictures.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "dlab/tensor.hpp"

namespace dlab {

nlohmann::json Report::to_json() const {
  return nlohmann::json{
      {"check", check}, {"seeds", seeds}, {"metrics", metrics}, {"pass", pass}};
}

namespace {

// Initial embedded generators of one subsystem.
std::vector<Matrix> initial_generators(std::size_t system, const SystemLayout& layout) {
  std::vector<Matrix> gens;
  if (layout.is_qubit(system)) {
    gens.push_back(tensor_embed(pauli_x(), {system}, layout));
    gens.push_back(tensor_embed(pauli_z(), {system}, layout));
    return gens;
  }
  const std::size_t d = layout.dim(system);
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t i = 0; i < d; ++i) {
      Matrix unit = Matrix::Zero(d, d);
      unit(j, i) = Complex(1.0, 0.0);
      gens.push_back(tensor_embed(unit, {system}, layout));
    }
  }
  return gens;
}

}  // namespace

double noumenal_descriptor_delta(const NoumenalClassQuery& query,
                                 const SystemLayout& layout) {
  const Matrix ua = query.u.adjoint();
  const Matrix upa = query.u_prime.adjoint();
  double delta = 0.0;
  for (const Matrix& g : initial_generators(query.system, layout)) {
    delta = std::max(delta, max_abs(Matrix(ua * g * query.u - upa * g * query.u_prime)));
  }
  return delta;
}

EquivalenceTriple instrumental_equivalence_check(const Circuit& circuit,
                                                 const PauliSum& observable,
                                                 const SystemLayout& layout) {
  if (observable.n_qubits() != layout.size()) {
    throw std::invalid_argument(
        "equivalence check: observable width must equal the subsystem count");
  }
  if (!observable.is_hermitian()) {
    throw std::invalid_argument("equivalence check: observable is not Hermitian");
  }

  // The time-0 observable, built once from the embedded initial generators.
  ComponentMap initial;
  for (const auto& [letters, coeff] : observable.terms()) {
    for (std::size_t q = 0; q < letters.size(); ++q) {
      if (letters[q] == Pauli::I || initial.count(q)) continue;
      initial[q] = XZComponents{tensor_embed(pauli_x(), {q}, layout),
                                tensor_embed(pauli_z(), {q}, layout)};
    }
  }
  const Matrix o0 = pauli_eval(observable, initial, layout.total_dim());

  EquivalenceTriple triple;

  const SchrodingerState psi_t = schrodinger_run(circuit, layout);
  triple.schrodinger = born_expectation(psi_t, o0);

  const Matrix u = total_unitary(circuit, layout);
  const SchrodingerState psi_0 = initial_state(layout);
  triple.agnostic = born_expectation(psi_0, Matrix(u.adjoint() * o0 * u));

  const DescriptorFrame frame = run_heisenberg(circuit, layout);
  triple.heisenberg = expectation(frame, observable);

  triple.max_difference =
      std::max({std::abs(triple.schrodinger - triple.agnostic),
                std::abs(triple.schrodinger - triple.heisenberg),
                std::abs(triple.agnostic - triple.heisenberg)});
  triple.pass = triple.max_difference <= tol::expectation;
  return triple;
}

bool same_noumenal_class(const NoumenalClassQuery& query, const SystemLayout& layout) {
  const std::size_t n = layout.total_dim();
  if (static_cast<std::size_t>(query.u.rows()) != n ||
      static_cast<std::size_t>(query.u_prime.rows()) != n) {
    throw std::invalid_argument("same_noumenal_class: dimension mismatch");
  }
  if (query.system >= layout.size()) {
    throw std::out_of_range("same_noumenal_class: system out of range");
  }
  require_unitary(query.u, "same_noumenal_class");
  require_unitary(query.u_prime, "same_noumenal_class");

  const bool same = noumenal_descriptor_delta(query, layout) <= tol::class_equality;

  if (n <= 64) {
    // Direct criterion: U' U+ must commute with everything embedded on the
    // system, i.e. factorize as identity-on-system tensor W.
    const Matrix d = query.u_prime * query.u.adjoint();
    const Matrix da = d.adjoint();
    double fix_defect = 0.0;
    for (const Matrix& g : initial_generators(query.system, layout)) {
      fix_defect = std::max(fix_defect, max_abs(Matrix(da * g * d - g)));
    }
    const bool factorizes = fix_defect <= tol::class_equality;
    if (factorizes != same) {
      throw std::runtime_error(
          "same_noumenal_class: descriptor and factorization criteria disagree");
    }
  }
  return same;
}

NoninjectivityWitness noninjectivity_witness(const SystemLayout& layout) {
  if (layout.size() < 2 || !layout.is_qubit(0) || !layout.is_qubit(1)) {
    throw std::invalid_argument(
        "noninjectivity_witness: needs qubits at positions 0 and 1");
  }

  NoninjectivityWitness witness;
  witness.circuit_a = Circuit{};
  witness.circuit_b = Circuit{{GateOp{"cz", {0, 1}, {}}}};

  const SchrodingerState state_a = schrodinger_run(witness.circuit_a, layout);
  const SchrodingerState state_b = schrodinger_run(witness.circuit_b, layout);
  const double overlap_defect =
      1.0 - std::abs(state_a.amplitudes.dot(state_b.amplitudes));

  const DescriptorFrame frame_a = run_heisenberg(witness.circuit_a, layout);
  const DescriptorFrame frame_b = run_heisenberg(witness.circuit_b, layout);

  double max_delta = 0.0;
  std::string where;
  for (std::size_t s = 0; s < layout.size(); ++s) {
    for (const auto& [key, component] : frame_a.descriptors[s].components) {
      const double delta =
          max_abs_diff(component, frame_b.descriptors[s].components.at(key));
      if (delta > max_delta) {
        max_delta = delta;
        where = "q" + std::to_string(s) + "." + key;
      }
    }
  }

  witness.report.check = "noninjectivity-witness";
  witness.report.metrics = nlohmann::json{{"state_overlap_defect", overlap_defect},
                                          {"max_component_delta", max_delta},
                                          {"component", where}};
  witness.report.pass = overlap_defect <= tol::projective && max_delta >= 0.5;
  return witness;
}

Circuit random_circuit(std::size_t n_qubits, std::size_t depth, std::mt19937_64& rng) {
  static const std::vector<std::string> kOneQubit = {"h", "x", "y", "z", "s",
                                                     "t", "rx", "ry", "rz"};
  static const std::vector<std::string> kTwoQubit = {"cnot", "cz", "swap", "cp"};
  std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);

  Circuit circuit;
  for (std::size_t k = 0; k < depth; ++k) {
    const bool two = n_qubits >= 2 && (rng() % 3 != 0);  // bias toward entanglers
    GateOp op;
    if (two) {
      op.name = kTwoQubit[rng() % kTwoQubit.size()];
      const std::size_t a = rng() % n_qubits;
      std::size_t b = rng() % (n_qubits - 1);
      if (b >= a) ++b;
      op.targets = {a, b};
    } else {
      op.name = kOneQubit[rng() % kOneQubit.size()];
      op.targets = {rng() % n_qubits};
    }
    const GateSignature sig = gate_signature(op.name);
    for (std::size_t p = 0; p < sig.param_count; ++p) op.params.push_back(angle(rng));
    circuit.gates.push_back(std::move(op));
  }
  return circuit;
}

PauliWord random_pauli_word(std::size_t n_qubits, std::mt19937_64& rng,
                            bool nontrivial) {
  static constexpr Pauli kLetters[4] = {Pauli::I, Pauli::X, Pauli::Y, Pauli::Z};
  PauliWord word;
  word.letters.resize(n_qubits);
  do {
    for (std::size_t q = 0; q < n_qubits; ++q) {
      word.letters[q] = kLetters[rng() % 4];
    }
  } while (nontrivial &&
           std::all_of(word.letters.begin(), word.letters.end(),
                       [](Pauli p) { return p == Pauli::I; }));
  return word;
}

}  // namespace dlab
