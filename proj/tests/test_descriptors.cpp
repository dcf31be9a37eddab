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

#include <random>

#include "dlab/descriptor.hpp"
#include "dlab/frame_io.hpp"
#include "dlab/pictures.hpp"
#include "dlab/random.hpp"
#include "dlab/schrodinger.hpp"
#include "dlab/tensor.hpp"

#include "test_support.hpp"

using namespace dlab;

namespace {

DescriptorFrame bell_frame() {
  return run_heisenberg(
      Circuit{{GateOp{"h", {0}, {}}, GateOp{"cnot", {0, 1}, {}}}},
      SystemLayout({2, 2}));
}

}  // namespace

TEST_CASE("init_frame components are the embedded generators") {
  const SystemLayout one({2});
  const DescriptorFrame f1 = init_frame(one);
  CHECK(max_abs_diff(f1.descriptors[0].components.at("x"), pauli_x()) == 0.0);
  CHECK(max_abs_diff(f1.descriptors[0].components.at("z"), pauli_z()) == 0.0);
  CHECK(f1.time == 0);
  CHECK(f1.reference[0] == Complex(1, 0));

  const SystemLayout two({2, 2});
  const DescriptorFrame f2 = init_frame(two);
  CHECK(max_abs_diff(f2.descriptors[1].components.at("x"),
                     test::kron(identity(2), pauli_x())) == 0.0);
  CHECK(max_abs_diff(f2.descriptors[1].components.at("z"),
                     test::kron(identity(2), pauli_z())) == 0.0);

  // The reference leaves every z sharp with eigenvalue +1.
  for (std::size_t q = 0; q < 2; ++q) {
    const Complex v = f2.reference.dot(
        Vector(tensor_embed(pauli_z(), {q}, two) * f2.reference));
    CHECK(std::abs(v - Complex(1, 0)) == 0.0);
  }
}

TEST_CASE("init_frame gives qudits the canonical matrix units") {
  const SystemLayout layout({2, 3});
  const DescriptorFrame frame = init_frame(layout);
  const Descriptor& qutrit = frame.descriptors[1];
  CHECK(qutrit.components.size() == 9);
  for (std::size_t j = 0; j < 3; ++j) {
    for (std::size_t i = 0; i < 3; ++i) {
      Matrix unit = Matrix::Zero(3, 3);
      unit(j, i) = 1.0;
      CHECK(max_abs_diff(qutrit.components.at(matrix_unit_key(j, i)),
                         test::kron(identity(2), unit)) == 0.0);
    }
  }
}

TEST_CASE("evolve_global single gates") {
  const SystemLayout two({2, 2});
  const DescriptorFrame fresh = init_frame(two);

  const DescriptorFrame same = evolve_global(fresh, identity(4));
  CHECK(frame_delta(same, fresh) == 0.0);
  CHECK(same.time == 1);

  const DescriptorFrame flipped =
      evolve_global(fresh, tensor_embed(pauli_x(), {0}, two));
  CHECK(max_abs_diff(flipped.descriptors[0].components.at("z"),
                     Matrix(-tensor_embed(pauli_z(), {0}, two))) <= 1e-15);
  CHECK(max_abs_diff(flipped.descriptors[0].components.at("x"),
                     tensor_embed(pauli_x(), {0}, two)) <= 1e-15);

  const DescriptorFrame entangled =
      evolve_global(fresh, tensor_embed(gate_matrix("cz"), {0, 1}, two));
  CHECK(max_abs_diff(entangled.descriptors[0].components.at("x"),
                     test::kron(pauli_x(), pauli_z())) <= 1e-15);
  CHECK(max_abs_diff(entangled.descriptors[1].components.at("x"),
                     test::kron(pauli_z(), pauli_x())) <= 1e-15);
  CHECK(max_abs_diff(entangled.descriptors[0].components.at("z"),
                     test::kron(pauli_z(), identity(2))) <= 1e-15);
  CHECK(max_abs_diff(entangled.descriptors[1].components.at("z"),
                     test::kron(identity(2), pauli_z())) <= 1e-15);

  Matrix stretched = identity(4);
  stretched(0, 0) = 2.0;
  CHECK_THROWS_AS(evolve_global(fresh, stretched), std::invalid_argument);
  CHECK_THROWS_AS(evolve_global(fresh, identity(8)), std::invalid_argument);
}

TEST_CASE("gate events validate their functional") {
  const SystemLayout two({2, 2});
  const GateEvent event = make_gate_event(GateOp{"cnot", {0, 1}, {}}, two);
  CHECK(event.functional.term_count() == 4);

  // The defining property on the full space: evaluating the functional on
  // the embedded initial components rebuilds the embedded gate.
  ComponentMap initial;
  for (std::size_t slot = 0; slot < 2; ++slot) {
    initial[slot] = XZComponents{tensor_embed(pauli_x(), {slot}, two),
                                 tensor_embed(pauli_z(), {slot}, two)};
  }
  CHECK(max_abs_diff(pauli_eval(event.functional, initial),
                     tensor_embed(event.matrix, {0, 1}, two)) <= 1e-10);

  CHECK_THROWS_AS(make_gate_event(GateOp{"cnot", {0, 0}, {}}, two),
                  std::invalid_argument);
  CHECK_THROWS_AS(make_gate_event(GateOp{"cnot", {0, 7}, {}}, two),
                  std::out_of_range);
  Matrix not_unitary = identity(2);
  not_unitary(1, 1) = 3.0;
  CHECK_THROWS_AS(make_gate_event("bad", not_unitary, {0}, two),
                  std::invalid_argument);

  const SystemLayout mixed({2, 3});
  CHECK_THROWS_AS(make_gate_event(GateOp{"h", {1}, {}}, mixed),
                  std::invalid_argument);  // qudit target
}

TEST_CASE("evolve_step matches the evolve_global oracle") {
  const SystemLayout two({2, 2});
  const DescriptorFrame fresh = init_frame(two);

  // h on qubit 0: x and z swap; qubit 1 untouched bit-for-bit.
  const DescriptorFrame stepped =
      evolve_step(fresh, make_gate_event(GateOp{"h", {0}, {}}, two));
  CHECK(max_abs_diff(stepped.descriptors[0].components.at("x"),
                     tensor_embed(pauli_z(), {0}, two)) <= 1e-12);
  CHECK(max_abs_diff(stepped.descriptors[0].components.at("z"),
                     tensor_embed(pauli_x(), {0}, two)) <= 1e-12);
  CHECK(max_abs_diff(stepped.descriptors[1].components.at("x"),
                     fresh.descriptors[1].components.at("x")) == 0.0);
  CHECK(max_abs_diff(stepped.descriptors[1].components.at("z"),
                     fresh.descriptors[1].components.at("z")) == 0.0);

  // h then cnot: the stepped frame equals one-shot global conjugation by
  // embedded-cnot * embedded-h.
  const DescriptorFrame after_both =
      evolve_step(stepped, make_gate_event(GateOp{"cnot", {0, 1}, {}}, two));
  const Matrix u = tensor_embed(gate_matrix("cnot"), {0, 1}, two) *
                   tensor_embed(gate_matrix("h"), {0}, two);
  const DescriptorFrame oracle = evolve_global(init_frame(two), u);
  CHECK(frame_delta(after_both, oracle) <= 1e-9);
  CHECK(max_abs_diff(after_both.cumulative, u) <= 1e-12);
}

TEST_CASE("evolve_step leaves spectators of a Bell frame untouched") {
  DescriptorFrame frame = bell_frame();
  const DescriptorFrame before = frame;
  frame = evolve_step(frame, make_gate_event(GateOp{"t", {1}, {}}, frame.layout));
  CHECK(max_abs_diff(frame.descriptors[0].components.at("x"),
                     before.descriptors[0].components.at("x")) == 0.0);
  CHECK(max_abs_diff(frame.descriptors[0].components.at("z"),
                     before.descriptors[0].components.at("z")) == 0.0);
}

TEST_CASE("evolve_step rejects qudit targets") {
  const SystemLayout mixed({2, 3});
  const DescriptorFrame frame = init_frame(mixed);
  GateEvent event = make_gate_event(GateOp{"x", {0}, {}}, mixed);
  event.op.targets = {1};
  CHECK_THROWS_AS(evolve_step(frame, event), std::invalid_argument);
}

TEST_CASE("every library gate agrees between step and global") {
  std::mt19937_64 rng(61);
  const SystemLayout layout({2, 2, 2});
  const std::vector<GateOp> ops = {
      {"h", {1}, {}},          {"x", {0}, {}},    {"y", {2}, {}},
      {"z", {1}, {}},          {"s", {0}, {}},    {"t", {2}, {}},
      {"rx", {1}, {1.234}},    {"ry", {0}, {2.5}}, {"rz", {2}, {0.7}},
      {"cnot", {2, 0}, {}},    {"cz", {1, 2}, {}}, {"swap", {0, 2}, {}},
      {"cp", {1, 0}, {2.22}}};
  for (const GateOp& op : ops) {
    const Circuit prefix = random_circuit(3, 4, rng);
    const DescriptorFrame before = run_heisenberg(prefix, layout);
    const DescriptorFrame stepped =
        evolve_step(before, make_gate_event(op, layout));
    const DescriptorFrame oracle =
        evolve_global(init_frame(layout), stepped.cumulative);
    CHECK(frame_delta(stepped, oracle) <= 1e-9);
  }
}

TEST_CASE("locality audit") {
  const SystemLayout three({2, 2, 2});
  DescriptorFrame before = run_heisenberg(
      Circuit{{GateOp{"h", {0}, {}}, GateOp{"cnot", {0, 1}, {}}}}, three);

  const GateOp gate{"cnot", {0, 1}, {}};
  const DescriptorFrame after =
      evolve_step(before, make_gate_event(gate, three));
  const LocalityReport report = locality_audit(before, after, gate.targets);
  CHECK(report.pass);
  CHECK(report.deltas[2] == 0.0);
  CHECK(report.deltas[0] > 0.1);
  CHECK(report.deltas[1] > 0.1);

  // Single-qubit gate: every non-target delta is exactly zero.
  const GateOp single{"s", {1}, {}};
  const DescriptorFrame after_single =
      evolve_step(before, make_gate_event(single, three));
  const LocalityReport single_report =
      locality_audit(before, after_single, single.targets);
  CHECK(single_report.max_off_target == 0.0);

  const SystemLayout other({2, 2});
  CHECK_THROWS_AS(locality_audit(init_frame(other), after, {0}),
                  std::invalid_argument);
}

TEST_CASE("gates on disjoint systems commute bit-for-bit") {
  const SystemLayout three({2, 2, 2});
  const GateEvent on0 = make_gate_event(GateOp{"h", {0}, {}}, three);
  const GateEvent on2 = make_gate_event(GateOp{"t", {2}, {}}, three);
  const DescriptorFrame fresh = init_frame(three);
  const DescriptorFrame ab = evolve_step(evolve_step(fresh, on0), on2);
  const DescriptorFrame ba = evolve_step(evolve_step(fresh, on2), on0);
  CHECK(frame_delta(ab, ba) <= 1e-10);
}

TEST_CASE("qubit algebra relations persist through evolution") {
  std::mt19937_64 rng(67);
  const SystemLayout layout({2, 2, 2});
  const DescriptorFrame frame =
      run_heisenberg(random_circuit(3, 12, rng), layout);
  const Matrix one = identity(8);
  for (const Descriptor& d : frame.descriptors) {
    const Matrix& x = d.components.at("x");
    const Matrix& z = d.components.at("z");
    CHECK(max_abs(Matrix(x * x - one)) <= 1e-9);
    CHECK(max_abs(Matrix(z * z - one)) <= 1e-9);
    CHECK(max_abs(Matrix(x * z + z * x)) <= 1e-9);
  }
  CHECK(cross_commutator_defect(frame) <= 1e-10);
}

TEST_CASE("reconstruct_density basics") {
  const SystemLayout two({2, 2});
  const DescriptorFrame fresh = init_frame(two);
  Matrix zero_rho = Matrix::Zero(2, 2);
  zero_rho(0, 0) = 1.0;
  CHECK(max_abs_diff(reconstruct_density(fresh, {0}), zero_rho) <= 1e-15);

  const DescriptorFrame plus =
      run_heisenberg(Circuit{{GateOp{"h", {0}, {}}}}, two);
  Matrix plus_rho(2, 2);
  plus_rho << 0.5, 0.5, 0.5, 0.5;
  CHECK(max_abs_diff(reconstruct_density(plus, {0}), plus_rho) <= 1e-12);

  const DescriptorFrame bell = bell_frame();
  CHECK(max_abs_diff(reconstruct_density(bell, {0}),
                     Matrix(0.5 * identity(2))) <= 1e-12);
  Matrix bell_rho = Matrix::Zero(4, 4);
  bell_rho(0, 0) = bell_rho(0, 3) = bell_rho(3, 0) = bell_rho(3, 3) = 0.5;
  CHECK(max_abs_diff(reconstruct_density(bell, {0, 1}), bell_rho) <= 1e-12);

  CHECK_THROWS_AS(reconstruct_density(fresh, {0, 5}), std::out_of_range);
  CHECK_THROWS_AS(reconstruct_density(fresh, {}), std::invalid_argument);
}

TEST_CASE("reconstruction matches the statevector oracle") {
  std::mt19937_64 rng(71);
  for (int k = 0; k < 12; ++k) {
    const std::size_t n = 2 + rng() % 3;
    const SystemLayout layout(std::vector<std::size_t>(n, 2));
    const Circuit circuit = random_circuit(n, 3 + rng() % 10, rng);
    const DescriptorFrame frame = run_heisenberg(circuit, layout);
    const SchrodingerState state = schrodinger_run(circuit, layout);

    std::vector<std::size_t> subset;
    for (std::size_t s = 0; s < n; ++s) {
      if (rng() % 2) subset.push_back(s);
    }
    if (subset.empty()) subset.push_back(rng() % n);

    const Matrix rho = reconstruct_density(frame, subset);
    const Matrix oracle = partial_trace(state.amplitudes, subset, layout);
    CHECK(max_abs_diff(rho, oracle) <= 1e-9);
    CHECK(is_hermitian(rho, 1e-9));
    CHECK(std::abs(rho.trace().real() - 1.0) <= 1e-10);
    const Eigen::SelfAdjointEigenSolver<Matrix> eig(
        Matrix(0.5 * (rho + rho.adjoint())));
    CHECK(eig.eigenvalues().minCoeff() >= -1e-9);

    // The full reconstruction is the global projector |psi><psi|.
    std::vector<std::size_t> all;
    for (std::size_t s = 0; s < n; ++s) all.push_back(s);
    const Matrix global = reconstruct_density(frame, all);
    const Matrix projector =
        state.amplitudes * state.amplitudes.adjoint();
    CHECK(max_abs_diff(global, projector) <= 1e-9);
  }
}

TEST_CASE("qudit frames reconstruct and recover") {
  std::mt19937_64 rng(73);
  const SystemLayout layout({2, 3});
  const Matrix u = haar_unitary(6, rng);
  const DescriptorFrame frame = evolve_global(init_frame(layout), u);

  const Vector psi = u * init_frame(layout).reference;
  CHECK(max_abs_diff(reconstruct_density(frame, {1}),
                     partial_trace(psi, {1}, layout)) <= 1e-9);
  CHECK(max_abs_diff(reconstruct_density(frame, {0, 1}),
                     Matrix(psi * psi.adjoint())) <= 1e-9);

  const Matrix recovered = recover_unitary(frame);
  CHECK(phase_aligned_delta(recovered, frame.cumulative) <= 1e-8);
}

TEST_CASE("expectation values") {
  const SystemLayout two({2, 2});
  const DescriptorFrame fresh = init_frame(two);
  CHECK(expectation(fresh, PauliSum::parse("ZI")) == doctest::Approx(1.0).epsilon(1e-12));

  const DescriptorFrame plus = run_heisenberg(Circuit{{GateOp{"h", {0}, {}}}}, two);
  CHECK(std::abs(expectation(plus, PauliSum::parse("ZI"))) <= 1e-12);

  CHECK(expectation(bell_frame(), PauliSum::parse("ZZ")) ==
        doctest::Approx(1.0).epsilon(1e-12));

  PauliSum skewed(2);
  skewed.add(Complex(0, 1), {Pauli::Z, Pauli::I});
  CHECK_THROWS_AS(expectation(fresh, skewed), std::invalid_argument);
}

TEST_CASE("recover_unitary") {
  const SystemLayout two({2, 2});
  const DescriptorFrame fresh = init_frame(two);
  CHECK(max_abs_diff(recover_unitary(fresh), identity(4)) <= 1e-12);

  const SystemLayout one({2});
  const DescriptorFrame h_frame =
      evolve_global(init_frame(one), gate_matrix("h"));
  CHECK(phase_aligned_delta(recover_unitary(h_frame), gate_matrix("h")) <= 1e-10);

  std::mt19937_64 rng(79);
  for (int k = 0; k < 10; ++k) {
    const Matrix u = haar_unitary(4, rng);
    const DescriptorFrame frame = evolve_global(init_frame(two), u);
    CHECK(phase_aligned_delta(recover_unitary(frame), u) <= 1e-8);
  }

  // The phase convention makes the first usable entry of column 0 real
  // positive.
  const Matrix recovered = recover_unitary(h_frame);
  CHECK(recovered(0, 0).imag() == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(recovered(0, 0).real() > 0.0);
}

TEST_CASE("recovery handles a vanishing corner entry") {
  // x sends |0> to |1>: u00 = 0, so the pivot must move columns.
  const SystemLayout one({2});
  const DescriptorFrame frame = evolve_global(init_frame(one), pauli_x());
  CHECK(phase_aligned_delta(recover_unitary(frame), pauli_x()) <= 1e-12);
}

TEST_CASE("frame snapshots round trip") {
  std::mt19937_64 rng(83);
  const SystemLayout layout({2, 2});
  const DescriptorFrame frame =
      run_heisenberg(random_circuit(2, 6, rng), layout);

  // Dense form: bit-exact.
  const DescriptorFrame dense_copy =
      frame_from_string(frame_to_string(frame, /*force_dense=*/true));
  CHECK(dense_copy.time == frame.time);
  for (std::size_t s = 0; s < layout.size(); ++s) {
    for (const auto& [key, component] : frame.descriptors[s].components) {
      CHECK(component == dense_copy.descriptors[s].components.at(key));
    }
  }
  CHECK(frame.cumulative == dense_copy.cumulative);
  CHECK(frame.reference == dense_copy.reference);

  // Pauli text form: faithful within the materialization tolerance.
  const nlohmann::json j = frame_to_json(frame);
  CHECK(j["descriptors"][0]["components"]["x"].contains("pauli"));
  const DescriptorFrame pauli_copy = frame_from_json(j);
  CHECK(frame_delta(frame, pauli_copy) <= 1e-10);

  // Qudit layouts always export densely.
  const SystemLayout mixed({2, 3});
  const DescriptorFrame qudit_frame = init_frame(mixed);
  const nlohmann::json qj = frame_to_json(qudit_frame);
  CHECK(qj["descriptors"][0]["components"]["x"].contains("dense"));
  CHECK(frame_delta(qudit_frame, frame_from_json(qj)) == 0.0);
}

TEST_CASE("frame snapshot rejects corrupted input") {
  const DescriptorFrame frame = init_frame(SystemLayout({2}));
  nlohmann::json j = frame_to_json(frame);
  j["reference"][0] = "0.5,0";
  CHECK_THROWS_AS(frame_from_json(j), std::invalid_argument);

  nlohmann::json missing = frame_to_json(frame);
  missing["descriptors"][0]["components"].erase("z");
  CHECK_THROWS_AS(frame_from_json(missing), std::invalid_argument);
}
