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

#include <algorithm>
#include <cmath>

#include "dlab/pictures.hpp"
#include "dlab/random.hpp"
#include "dlab/tensor.hpp"

namespace dlab {

namespace {

std::mt19937_64 case_rng(std::uint64_t seed, std::size_t case_index) {
  std::mt19937_64 rng(seed);
  rng.discard(7);
  return std::mt19937_64(rng() ^ (0x9e3779b97f4a7c15ULL * (case_index + 1)));
}

std::vector<std::size_t> complement_of(std::size_t system, std::size_t count) {
  std::vector<std::size_t> rest;
  for (std::size_t s = 0; s < count; ++s) {
    if (s != system) rest.push_back(s);
  }
  return rest;
}

}  // namespace

Report run_equivalence_suite(std::uint64_t seed, std::size_t cases) {
  Report report;
  report.check = "instrumental-equivalence";
  report.seeds = {seed};
  report.pass = true;

  double worst = 0.0;
  std::size_t checks = 0;
  for (std::size_t c = 0; c < cases; ++c) {
    auto rng = case_rng(seed, c);
    const std::size_t n = 2 + rng() % 4;  // 2..5 qubits
    const std::size_t depth = 1 + rng() % 20;
    const SystemLayout layout(std::vector<std::size_t>(n, 2));
    const Circuit circuit = random_circuit(n, depth, rng);
    for (std::size_t o = 0; o < 5; ++o) {
      PauliSum observable(n);
      observable.add(Complex(1.0, 0.0), random_pauli_word(n, rng).letters);
      const EquivalenceTriple triple =
          instrumental_equivalence_check(circuit, observable, layout);
      worst = std::max(worst, triple.max_difference);
      report.pass = report.pass && triple.pass;
      ++checks;
    }
  }
  report.metrics = nlohmann::json{{"cases", cases},
                                  {"checks", checks},
                                  {"max_triple_difference", worst},
                                  {"tolerance", tol::expectation}};
  return report;
}

Report run_locality_suite(std::uint64_t seed, std::size_t cases) {
  Report report;
  report.check = "no-action-at-a-distance";
  report.seeds = {seed};
  report.pass = true;

  double worst_off_target = 0.0;
  double worst_step_vs_global = 0.0;
  for (std::size_t c = 0; c < cases; ++c) {
    auto rng = case_rng(seed, c);
    const std::size_t n = 2 + rng() % 4;
    const SystemLayout layout(std::vector<std::size_t>(n, 2));
    const Circuit prefix = random_circuit(n, rng() % 8, rng);
    const Circuit extra = random_circuit(n, 1, rng);
    const GateOp& op = extra.gates.front();

    DescriptorFrame before = run_heisenberg(prefix, layout);
    DescriptorFrame after = evolve_step(before, make_gate_event(op, layout));
    const LocalityReport audit = locality_audit(before, after, op.targets);
    worst_off_target = std::max(worst_off_target, audit.max_off_target);
    report.pass = report.pass && audit.pass;

    // Cross-check the stepped frame against a one-shot global rebuild.
    const DescriptorFrame rebuilt =
        evolve_global(init_frame(layout), after.cumulative);
    worst_step_vs_global = std::max(worst_step_vs_global, frame_delta(after, rebuilt));
    report.pass = report.pass && frame_delta(after, rebuilt) <= tol::step_vs_global;
  }
  report.metrics = nlohmann::json{{"cases", cases},
                                  {"max_off_target_delta", worst_off_target},
                                  {"max_step_vs_global_delta", worst_step_vs_global},
                                  {"locality_tolerance", tol::locality},
                                  {"step_tolerance", tol::step_vs_global}};
  return report;
}

Report run_theorem1_suite(std::uint64_t seed, std::size_t cases) {
  Report report;
  report.check = "noumenal-descriptor-correspondence";
  report.seeds = {seed};
  report.pass = true;

  double worst_forward = 0.0;
  double least_converse = 1e300;
  std::size_t forward_ok = 0;
  std::size_t converse_ok = 0;

  for (std::size_t c = 0; c < cases; ++c) {
    auto rng = case_rng(seed, c);
    const std::size_t n = 2 + rng() % 3;  // 2..4 qubits
    const SystemLayout layout(std::vector<std::size_t>(n, 2));
    const std::size_t system = rng() % n;
    const Matrix u = haar_unitary(layout.total_dim(), rng);

    // Forward: U' = (1 (x) W) U stays in the class of U.
    const std::size_t rest_dim = layout.total_dim() / layout.dim(system);
    const Matrix w = haar_unitary(rest_dim, rng);
    const Matrix u_forward =
        tensor_embed(w, complement_of(system, n), layout) * u;
    const NoumenalClassQuery forward{u, u_forward, system};
    worst_forward =
        std::max(worst_forward, noumenal_descriptor_delta(forward, layout));
    if (same_noumenal_class(forward, layout)) ++forward_ok;

    // Converse: V acting non-trivially on the system leaves the class.
    Matrix v;
    for (;;) {
      v = haar_unitary(layout.total_dim(), rng);
      const PauliSum expansion = pauli_decompose(v, n);
      bool nontrivial = false;
      for (const auto& [letters, coeff] : expansion.terms()) {
        if (letters[system] != Pauli::I && std::abs(coeff) >= 1e-3) {
          nontrivial = true;
          break;
        }
      }
      if (nontrivial) break;
    }
    const NoumenalClassQuery converse{u, Matrix(v * u), system};
    least_converse =
        std::min(least_converse, noumenal_descriptor_delta(converse, layout));
    if (!same_noumenal_class(converse, layout)) ++converse_ok;
  }

  report.pass = forward_ok == cases && converse_ok == cases;
  report.metrics = nlohmann::json{{"cases", cases},
                                  {"forward_same_class", forward_ok},
                                  {"converse_different_class", converse_ok},
                                  {"max_forward_delta", worst_forward},
                                  {"min_converse_delta", least_converse},
                                  {"tolerance", tol::class_equality}};
  return report;
}

Report run_noniso_suite(std::uint64_t seed, std::size_t cases) {
  Report report;
  report.check = "state-space-non-isomorphism";
  report.seeds = {seed};

  const SystemLayout pair_layout({2, 2});
  const NoninjectivityWitness witness = noninjectivity_witness(pair_layout);
  bool pass = witness.report.pass;

  // Null witness: h;h collapses to the identity class, so descriptors and
  // states must both match.
  {
    const Circuit doubled{{GateOp{"h", {0}, {}}, GateOp{"h", {0}, {}}}};
    const double delta = frame_delta(run_heisenberg(doubled, pair_layout),
                                     run_heisenberg(Circuit{}, pair_layout));
    pass = pass && delta <= tol::locality;
  }

  // Phase witness: rz(2 pi) is a pure global phase; descriptors quotient it
  // away exactly while states match only projectively.
  double phase_state_defect = 0.0;
  double phase_frame_delta = 0.0;
  {
    const Circuit phase{{GateOp{"rz", {0}, {2.0 * M_PI}}}};
    const SchrodingerState a = schrodinger_run(phase, pair_layout);
    const SchrodingerState b = schrodinger_run(Circuit{}, pair_layout);
    phase_state_defect = 1.0 - std::abs(a.amplitudes.dot(b.amplitudes));
    phase_frame_delta = frame_delta(run_heisenberg(phase, pair_layout),
                                    run_heisenberg(Circuit{}, pair_layout));
    pass = pass && phase_state_defect <= tol::projective &&
           phase_frame_delta <= tol::locality;
  }

  // Injectivity scan: whenever two frames coincide, their states must be
  // projectively equal (the map is many-to-one, never one-to-many).
  std::size_t equal_frame_pairs = 0;
  double worst_equal_frame_state_defect = 0.0;
  for (std::size_t c = 0; c < cases; ++c) {
    auto rng = case_rng(seed, c);
    const std::size_t n = 2 + rng() % 3;
    const SystemLayout layout(std::vector<std::size_t>(n, 2));
    Circuit base = random_circuit(n, 1 + rng() % 10, rng);

    std::vector<Circuit> variants;
    variants.push_back(base);
    Circuit phased = base;
    phased.gates.push_back(GateOp{"rz", {rng() % n}, {2.0 * M_PI}});
    variants.push_back(phased);
    Circuit cancelled = base;
    const std::size_t q = rng() % n;
    cancelled.gates.push_back(GateOp{"h", {q}, {}});
    cancelled.gates.push_back(GateOp{"h", {q}, {}});
    variants.push_back(cancelled);
    variants.push_back(random_circuit(n, 1 + rng() % 10, rng));

    std::vector<DescriptorFrame> frames;
    std::vector<SchrodingerState> states;
    for (const Circuit& circuit : variants) {
      frames.push_back(run_heisenberg(circuit, layout));
      states.push_back(schrodinger_run(circuit, layout));
    }
    for (std::size_t a = 0; a < variants.size(); ++a) {
      for (std::size_t b = a + 1; b < variants.size(); ++b) {
        if (frame_delta(frames[a], frames[b]) <= tol::locality) {
          ++equal_frame_pairs;
          const double defect =
              1.0 - std::abs(states[a].amplitudes.dot(states[b].amplitudes));
          worst_equal_frame_state_defect =
              std::max(worst_equal_frame_state_defect, defect);
          pass = pass && projective_equal(states[a], states[b]);
        }
      }
    }
  }

  report.pass = pass;
  report.metrics =
      nlohmann::json{{"witness", witness.report.metrics},
                     {"phase_witness_state_defect", phase_state_defect},
                     {"phase_witness_frame_delta", phase_frame_delta},
                     {"equal_frame_pairs_checked", equal_frame_pairs},
                     {"max_equal_frame_state_defect", worst_equal_frame_state_defect},
                     {"cases", cases}};
  return report;
}

Report run_recovery_suite(std::uint64_t seed, std::size_t cases) {
  Report report;
  report.check = "unitary-recovery";
  report.seeds = {seed};
  report.pass = true;

  double worst = 0.0;
  for (std::size_t c = 0; c < cases; ++c) {
    auto rng = case_rng(seed, c);
    const std::size_t n = 2 + rng() % 2;  // 2..3 qubits
    const SystemLayout layout(std::vector<std::size_t>(n, 2));
    const Matrix u = haar_unitary(layout.total_dim(), rng);
    const DescriptorFrame frame = evolve_global(init_frame(layout), u);
    const Matrix recovered = recover_unitary(frame);
    const double delta = phase_aligned_delta(recovered, frame.cumulative);
    worst = std::max(worst, delta);
    report.pass = report.pass && delta <= tol::recovery;
  }
  report.metrics = nlohmann::json{{"cases", cases},
                                  {"max_phase_aligned_delta", worst},
                                  {"tolerance", tol::recovery}};
  return report;
}

}  // namespace dlab
