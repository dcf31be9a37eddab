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
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"

#include "dlab/circuit.hpp"
#include "dlab/descriptor.hpp"
#include "dlab/pauli.hpp"
#include "dlab/schrodinger.hpp"
#include "dlab/system_layout.hpp"

namespace dlab {

/// Structured result of a verification run.
struct Report {
  std::string check;
  std::vector<std::uint64_t> seeds;
  nlohmann::json metrics;
  bool pass = false;

  nlohmann::json to_json() const;
};

/// The three expressions for one expectation value: the evolved-state form,
/// the picture-agnostic form <psi0| U+ O U |psi0>, and the descriptor-engine
/// form <0| O_t |0>.
struct EquivalenceTriple {
  double schrodinger = 0.0;
  double agnostic = 0.0;
  double heisenberg = 0.0;
  double max_difference = 0.0;
  bool pass = false;
};

/// Run both engines on the shared circuit and compare the three expressions
/// pairwise against the expectation tolerance.
EquivalenceTriple instrumental_equivalence_check(const Circuit& circuit,
                                                 const PauliSum& observable,
                                                 const SystemLayout& layout);

/// Two candidate global evolutions and the subsystem whose causal class is
/// in question.
struct NoumenalClassQuery {
  Matrix u;
  Matrix u_prime;
  std::size_t system = 0;
};

/// Decide [U]^{S} = [U']^{S} by comparing the evolved descriptors of the
/// system (equality within the class tolerance). For total dimension <= 64
/// the direct factorization criterion (conjugation by U' U+ fixes every
/// embedded operator of the system) is cross-checked; disagreement raises
/// std::runtime_error.
bool same_noumenal_class(const NoumenalClassQuery& query,
                         const SystemLayout& layout);

/// The metric behind same_noumenal_class: largest max-norm difference
/// between the system's descriptors evolved under u and under u_prime.
double noumenal_descriptor_delta(const NoumenalClassQuery& query,
                                 const SystemLayout& layout);

/// A pair of circuits with projectively equal output states but descriptor
/// frames far apart: the many-to-one surjection made concrete.
struct NoninjectivityWitness {
  Circuit circuit_a;
  Circuit circuit_b;
  Report report;
};

/// Default witness: empty circuit vs a single cz(0,1). Requires the first
/// two subsystems to be qubits.
NoninjectivityWitness noninjectivity_witness(const SystemLayout& layout);

/// Random sampling helpers for the property suites (seeded, reproducible).
Circuit random_circuit(std::size_t n_qubits, std::size_t depth,
                       std::mt19937_64& rng);
PauliWord random_pauli_word(std::size_t n_qubits, std::mt19937_64& rng,
                            bool nontrivial = true);

// Property suites. Each runs `cases` independent seeded cases and reports
// per-suite metrics; `pass` is the conjunction over cases.
Report run_equivalence_suite(std::uint64_t seed, std::size_t cases);
Report run_locality_suite(std::uint64_t seed, std::size_t cases);
Report run_theorem1_suite(std::uint64_t seed, std::size_t cases);
Report run_noniso_suite(std::uint64_t seed, std::size_t cases);
Report run_recovery_suite(std::uint64_t seed, std::size_t cases);

}  // namespace dlab
