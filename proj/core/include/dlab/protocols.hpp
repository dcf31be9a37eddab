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

#include "json.hpp"

#include "dlab/descriptor.hpp"
#include "dlab/types.hpp"

namespace dlab::protocols {

/// One branch of the record register: computational-basis labels of the
/// record subsystems (first listed subsystem leftmost) and its multiversal
/// measure, the matching diagonal of the reconstructed record density.
struct BranchRecord {
  std::string labels;
  double measure = 0.0;
};

/// All branches of the listed record subsystems; measures sum to 1.
std::vector<BranchRecord> branch_decomposition(const DescriptorFrame& frame,
                                               const std::vector<std::size_t>& records);

struct ProtocolStep {
  std::string gate;
  std::vector<std::size_t> targets;
  LocalityReport audit;
};

struct ProtocolReport {
  std::string protocol;
  std::vector<ProtocolStep> steps;
  nlohmann::json outcome;
  bool pass = false;

  nlohmann::json to_json() const;
  /// Branch measures as CSV rows for plotting (empty when the protocol
  /// produced none).
  std::string branch_csv() const;
};

/// Superdense coding of bits (i, j): Bell pair, Alice's z^i x^j encoding,
/// transit-interception check, Bob's decoding and record readout.
ProtocolReport superdense_coding(int i, int j);

struct TeleportOptions {
  /// Fully dephase the first carrier pair by entangling it with fresh
  /// environment qubits.
  bool decohere_channel = false;
  /// Transmission legs for the classical messages, counting Alice's write
  /// into the channel and Bob's read out of it: hops = 2 is the direct
  /// protocol (one carrier pair); hops = h relays through h - 1 CNOT-copied
  /// carrier pairs. Must be at least 2.
  std::size_t hops = 2;
};

/// Teleport alpha|0> + beta|1> from Alice to Bob through unitarily modeled
/// measurement and classical messaging; Bob's reconstructed density must
/// equal the input density regardless of channel decoherence or relaying.
ProtocolReport teleportation(Complex alpha, Complex beta,
                             const TeleportOptions& options = {});

/// Spacelike-separated measurements on an entangled pair: Alice's
/// measurement leaves every Bob-side descriptor bit-identical, branches
/// stay local until a comparison interaction builds the joint record.
ProtocolReport local_branching_demo();

struct ChshAngles {
  double a = 0.0;
  double a_prime = 1.5707963267948966;   // pi/2
  double b = 0.7853981633974483;         // pi/4
  double b_prime = -0.7853981633974483;  // -pi/4
};

/// Play all four CHSH setting pairs on the descriptor engine. Measurement
/// direction theta means the observable cos(theta) Z + sin(theta) X; with
/// the default angles the average winning measure is (2+sqrt(2))/4 and the
/// S-value is 2 sqrt(2).
ProtocolReport chsh_game(const ChshAngles& angles = {});

}  // namespace dlab::protocols
