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

#include "dlab/protocols.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "dlab/pauli.hpp"
#include "dlab/schrodinger.hpp"
#include "dlab/tensor.hpp"

namespace dlab::protocols {

namespace {

constexpr double kMeasureTol = 1e-10;
constexpr double kDensityTol = 1e-9;

std::string basis_labels(std::size_t index, const std::vector<std::size_t>& records,
                         const SystemLayout& layout) {
  std::string labels(records.size(), '0');
  std::size_t rem = index;
  for (std::size_t k = records.size(); k-- > 0;) {
    const std::size_t d = layout.dim(records[k]);
    labels[k] = static_cast<char>('0' + rem % d);
    rem /= d;
  }
  return labels;
}

// Drives one protocol: every gate goes through step evolution and a
// locality audit.
class Runner {
 public:
  Runner(SystemLayout layout, std::string name) : frame_(init_frame(layout)) {
    report_.protocol = std::move(name);
    report_.pass = true;
  }

  void gate(const std::string& name, std::vector<std::size_t> targets,
            std::vector<double> params = {}) {
    apply(make_gate_event(GateOp{name, std::move(targets), std::move(params)},
                          frame_.layout));
  }

  void custom(const std::string& label, const Matrix& matrix,
              std::vector<std::size_t> targets) {
    apply(make_gate_event(label, matrix, targets, frame_.layout));
  }

  const DescriptorFrame& frame() const { return frame_; }
  ProtocolReport& report() { return report_; }

  ProtocolReport finish(nlohmann::json outcome, bool outcome_pass) {
    report_.outcome = std::move(outcome);
    report_.pass = report_.pass && outcome_pass;
    return std::move(report_);
  }

 private:
  void apply(const GateEvent& event) {
    DescriptorFrame next = evolve_step(frame_, event);
    LocalityReport audit = locality_audit(frame_, next, event.op.targets);
    if (!audit.pass) report_.pass = false;
    report_.steps.push_back(
        ProtocolStep{event.op.name, event.op.targets, std::move(audit)});
    frame_ = std::move(next);
  }

  DescriptorFrame frame_;
  ProtocolReport report_;
};

nlohmann::json branches_json(const std::vector<BranchRecord>& branches) {
  nlohmann::json j = nlohmann::json::array();
  for (const BranchRecord& b : branches) {
    j.push_back(nlohmann::json{{"labels", b.labels}, {"measure", b.measure}});
  }
  return j;
}

nlohmann::json density_json(const Matrix& rho) {
  nlohmann::json j = nlohmann::json::array();
  for (Eigen::Index r = 0; r < rho.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index c = 0; c < rho.cols(); ++c) {
      row.push_back(format_complex(rho(r, c), 10));
    }
    j.push_back(std::move(row));
  }
  return j;
}

}  // namespace

std::vector<BranchRecord> branch_decomposition(const DescriptorFrame& frame,
                                               const std::vector<std::size_t>& records) {
  const Matrix rho = reconstruct_density(frame, records);
  std::vector<BranchRecord> branches;
  branches.reserve(static_cast<std::size_t>(rho.rows()));
  double total = 0.0;
  for (Eigen::Index b = 0; b < rho.rows(); ++b) {
    const double measure = rho(b, b).real();
    total += measure;
    branches.push_back(BranchRecord{
        basis_labels(static_cast<std::size_t>(b), records, frame.layout), measure});
  }
  if (std::abs(total - 1.0) > kMeasureTol) {
    throw std::runtime_error("branch_decomposition: measures do not sum to 1");
  }
  return branches;
}

nlohmann::json ProtocolReport::to_json() const {
  nlohmann::json steps_json = nlohmann::json::array();
  for (const ProtocolStep& step : steps) {
    steps_json.push_back(nlohmann::json{{"gate", step.gate},
                                        {"targets", step.targets},
                                        {"audit", dlab::to_json(step.audit)}});
  }
  return nlohmann::json{{"protocol", protocol},
                        {"steps", std::move(steps_json)},
                        {"outcome", outcome},
                        {"pass", pass}};
}

std::string ProtocolReport::branch_csv() const {
  std::string csv;
  const auto append = [&csv](const nlohmann::json& branches,
                             const std::string& prefix) {
    for (const auto& b : branches) {
      csv += prefix + b.at("labels").get<std::string>() + "," +
             std::to_string(b.at("measure").get<double>()) + "\n";
    }
  };
  if (outcome.contains("settings")) {
    csv = "ra,rb,branch,measure\n";
    for (const auto& s : outcome.at("settings")) {
      const std::string prefix = std::to_string(s.at("ra").get<int>()) + "," +
                                 std::to_string(s.at("rb").get<int>()) + ",";
      append(s.at("branches"), prefix);
    }
  } else if (outcome.contains("branches")) {
    csv = "branch,measure\n";
    append(outcome.at("branches"), "");
  }
  return csv;
}

ProtocolReport superdense_coding(int i, int j) {
  if ((i != 0 && i != 1) || (j != 0 && j != 1)) {
    throw std::invalid_argument("superdense_coding: bits must be 0 or 1");
  }
  const SystemLayout layout({2, 2, 2, 2});  // Alice, Bob, two record qubits

  const auto run_to_encoding = [&](int bi, int bj) {
    Runner r(layout, "superdense-coding");
    r.gate("h", {0});
    r.gate("cnot", {0, 1});
    // sigma_z^i sigma_x^j on Alice's half: the x factor acts first.
    if (bj) r.gate("x", {0});
    if (bi) r.gate("z", {0});
    return r;
  };

  Runner run = run_to_encoding(i, j);

  // Sign structure of the encoding, against the unencoded baseline: the bit
  // i flips the x-component, the bit j flips the z-component.
  const Runner baseline = run_to_encoding(0, 0);
  const auto& enc = run.frame().descriptors[0].components;
  const auto& base = baseline.frame().descriptors[0].components;
  const double x_sign_delta = max_abs_diff(
      enc.at("x"), Matrix((i ? -1.0 : 1.0) * base.at("x")));
  const double z_sign_delta = max_abs_diff(
      enc.at("z"), Matrix((j ? -1.0 : 1.0) * base.at("z")));

  // Interception check: the transmitted qubit alone is completely mixed.
  const Matrix transit = reconstruct_density(run.frame(), {0});
  const double transit_delta =
      max_abs_diff(transit, Matrix(0.5 * Matrix::Identity(2, 2)));

  // Bob decodes into the computational basis, then reads out to records.
  run.gate("cnot", {0, 1});
  run.gate("h", {0});
  run.gate("cnot", {0, 2});
  run.gate("cnot", {1, 3});

  const std::vector<BranchRecord> branches =
      branch_decomposition(run.frame(), {2, 3});
  std::size_t decoded = 0;
  double decoded_measure = 0.0;
  for (std::size_t b = 0; b < branches.size(); ++b) {
    if (branches[b].measure > decoded_measure) {
      decoded_measure = branches[b].measure;
      decoded = b;
    }
  }
  const int decoded_i = static_cast<int>(decoded >> 1);
  const int decoded_j = static_cast<int>(decoded & 1);

  const bool ok = decoded_i == i && decoded_j == j &&
                  std::abs(decoded_measure - 1.0) <= kMeasureTol &&
                  transit_delta <= kMeasureTol &&
                  x_sign_delta <= tol::locality && z_sign_delta <= tol::locality;

  nlohmann::json outcome{{"i", i},
                         {"j", j},
                         {"decoded_i", decoded_i},
                         {"decoded_j", decoded_j},
                         {"decoded_measure", decoded_measure},
                         {"transit_density", density_json(transit)},
                         {"transit_mixedness_delta", transit_delta},
                         {"x_component_sign", i ? -1 : 1},
                         {"z_component_sign", j ? -1 : 1},
                         {"x_sign_delta", x_sign_delta},
                         {"z_sign_delta", z_sign_delta},
                         {"branches", branches_json(branches)}};
  return run.finish(std::move(outcome), ok);
}

ProtocolReport teleportation(Complex alpha, Complex beta,
                             const TeleportOptions& options) {
  if (std::abs(std::norm(alpha) + std::norm(beta) - 1.0) > 1e-10) {
    throw std::invalid_argument("teleportation: input state is not normalized");
  }
  if (options.hops < 2) {
    throw std::invalid_argument(
        "teleportation: hops counts Alice's write and Bob's read, so it is at least 2");
  }
  const std::size_t carrier_pairs = options.hops - 1;

  // Wires: 0 input, 1 Alice's Bell half, 2 Bob's Bell half, then the carrier
  // pairs, then (optionally) two environment qubits dephasing the first
  // carrier pair.
  const std::size_t n_qubits =
      3 + 2 * carrier_pairs + (options.decohere_channel ? 2 : 0);
  const SystemLayout layout(std::vector<std::size_t>(n_qubits, 2));
  const auto carrier_z = [](std::size_t pair) { return 3 + 2 * pair; };
  const auto carrier_x = [](std::size_t pair) { return 4 + 2 * pair; };

  Matrix prep(2, 2);
  prep << alpha, -std::conj(beta), beta, std::conj(alpha);

  Runner run(layout, "teleportation");
  run.custom("prep", prep, {0});
  run.gate("h", {1});
  run.gate("cnot", {1, 2});
  run.gate("cnot", {0, 1});
  run.gate("h", {0});
  run.gate("cnot", {0, carrier_z(0)});
  run.gate("cnot", {1, carrier_x(0)});
  if (options.decohere_channel) {
    run.gate("cnot", {carrier_z(0), n_qubits - 2});
    run.gate("cnot", {carrier_x(0), n_qubits - 1});
  }
  for (std::size_t pair = 1; pair < carrier_pairs; ++pair) {
    run.gate("cnot", {carrier_z(pair - 1), carrier_z(pair)});
    run.gate("cnot", {carrier_x(pair - 1), carrier_x(pair)});
  }
  const std::size_t corrections_begin = run.report().steps.size();
  run.gate("cnot", {carrier_x(carrier_pairs - 1), 2});
  run.gate("cz", {carrier_z(carrier_pairs - 1), 2});

  // Bob's wire must sit untouched from the Bell distribution until his
  // correction gates fire.
  double bob_delta_in_transit = 0.0;
  for (std::size_t s = 3; s < corrections_begin; ++s) {
    bob_delta_in_transit =
        std::max(bob_delta_in_transit, run.report().steps[s].audit.deltas[2]);
  }

  const Matrix bob = reconstruct_density(run.frame(), {2});
  Matrix expected(2, 2);
  expected << std::norm(alpha), alpha * std::conj(beta),
      std::conj(alpha) * beta, std::norm(beta);
  const double density_delta = max_abs_diff(bob, expected);

  Vector input(2);
  input << alpha, beta;
  const double fidelity = (input.dot(bob * input)).real();

  const bool ok =
      density_delta <= kDensityTol && bob_delta_in_transit == 0.0;

  nlohmann::json outcome{{"alpha", format_complex(alpha, 10)},
                         {"beta", format_complex(beta, 10)},
                         {"decohere_channel", options.decohere_channel},
                         {"hops", options.hops},
                         {"bob_density", density_json(bob)},
                         {"density_delta", density_delta},
                         {"fidelity", fidelity},
                         {"bob_delta_in_transit", bob_delta_in_transit}};
  return run.finish(std::move(outcome), ok);
}

ProtocolReport local_branching_demo() {
  // Wires: particles 0 (Alice) and 1 (Bob), records 2 and 3, joint record 4, 5.
  const SystemLayout layout({2, 2, 2, 2, 2, 2});
  Runner run(layout, "local-branching");

  run.gate("h", {0});
  run.gate("cnot", {0, 1});

  const DescriptorFrame before_alice = run.frame();
  run.gate("cnot", {0, 2});  // Alice's measurement
  const DescriptorFrame after_alice = run.frame();

  // Bit-identical, not merely within tolerance: Bob's particle and record.
  double bob_side_delta = 0.0;
  for (std::size_t s : {std::size_t{1}, std::size_t{3}}) {
    for (const auto& [key, component] : before_alice.descriptors[s].components) {
      bob_side_delta = std::max(
          bob_side_delta,
          max_abs_diff(component, after_alice.descriptors[s].components.at(key)));
    }
  }

  const std::vector<BranchRecord> alice_branches =
      branch_decomposition(run.frame(), {2});

  const DescriptorFrame before_bob = run.frame();
  run.gate("cnot", {1, 3});  // Bob's measurement
  double alice_side_delta = 0.0;
  for (std::size_t s : {std::size_t{0}, std::size_t{2}}) {
    for (const auto& [key, component] : before_bob.descriptors[s].components) {
      alice_side_delta = std::max(
          alice_side_delta,
          max_abs_diff(component, run.frame().descriptors[s].components.at(key)));
    }
  }

  // Comparison interaction: both records copied into the joint register.
  run.gate("cnot", {2, 4});
  run.gate("cnot", {3, 5});

  const std::vector<BranchRecord> joint = branch_decomposition(run.frame(), {4, 5});
  const double joint_defect =
      std::max(std::max(std::abs(joint[0].measure - 0.5), std::abs(joint[3].measure - 0.5)),
               std::max(std::abs(joint[1].measure), std::abs(joint[2].measure)));

  bool ok = bob_side_delta == 0.0 && alice_side_delta == 0.0 &&
            joint_defect <= kMeasureTol;
  for (const BranchRecord& b : alice_branches) {
    ok = ok && std::abs(b.measure - 0.5) <= kMeasureTol;
  }

  nlohmann::json outcome{{"alice_record_branches", branches_json(alice_branches)},
                         {"bob_side_delta_during_alice_measurement", bob_side_delta},
                         {"alice_side_delta_during_bob_measurement", alice_side_delta},
                         {"joint_record_defect", joint_defect},
                         {"branches", branches_json(joint)}};
  return run.finish(std::move(outcome), ok);
}

ProtocolReport chsh_game(const ChshAngles& angles) {
  // Wires: particles 0 and 1, local records 2 and 3, joint record 4 and 5.
  const SystemLayout layout({2, 2, 2, 2, 2, 2});

  ProtocolReport report;
  report.protocol = "chsh-game";
  report.pass = true;

  nlohmann::json settings = nlohmann::json::array();
  double winning_measure = 0.0;
  double correlations[2][2] = {{0.0, 0.0}, {0.0, 0.0}};
  double oracle_delta = 0.0;

  for (int ra = 0; ra < 2; ++ra) {
    for (int rb = 0; rb < 2; ++rb) {
      const double theta_a = ra ? angles.a_prime : angles.a;
      const double theta_b = rb ? angles.b_prime : angles.b;

      Runner run(layout, "chsh-game");
      run.gate("h", {0});
      run.gate("cnot", {0, 1});
      // Measure cos(theta) Z + sin(theta) X: rotate by ry(-theta), record.
      run.gate("ry", {0}, {-theta_a});
      run.gate("cnot", {0, 2});
      run.gate("ry", {1}, {-theta_b});
      run.gate("cnot", {1, 3});
      // Comparison interaction builds the joint record.
      run.gate("cnot", {2, 4});
      run.gate("cnot", {3, 5});

      const std::vector<BranchRecord> branches =
          branch_decomposition(run.frame(), {4, 5});
      const double p00 = branches[0].measure, p01 = branches[1].measure;
      const double p10 = branches[2].measure, p11 = branches[3].measure;
      const double correlation = p00 + p11 - p01 - p10;
      const double win = (ra == 1 && rb == 1) ? p01 + p10 : p00 + p11;
      correlations[ra][rb] = correlation;
      winning_measure += 0.25 * win;

      // The branch measures must reproduce the Born probabilities of the
      // statevector oracle for the same circuit.
      Circuit circuit;
      circuit.gates = {GateOp{"h", {0}, {}},         GateOp{"cnot", {0, 1}, {}},
                       GateOp{"ry", {0}, {-theta_a}}, GateOp{"cnot", {0, 2}, {}},
                       GateOp{"ry", {1}, {-theta_b}}, GateOp{"cnot", {1, 3}, {}},
                       GateOp{"cnot", {2, 4}, {}},    GateOp{"cnot", {3, 5}, {}}};
      const SchrodingerState state = schrodinger_run(circuit, layout);
      const Matrix oracle = partial_trace(state.amplitudes, {4, 5}, layout);
      for (std::size_t b = 0; b < branches.size(); ++b) {
        oracle_delta = std::max(
            oracle_delta, std::abs(branches[b].measure - oracle(b, b).real()));
      }

      for (ProtocolStep& step : run.report().steps) {
        report.pass = report.pass && step.audit.pass;
        report.steps.push_back(std::move(step));
      }
      settings.push_back(nlohmann::json{{"ra", ra},
                                        {"rb", rb},
                                        {"theta_a", theta_a},
                                        {"theta_b", theta_b},
                                        {"correlation", correlation},
                                        {"winning_measure", win},
                                        {"branches", branches_json(branches)}});
    }
  }

  const double s_value = correlations[0][0] + correlations[0][1] +
                         correlations[1][0] - correlations[1][1];
  report.pass = report.pass && oracle_delta <= kMeasureTol;

  report.outcome = nlohmann::json{
      {"angles",
       {{"a", angles.a}, {"a_prime", angles.a_prime}, {"b", angles.b},
        {"b_prime", angles.b_prime}}},
      {"convention",
       "theta measures cos(theta)Z + sin(theta)X; outcome bit 0 is the +1 "
       "eigenvalue; the game is won iff x XOR y = ra AND rb"},
      {"settings", std::move(settings)},
      {"winning_measure", winning_measure},
      {"s_value", s_value},
      {"oracle_max_delta", oracle_delta}};
  return report;
}

}  // namespace dlab::protocols
