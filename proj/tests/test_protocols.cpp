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

#include <cmath>
#include <random>

#include "dlab/pictures.hpp"
#include "dlab/protocols.hpp"
#include "dlab/random.hpp"
#include "dlab/schrodinger.hpp"
#include "dlab/tensor.hpp"

#include "test_support.hpp"

using namespace dlab;
using namespace dlab::protocols;

TEST_CASE("superdense coding decodes all four messages") {
  DescriptorFrame frames_after_encoding[4] = {
      {SystemLayout({2}), Vector(), {}, 0, Matrix()},
      {SystemLayout({2}), Vector(), {}, 0, Matrix()},
      {SystemLayout({2}), Vector(), {}, 0, Matrix()},
      {SystemLayout({2}), Vector(), {}, 0, Matrix()}};
  Matrix transits[4];

  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const ProtocolReport report = superdense_coding(i, j);
      CHECK(report.pass);
      CHECK(report.outcome.at("decoded_i").get<int>() == i);
      CHECK(report.outcome.at("decoded_j").get<int>() == j);
      CHECK(report.outcome.at("decoded_measure").get<double>() ==
            doctest::Approx(1.0).epsilon(1e-9));
      CHECK(report.outcome.at("transit_mixedness_delta").get<double>() <= 1e-10);
      CHECK(report.outcome.at("x_component_sign").get<int>() == (i ? -1 : 1));
      CHECK(report.outcome.at("z_component_sign").get<int>() == (j ? -1 : 1));
    }
  }

  // The four encodings produce frames that are far apart in descriptor
  // space while their transit densities are indistinguishable.
  const SystemLayout layout({2, 2, 2, 2});
  int idx = 0;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      Circuit circuit{{GateOp{"h", {0}, {}}, GateOp{"cnot", {0, 1}, {}}}};
      if (j) circuit.gates.push_back(GateOp{"x", {0}, {}});
      if (i) circuit.gates.push_back(GateOp{"z", {0}, {}});
      frames_after_encoding[idx] = run_heisenberg(circuit, layout);
      transits[idx] = reconstruct_density(frames_after_encoding[idx], {0});
      ++idx;
    }
  }
  for (int a = 0; a < 4; ++a) {
    for (int b = a + 1; b < 4; ++b) {
      CHECK(frame_delta(frames_after_encoding[a], frames_after_encoding[b]) >= 1.0);
      CHECK(max_abs_diff(transits[a], transits[b]) <= 1e-10);
    }
  }

  CHECK_THROWS_AS(superdense_coding(2, 0), std::invalid_argument);
}

TEST_CASE("teleportation of basis and superposition states") {
  const ProtocolReport zero = teleportation(Complex(1, 0), Complex(0, 0));
  CHECK(zero.pass);
  CHECK(zero.outcome.at("fidelity").get<double>() ==
        doctest::Approx(1.0).epsilon(1e-9));

  const double s = 1.0 / std::sqrt(2.0);
  const ProtocolReport plus = teleportation(Complex(s, 0), Complex(s, 0));
  CHECK(plus.pass);
  CHECK(plus.outcome.at("density_delta").get<double>() <= 1e-9);

  CHECK_THROWS_AS(teleportation(Complex(1, 0), Complex(1, 0)),
                  std::invalid_argument);
}

TEST_CASE("teleportation survives dephasing and relaying") {
  const Complex alpha(0.6, 0.0);
  const Complex beta(0.0, 0.8);

  const ProtocolReport direct = teleportation(alpha, beta);
  TeleportOptions dephased;
  dephased.decohere_channel = true;
  const ProtocolReport noisy = teleportation(alpha, beta, dephased);
  TeleportOptions relayed;
  relayed.hops = 3;
  const ProtocolReport cascaded = teleportation(alpha, beta, relayed);

  for (const ProtocolReport* report : {&direct, &noisy, &cascaded}) {
    CHECK(report->pass);
    CHECK(report->outcome.at("fidelity").get<double>() >= 1.0 - 1e-9);
    CHECK(report->outcome.at("bob_delta_in_transit").get<double>() == 0.0);
  }

  // Same output density with and without channel decoherence.
  const auto density_entry = [](const ProtocolReport& r, int row, int col) {
    return parse_complex(
        r.outcome.at("bob_density")[row][col].get<std::string>());
  };
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      CHECK(std::abs(density_entry(direct, r, c) - density_entry(noisy, r, c)) <=
            1e-9);
    }
  }
}

TEST_CASE("teleportation fidelity over random inputs") {
  std::mt19937_64 rng(103);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int k = 0; k < 6; ++k) {
    const double theta = std::acos(2.0 * unit(rng) - 1.0);
    const double phi = 2.0 * M_PI * unit(rng);
    const Complex alpha(std::cos(theta / 2.0), 0.0);
    const Complex beta = std::sin(theta / 2.0) * std::exp(Complex(0, phi));
    TeleportOptions options;
    options.decohere_channel = (k % 2 == 1);
    options.hops = (k % 3 == 2) ? 3 : 2;
    const ProtocolReport report = teleportation(alpha, beta, options);
    CHECK(report.pass);
    CHECK(report.outcome.at("fidelity").get<double>() >= 1.0 - 1e-9);
  }
}

TEST_CASE("local branching stays on its own wing") {
  const ProtocolReport report = local_branching_demo();
  CHECK(report.pass);
  CHECK(report.outcome.at("bob_side_delta_during_alice_measurement").get<double>() ==
        0.0);
  CHECK(report.outcome.at("alice_side_delta_during_bob_measurement").get<double>() ==
        0.0);

  const auto alice = report.outcome.at("alice_record_branches");
  CHECK(alice[0].at("measure").get<double>() == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(alice[1].at("measure").get<double>() == doctest::Approx(0.5).epsilon(1e-10));

  const auto joint = report.outcome.at("branches");
  CHECK(joint[0].at("measure").get<double>() == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(std::abs(joint[1].at("measure").get<double>()) <= 1e-10);
  CHECK(std::abs(joint[2].at("measure").get<double>()) <= 1e-10);
  CHECK(joint[3].at("measure").get<double>() == doctest::Approx(0.5).epsilon(1e-10));
}

TEST_CASE("pre-comparison densities ignore the other wing's basis") {
  // Alice's side (particle 0, record 2) reconstructs identically no matter
  // which basis Bob measures in.
  const SystemLayout layout({2, 2, 2, 2});
  const auto run_with_bob_angle = [&](double theta) {
    Circuit circuit{{GateOp{"h", {0}, {}}, GateOp{"cnot", {0, 1}, {}},
                     GateOp{"cnot", {0, 2}, {}}, GateOp{"ry", {1}, {-theta}},
                     GateOp{"cnot", {1, 3}, {}}}};
    return run_heisenberg(circuit, layout);
  };
  const DescriptorFrame a = run_with_bob_angle(0.0);
  const DescriptorFrame b = run_with_bob_angle(1.1);
  for (const std::vector<std::size_t>& subset :
       {std::vector<std::size_t>{0}, {2}, {0, 2}}) {
    CHECK(max_abs_diff(reconstruct_density(a, subset),
                       reconstruct_density(b, subset)) <= 1e-10);
  }
}

TEST_CASE("chsh at the optimal angles") {
  const ProtocolReport report = chsh_game();
  CHECK(report.pass);
  const double winning = report.outcome.at("winning_measure").get<double>();
  CHECK(std::abs(winning - (2.0 + std::sqrt(2.0)) / 4.0) <= 1e-9);
  CHECK(std::abs(winning - 0.8535533906) <= 1e-9);
  CHECK(std::abs(report.outcome.at("s_value").get<double>() -
                 2.0 * std::sqrt(2.0)) <= 1e-9);
  CHECK(report.outcome.at("oracle_max_delta").get<double>() <= 1e-10);

  // Correlation at equal angles is 1: check the (a, b) = (0, pi/4) setting
  // against cos(theta_a - theta_b) while we are at it.
  for (const auto& setting : report.outcome.at("settings")) {
    const double expected = std::cos(setting.at("theta_a").get<double>() -
                                     setting.at("theta_b").get<double>());
    CHECK(setting.at("correlation").get<double>() ==
          doctest::Approx(expected).epsilon(1e-9));
  }
}

TEST_CASE("chsh with aligned z measurements is perfectly correlated") {
  ChshAngles aligned;
  aligned.a = aligned.a_prime = aligned.b = aligned.b_prime = 0.0;
  const ProtocolReport report = chsh_game(aligned);
  CHECK(report.pass);
  // Every setting measures z on both wings of a Bell pair.
  for (const auto& setting : report.outcome.at("settings")) {
    CHECK(setting.at("correlation").get<double>() ==
          doctest::Approx(1.0).epsilon(1e-10));
  }
  // Three settings win with certainty, the (1,1) setting never does.
  CHECK(report.outcome.at("winning_measure").get<double>() ==
        doctest::Approx(0.75).epsilon(1e-10));
}

TEST_CASE("branch decomposition sums to one") {
  std::mt19937_64 rng(107);
  const SystemLayout layout({2, 2, 2});
  const DescriptorFrame frame = run_heisenberg(random_circuit(3, 8, rng), layout);
  const auto branches = branch_decomposition(frame, {0, 2});
  CHECK(branches.size() == 4);
  double total = 0.0;
  for (const auto& b : branches) total += b.measure;
  CHECK(total == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(branches[1].labels == "01");
  CHECK(branches[2].labels == "10");
}

TEST_CASE("protocol reports serialize with steps and audits") {
  const ProtocolReport report = superdense_coding(0, 1);
  const nlohmann::json j = report.to_json();
  CHECK(j.at("protocol").get<std::string>() == "superdense-coding");
  CHECK(j.at("steps").size() == report.steps.size());
  for (const auto& step : j.at("steps")) {
    CHECK(step.at("audit").at("pass").get<bool>());
  }
  const std::string csv = report.branch_csv();
  CHECK(csv.rfind("branch,measure\n", 0) == 0);
  CHECK(csv.find("01,") != std::string::npos);
}
