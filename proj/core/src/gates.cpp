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

#include "dlab/gates.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <stdexcept>

namespace dlab {

namespace {

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

const std::map<std::string, GateSignature>& table() {
  static const std::map<std::string, GateSignature> t = {
      {"h", {1, 0}},    {"x", {1, 0}},  {"y", {1, 0}},    {"z", {1, 0}},
      {"s", {1, 0}},    {"t", {1, 0}},  {"rx", {1, 1}},   {"ry", {1, 1}},
      {"rz", {1, 1}},   {"cnot", {2, 0}}, {"cz", {2, 0}}, {"swap", {2, 0}},
      {"cp", {2, 1}},
  };
  return t;
}

}  // namespace

bool is_known_gate(const std::string& name) {
  return table().count(lower(name)) != 0;
}

GateSignature gate_signature(const std::string& name) {
  const auto it = table().find(lower(name));
  if (it == table().end()) {
    throw std::invalid_argument("unknown gate: " + name);
  }
  return it->second;
}

Matrix pauli_x() {
  Matrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

Matrix pauli_y() {
  Matrix m(2, 2);
  m << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
  return m;
}

Matrix pauli_z() {
  Matrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

Matrix identity(std::size_t dim) {
  return Matrix::Identity(static_cast<Eigen::Index>(dim),
                          static_cast<Eigen::Index>(dim));
}

Matrix gate_matrix(const std::string& raw_name, const std::vector<double>& params) {
  const std::string name = lower(raw_name);
  const GateSignature sig = gate_signature(name);
  if (params.size() != sig.param_count) {
    throw std::invalid_argument("gate " + name + ": expected " +
                                std::to_string(sig.param_count) + " parameter(s), got " +
                                std::to_string(params.size()));
  }
  const Complex i(0.0, 1.0);

  if (name == "h") {
    Matrix m(2, 2);
    const double s = 1.0 / std::sqrt(2.0);
    m << s, s, s, -s;
    return m;
  }
  if (name == "x") return pauli_x();
  if (name == "y") return pauli_y();
  if (name == "z") return pauli_z();
  if (name == "s") {
    Matrix m = Matrix::Zero(2, 2);
    m(0, 0) = 1;
    m(1, 1) = i;
    return m;
  }
  if (name == "t") {
    Matrix m = Matrix::Zero(2, 2);
    m(0, 0) = 1;
    m(1, 1) = std::exp(i * (M_PI / 4.0));
    return m;
  }
  if (name == "rx" || name == "ry" || name == "rz") {
    const double half = params[0] / 2.0;
    const double c = std::cos(half);
    const double s = std::sin(half);
    Matrix m(2, 2);
    if (name == "rx") {
      m << Complex(c, 0), -i * s, -i * s, Complex(c, 0);
    } else if (name == "ry") {
      m << Complex(c, 0), Complex(-s, 0), Complex(s, 0), Complex(c, 0);
    } else {
      m << std::exp(-i * half), Complex(0, 0), Complex(0, 0), std::exp(i * half);
    }
    return m;
  }
  if (name == "cnot") {
    Matrix m = Matrix::Zero(4, 4);
    m(0, 0) = 1;
    m(1, 1) = 1;
    m(2, 3) = 1;
    m(3, 2) = 1;
    return m;
  }
  if (name == "cz") {
    Matrix m = Matrix::Identity(4, 4);
    m(3, 3) = -1;
    return m;
  }
  if (name == "swap") {
    Matrix m = Matrix::Zero(4, 4);
    m(0, 0) = 1;
    m(1, 2) = 1;
    m(2, 1) = 1;
    m(3, 3) = 1;
    return m;
  }
  // cp
  Matrix m = Matrix::Identity(4, 4);
  m(3, 3) = std::exp(i * params[0]);
  return m;
}

Matrix gate_matrix(const GateOp& op) { return gate_matrix(op.name, op.params); }

}  // namespace dlab
