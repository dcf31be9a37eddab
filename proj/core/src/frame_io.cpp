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

#include "dlab/frame_io.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace dlab {

namespace {

// Widths beyond this make the 4^n-word expansion pointless next to the
// dense form.
constexpr std::size_t kPauliExportQubits = 6;

std::string pair_text(Complex z) {
  char buf[128];
  std::snprintf(buf, sizeof(buf), "%.17g,%.17g", z.real(), z.imag());
  return buf;
}

Complex parse_pair(const std::string& text) {
  const std::size_t comma = text.find(',');
  if (comma == std::string::npos) {
    throw std::invalid_argument("frame snapshot: expected \"re,im\" pair");
  }
  char* end = nullptr;
  const std::string re = text.substr(0, comma);
  const std::string im = text.substr(comma + 1);
  const double r = std::strtod(re.c_str(), &end);
  if (end != re.c_str() + re.size() || re.empty()) {
    throw std::invalid_argument("frame snapshot: bad real part '" + re + "'");
  }
  const double i = std::strtod(im.c_str(), &end);
  if (end != im.c_str() + im.size() || im.empty()) {
    throw std::invalid_argument("frame snapshot: bad imaginary part '" + im + "'");
  }
  return Complex(r, i);
}

nlohmann::json dense_json(const Matrix& m) {
  std::vector<std::string> entries;
  entries.reserve(static_cast<std::size_t>(m.size()));
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      entries.push_back(pair_text(m(r, c)));
    }
  }
  return nlohmann::json{{"dim", m.rows()}, {"entries", std::move(entries)}};
}

Matrix dense_from_json(const nlohmann::json& j, std::size_t expected_dim) {
  const std::size_t dim = j.at("dim").get<std::size_t>();
  if (dim != expected_dim) {
    throw std::invalid_argument("frame snapshot: dense component dimension mismatch");
  }
  const auto& entries = j.at("entries");
  if (entries.size() != dim * dim) {
    throw std::invalid_argument("frame snapshot: dense entry count mismatch");
  }
  Matrix m(dim, dim);
  std::size_t k = 0;
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) {
      m(r, c) = parse_pair(entries[k++].get<std::string>());
    }
  }
  return m;
}

nlohmann::json component_json(const Matrix& component, const SystemLayout& layout,
                              bool force_dense, std::size_t pauli_term_cap) {
  if (!force_dense && layout.all_qubits() && layout.size() <= kPauliExportQubits) {
    PauliSum sum = pauli_decompose(component, layout.size());
    if (sum.term_count() <= pauli_term_cap) {
      return nlohmann::json{{"pauli", sum.str()}};
    }
  }
  return nlohmann::json{{"dense", dense_json(component)}};
}

Matrix component_from_json(const nlohmann::json& j, const SystemLayout& layout) {
  if (j.contains("pauli")) {
    if (!layout.all_qubits()) {
      throw std::invalid_argument(
          "frame snapshot: pauli component on a non-qubit layout");
    }
    return PauliSum::parse(j.at("pauli").get<std::string>(), layout.size()).to_matrix();
  }
  return dense_from_json(j.at("dense"), layout.total_dim());
}

}  // namespace

nlohmann::json frame_to_json(const DescriptorFrame& frame, bool force_dense,
                             std::size_t pauli_term_cap) {
  nlohmann::json j;
  j["layout"] = nlohmann::json{{"dims", frame.layout.dims()}};
  j["time"] = frame.time;

  std::vector<std::string> reference;
  reference.reserve(static_cast<std::size_t>(frame.reference.size()));
  for (Eigen::Index k = 0; k < frame.reference.size(); ++k) {
    reference.push_back(pair_text(frame.reference[k]));
  }
  j["reference"] = std::move(reference);
  j["cumulative"] = dense_json(frame.cumulative);

  j["descriptors"] = nlohmann::json::array();
  for (const Descriptor& d : frame.descriptors) {
    nlohmann::json components;
    for (const auto& [key, component] : d.components) {
      components[key] =
          component_json(component, frame.layout, force_dense, pauli_term_cap);
    }
    j["descriptors"].push_back(
        nlohmann::json{{"system", d.system}, {"components", std::move(components)}});
  }
  return j;
}

DescriptorFrame frame_from_json(const nlohmann::json& j) {
  const SystemLayout layout(j.at("layout").at("dims").get<std::vector<std::size_t>>());
  DescriptorFrame frame{layout, Vector::Zero(layout.total_dim()), {}, 0,
                        Matrix::Identity(layout.total_dim(), layout.total_dim())};
  frame.time = j.at("time").get<std::size_t>();

  const auto& reference = j.at("reference");
  if (reference.size() != layout.total_dim()) {
    throw std::invalid_argument("frame snapshot: reference length mismatch");
  }
  for (std::size_t k = 0; k < layout.total_dim(); ++k) {
    frame.reference[k] = parse_pair(reference[k].get<std::string>());
  }
  if (std::abs(frame.reference.norm() - 1.0) > 1e-6) {
    throw std::invalid_argument("frame snapshot: reference is not a unit vector");
  }
  if (j.contains("cumulative")) {
    frame.cumulative = dense_from_json(j.at("cumulative"), layout.total_dim());
  }

  const auto& descriptors = j.at("descriptors");
  if (descriptors.size() != layout.size()) {
    throw std::invalid_argument("frame snapshot: descriptor count mismatch");
  }
  frame.descriptors.resize(layout.size());
  for (const auto& dj : descriptors) {
    const std::size_t system = dj.at("system").get<std::size_t>();
    if (system >= layout.size()) {
      throw std::invalid_argument("frame snapshot: descriptor system out of range");
    }
    Descriptor& d = frame.descriptors[system];
    d.system = system;
    for (const auto& [key, cj] : dj.at("components").items()) {
      d.components[key] = component_from_json(cj, layout);
    }
  }
  for (std::size_t s = 0; s < layout.size(); ++s) {
    const auto& components = frame.descriptors[s].components;
    if (layout.is_qubit(s)) {
      if (!components.count("x") || !components.count("z")) {
        throw std::invalid_argument("frame snapshot: qubit descriptor needs x and z");
      }
    } else {
      for (std::size_t a = 0; a < layout.dim(s); ++a) {
        for (std::size_t b = 0; b < layout.dim(s); ++b) {
          if (!components.count(matrix_unit_key(a, b))) {
            throw std::invalid_argument(
                "frame snapshot: missing matrix-unit component");
          }
        }
      }
    }
  }
  return frame;
}

std::string frame_to_string(const DescriptorFrame& frame, bool force_dense) {
  return frame_to_json(frame, force_dense).dump(2);
}

DescriptorFrame frame_from_string(const std::string& text) {
  return frame_from_json(nlohmann::json::parse(text));
}

}  // namespace dlab
