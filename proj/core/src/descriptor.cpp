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

#include "dlab/descriptor.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "dlab/tensor.hpp"

namespace dlab {

namespace {

constexpr double kFunctionalTol = 1e-10;

void check_targets(const std::vector<std::size_t>& targets,
                   const SystemLayout& layout, const char* what) {
  if (targets.empty()) {
    throw std::invalid_argument(std::string(what) + ": no targets");
  }
  std::set<std::size_t> seen;
  for (std::size_t t : targets) {
    if (t >= layout.size()) {
      throw std::out_of_range(std::string(what) + ": target out of range");
    }
    if (!seen.insert(t).second) {
      throw std::invalid_argument(std::string(what) + ": duplicate target");
    }
    if (!layout.is_qubit(t)) {
      throw std::invalid_argument(std::string(what) +
                                  ": step evolution supports qubit targets only");
    }
  }
}

// The defining property of a gate functional, checked on the targets' own
// 2^k space: evaluating it on the initial generators must rebuild the gate.
void check_functional(const PauliSum& functional, const Matrix& matrix) {
  const std::size_t k = functional.n_qubits();
  const SystemLayout local(std::vector<std::size_t>(k, 2));
  ComponentMap initial;
  for (std::size_t slot = 0; slot < k; ++slot) {
    initial[slot] = XZComponents{tensor_embed(pauli_x(), {slot}, local),
                                 tensor_embed(pauli_z(), {slot}, local)};
  }
  const Matrix rebuilt = pauli_eval(functional, initial);
  if (max_abs_diff(rebuilt, matrix) > kFunctionalTol) {
    throw std::invalid_argument(
        "gate event: functional fails its defining property");
  }
}

// Evolved matrix units |j><i| of one subsystem, generated from its
// descriptor components. Qubits use the polynomial dictionary
// |0><0| = (1+z)/2, |1><1| = (1-z)/2, |1><0| = x(1+z)/2, |0><1| = x(1-z)/2;
// other dimensions carry their units as components directly.
class UnitSet {
 public:
  UnitSet(const Descriptor& descriptor, const SystemLayout& layout)
      : descriptor_(descriptor), dim_(layout.dim(descriptor.system)) {
    if (dim_ == 2) {
      const Matrix& x = descriptor_.components.at("x");
      const Matrix& z = descriptor_.components.at("z");
      const Matrix one = Matrix::Identity(x.rows(), x.cols());
      units_.resize(4);
      units_[unit_index(0, 0)] = 0.5 * (one + z);
      units_[unit_index(1, 1)] = 0.5 * (one - z);
      units_[unit_index(1, 0)] = x * units_[unit_index(0, 0)];
      units_[unit_index(0, 1)] = x * units_[unit_index(1, 1)];
    }
  }

  const Matrix& unit(std::size_t j, std::size_t i) const {
    if (dim_ == 2) return units_[unit_index(j, i)];
    return descriptor_.components.at(matrix_unit_key(j, i));
  }

 private:
  std::size_t unit_index(std::size_t j, std::size_t i) const {
    return j * dim_ + i;
  }

  const Descriptor& descriptor_;
  std::size_t dim_;
  std::vector<Matrix> units_;
};

void check_subset(const std::vector<std::size_t>& subset,
                  const SystemLayout& layout, const char* what) {
  if (subset.empty()) {
    throw std::invalid_argument(std::string(what) + ": empty subsystem subset");
  }
  std::set<std::size_t> seen;
  for (std::size_t s : subset) {
    if (s >= layout.size()) {
      throw std::out_of_range(std::string(what) + ": subsystem out of range");
    }
    if (!seen.insert(s).second) {
      throw std::invalid_argument(std::string(what) + ": duplicate subsystem");
    }
  }
}

}  // namespace

std::string matrix_unit_key(std::size_t j, std::size_t i) {
  return "E_" + std::to_string(j) + "," + std::to_string(i);
}

GateEvent make_gate_event(const GateOp& op, const SystemLayout& layout) {
  validate_circuit(Circuit{{op}}, layout);
  GateEvent event;
  event.op = op;
  event.matrix = gate_matrix(op);
  event.functional = pauli_decompose(event.matrix, op.targets.size());
  check_functional(event.functional, event.matrix);
  return event;
}

GateEvent make_gate_event(const std::string& name, const Matrix& matrix,
                          const std::vector<std::size_t>& targets,
                          const SystemLayout& layout) {
  check_targets(targets, layout, "gate event");
  require_unitary(matrix, "gate event");
  if (static_cast<std::size_t>(matrix.rows()) != (std::size_t{1} << targets.size())) {
    throw std::invalid_argument("gate event: matrix does not match target count");
  }
  GateEvent event;
  event.op = GateOp{name, targets, {}};
  event.matrix = matrix;
  event.functional = pauli_decompose(matrix, targets.size());
  check_functional(event.functional, event.matrix);
  return event;
}

DescriptorFrame init_frame(const SystemLayout& layout) {
  DescriptorFrame frame{layout, Vector::Zero(layout.total_dim()), {}, 0,
                        identity(layout.total_dim())};
  frame.reference[0] = Complex(1.0, 0.0);
  frame.descriptors.reserve(layout.size());
  for (std::size_t s = 0; s < layout.size(); ++s) {
    Descriptor d;
    d.system = s;
    const std::size_t dim = layout.dim(s);
    if (dim == 2) {
      d.components["x"] = tensor_embed(pauli_x(), {s}, layout);
      d.components["z"] = tensor_embed(pauli_z(), {s}, layout);
    } else {
      for (std::size_t j = 0; j < dim; ++j) {
        for (std::size_t i = 0; i < dim; ++i) {
          Matrix unit = Matrix::Zero(dim, dim);
          unit(j, i) = Complex(1.0, 0.0);
          d.components[matrix_unit_key(j, i)] = tensor_embed(unit, {s}, layout);
        }
      }
    }
    frame.descriptors.push_back(std::move(d));
  }
  return frame;
}

DescriptorFrame evolve_global(const DescriptorFrame& frame, const Matrix& u) {
  if (static_cast<std::size_t>(u.rows()) != frame.layout.total_dim() ||
      u.rows() != u.cols()) {
    throw std::invalid_argument("evolve_global: dimension mismatch");
  }
  require_unitary(u, "evolve_global");

  DescriptorFrame next = frame;
  const Matrix ua = u.adjoint();
  for (Descriptor& d : next.descriptors) {
    for (auto& [key, component] : d.components) {
      component = ua * component * u;
    }
  }
  next.cumulative = frame.cumulative * u;
  next.time = frame.time + 1;
  return next;
}

DescriptorFrame evolve_step(const DescriptorFrame& frame, const GateEvent& event) {
  check_targets(event.op.targets, frame.layout, "evolve_step");
  check_functional(event.functional, event.matrix);

  // The conjugator of Eq.-style step evolution: the gate rebuilt from the
  // targets' evolved components.
  ComponentMap evolved;
  for (std::size_t slot = 0; slot < event.op.targets.size(); ++slot) {
    const Descriptor& d = frame.descriptors.at(event.op.targets[slot]);
    evolved[slot] = XZComponents{d.components.at("x"), d.components.at("z")};
  }
  Matrix m = pauli_eval(event.functional, evolved);
  // m is exactly unitary in exact arithmetic. Newton-Schulz polishing strips
  // the float drift that would otherwise compound through deep circuits,
  // since m is rebuilt from components it previously conjugated.
  const Matrix eye = identity(m.rows());
  for (int iter = 0; iter < 3; ++iter) {
    const Matrix gram = m.adjoint() * m;
    const double drift = max_abs(Matrix(gram - eye));
    if (drift <= 1e-14) break;
    if (drift >= 0.5) {
      throw std::runtime_error("evolve_step: conjugator is far from unitary");
    }
    m = 0.5 * (m * (3.0 * eye - gram));
  }
  const Matrix ma = m.adjoint();

  DescriptorFrame next = frame;
  // Off-target descriptors commute with m and stay exactly as they are;
  // only the targets are conjugated.
  for (std::size_t t : event.op.targets) {
    for (auto& [key, component] : next.descriptors[t].components) {
      component = ma * component * m;
    }
  }
  next.cumulative =
      tensor_embed(event.matrix, event.op.targets, frame.layout) * frame.cumulative;
  next.time = frame.time + 1;
  return next;
}

DescriptorFrame run_heisenberg(const Circuit& circuit, const SystemLayout& layout) {
  validate_circuit(circuit, layout);
  DescriptorFrame frame = init_frame(layout);
  for (const GateOp& op : circuit.gates) {
    frame = evolve_step(frame, make_gate_event(op, layout));
  }
  return frame;
}

LocalityReport locality_audit(const DescriptorFrame& before,
                              const DescriptorFrame& after,
                              const std::vector<std::size_t>& targets) {
  if (!(before.layout == after.layout)) {
    throw std::invalid_argument("locality_audit: mismatched layouts");
  }
  if (before.reference != after.reference) {
    throw std::invalid_argument("locality_audit: frames share no reference");
  }
  if (after.time != before.time + 1) {
    throw std::invalid_argument("locality_audit: frames are not consecutive");
  }

  LocalityReport report;
  report.targets = targets;
  report.deltas.resize(before.layout.size(), 0.0);
  for (std::size_t s = 0; s < before.layout.size(); ++s) {
    double delta = 0.0;
    const auto& lhs = before.descriptors[s].components;
    const auto& rhs = after.descriptors[s].components;
    for (const auto& [key, component] : lhs) {
      delta = std::max(delta, max_abs_diff(component, rhs.at(key)));
    }
    report.deltas[s] = delta;
  }
  report.max_off_target = 0.0;
  for (std::size_t s = 0; s < report.deltas.size(); ++s) {
    if (std::find(targets.begin(), targets.end(), s) == targets.end()) {
      report.max_off_target = std::max(report.max_off_target, report.deltas[s]);
    }
  }
  report.pass = report.max_off_target <= tol::locality;
  return report;
}

nlohmann::json to_json(const LocalityReport& report) {
  return nlohmann::json{{"deltas", report.deltas},
                        {"targets", report.targets},
                        {"max_off_target", report.max_off_target},
                        {"pass", report.pass}};
}

Matrix reconstruct_density(const DescriptorFrame& frame,
                           const std::vector<std::size_t>& subset) {
  check_subset(subset, frame.layout, "reconstruct_density");

  std::vector<UnitSet> units;
  units.reserve(subset.size());
  std::size_t sub_dim = 1;
  for (std::size_t s : subset) {
    units.emplace_back(frame.descriptors[s], frame.layout);
    sub_dim *= frame.layout.dim(s);
  }
  std::vector<std::size_t> sub_strides(subset.size(), 1);
  for (std::size_t k = subset.size(); k-- > 1;) {
    sub_strides[k - 1] = sub_strides[k] * frame.layout.dim(subset[k]);
  }
  const auto digit = [&](std::size_t index, std::size_t k) {
    return (index / sub_strides[k]) % frame.layout.dim(subset[k]);
  };

  // <i|rho|j> = <0| prod_k evolved |j_k><i_k| |0>, evaluated as matrix-vector
  // chains against the reference.
  Matrix rho(sub_dim, sub_dim);
  for (std::size_t j = 0; j < sub_dim; ++j) {
    for (std::size_t i = 0; i < sub_dim; ++i) {
      Vector v = frame.reference;
      for (std::size_t k = subset.size(); k-- > 0;) {
        v = units[k].unit(digit(j, k), digit(i, k)) * v;
      }
      rho(i, j) = frame.reference.dot(v);
    }
  }
  return rho;
}

double expectation(const DescriptorFrame& frame, const PauliSum& observable) {
  if (observable.n_qubits() != frame.layout.size()) {
    throw std::invalid_argument(
        "expectation: observable width must equal the subsystem count");
  }
  if (!observable.is_hermitian()) {
    throw std::invalid_argument("expectation: observable is not Hermitian");
  }
  ComponentMap components;
  for (const auto& [letters, coeff] : observable.terms()) {
    for (std::size_t q = 0; q < letters.size(); ++q) {
      if (letters[q] == Pauli::I || components.count(q)) continue;
      if (!frame.layout.is_qubit(q)) {
        throw std::invalid_argument(
            "expectation: non-identity letter on a non-qubit subsystem");
      }
      const Descriptor& d = frame.descriptors[q];
      components[q] = XZComponents{d.components.at("x"), d.components.at("z")};
    }
  }
  const Vector image = pauli_eval_apply(observable, components, frame.reference);
  const Complex value = frame.reference.dot(image);
  if (std::abs(value.imag()) > tol::locality) {
    throw std::runtime_error("expectation: imaginary residue too large");
  }
  return value.real();
}

Matrix recover_unitary(const DescriptorFrame& frame) {
  const SystemLayout& layout = frame.layout;
  const std::size_t n = layout.total_dim();

  std::vector<UnitSet> units;
  units.reserve(layout.size());
  for (std::size_t s = 0; s < layout.size(); ++s) {
    units.emplace_back(frame.descriptors[s], layout);
  }
  const auto evolved_unit_row = [&](std::size_t pivot_row, std::size_t i) {
    // Row `pivot_row` of the evolved global unit U+|0><i|U, whose entries
    // are conj(u_{0,pivot_row}) u_{i,k}.
    Eigen::RowVectorXcd w = Eigen::RowVectorXcd::Zero(n);
    w[pivot_row] = Complex(1.0, 0.0);
    for (std::size_t s = 0; s < layout.size(); ++s) {
      w = w * units[s].unit(0, layout.digit(i, s));
    }
    return w;
  };

  // Diagonal of the evolved U+|0><0|U holds |u_{0,k}|^2; pick the pivot
  // column there, preferring k = 0 when it is usable.
  Matrix e00 = Matrix::Identity(n, n);
  for (std::size_t s = 0; s < layout.size(); ++s) {
    e00 = e00 * units[s].unit(0, 0);
  }
  std::size_t pivot = 0;
  double best = e00(0, 0).real();
  if (std::sqrt(std::max(best, 0.0)) < tol::pivot) {
    for (std::size_t k = 1; k < n; ++k) {
      if (e00(k, k).real() > best) {
        best = e00(k, k).real();
        pivot = k;
      }
    }
  }
  if (std::sqrt(std::max(best, 0.0)) < tol::pivot) {
    throw std::runtime_error(
        "recover_unitary: no usable pivot; frame is not unitary-evolved");
  }

  Matrix recovered(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    recovered.row(i) = evolved_unit_row(pivot, i);
  }
  recovered /= std::sqrt(best);

  // Phase convention: first nonzero entry of column 0 made real positive.
  for (std::size_t r = 0; r < n; ++r) {
    const Complex entry = recovered(r, 0);
    if (std::abs(entry) > tol::pivot) {
      recovered *= std::conj(entry) / std::abs(entry);
      return recovered;
    }
  }
  throw std::runtime_error("recover_unitary: reference column is null");
}

double frame_delta(const DescriptorFrame& a, const DescriptorFrame& b) {
  if (!(a.layout == b.layout)) {
    throw std::invalid_argument("frame_delta: mismatched layouts");
  }
  double delta = 0.0;
  for (std::size_t s = 0; s < a.layout.size(); ++s) {
    for (const auto& [key, component] : a.descriptors[s].components) {
      delta = std::max(delta,
                       max_abs_diff(component, b.descriptors[s].components.at(key)));
    }
  }
  return delta;
}

double cross_commutator_defect(const DescriptorFrame& frame) {
  double defect = 0.0;
  for (std::size_t s = 0; s < frame.descriptors.size(); ++s) {
    for (std::size_t r = s + 1; r < frame.descriptors.size(); ++r) {
      for (const auto& [ka, a] : frame.descriptors[s].components) {
        for (const auto& [kb, b] : frame.descriptors[r].components) {
          defect = std::max(defect, max_abs(Matrix(a * b - b * a)));
        }
      }
    }
  }
  return defect;
}

}  // namespace dlab
