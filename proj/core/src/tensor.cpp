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

#include "dlab/tensor.hpp"

#include <set>
#include <stdexcept>

namespace dlab {

namespace {

struct EmbeddingPlan {
  std::size_t op_dim = 1;
  std::size_t rest_count = 1;
  // Full-space offsets: target_offsets[a] embeds op-index a onto the target
  // digits, rest_offsets[r] enumerates every configuration of the others.
  std::vector<std::size_t> target_offsets;
  std::vector<std::size_t> rest_offsets;
};

EmbeddingPlan make_plan(const std::vector<std::size_t>& targets,
                        const SystemLayout& layout) {
  std::set<std::size_t> seen;
  for (std::size_t t : targets) {
    if (t >= layout.size()) {
      throw std::out_of_range("tensor_embed: target out of range");
    }
    if (!seen.insert(t).second) {
      throw std::invalid_argument("tensor_embed: duplicate target");
    }
  }
  if (targets.empty()) {
    throw std::invalid_argument("tensor_embed: needs at least one target");
  }

  EmbeddingPlan plan;
  for (std::size_t t : targets) plan.op_dim *= layout.dim(t);
  plan.rest_count = layout.total_dim() / plan.op_dim;

  // Mixed-radix digits of an op index, radices in target-list order.
  plan.target_offsets.assign(plan.op_dim, 0);
  for (std::size_t a = 0; a < plan.op_dim; ++a) {
    std::size_t rem = a;
    std::size_t offset = 0;
    for (std::size_t m = targets.size(); m-- > 0;) {
      const std::size_t d = layout.dim(targets[m]);
      offset += (rem % d) * layout.stride(targets[m]);
      rem /= d;
    }
    plan.target_offsets[a] = offset;
  }

  std::vector<std::size_t> rest;
  for (std::size_t s = 0; s < layout.size(); ++s) {
    if (!seen.count(s)) rest.push_back(s);
  }
  plan.rest_offsets.assign(plan.rest_count, 0);
  for (std::size_t r = 0; r < plan.rest_count; ++r) {
    std::size_t rem = r;
    std::size_t offset = 0;
    for (std::size_t m = rest.size(); m-- > 0;) {
      const std::size_t d = layout.dim(rest[m]);
      offset += (rem % d) * layout.stride(rest[m]);
      rem /= d;
    }
    plan.rest_offsets[r] = offset;
  }
  return plan;
}

}  // namespace

Matrix tensor_embed(const Matrix& op, const std::vector<std::size_t>& targets,
                    const SystemLayout& layout) {
  require_square(op, "tensor_embed");
  const EmbeddingPlan plan = make_plan(targets, layout);
  if (static_cast<std::size_t>(op.rows()) != plan.op_dim) {
    throw std::invalid_argument(
        "tensor_embed: operator dimension does not match the targeted subsystems");
  }

  const std::size_t n = layout.total_dim();
  Matrix out = Matrix::Zero(n, n);
  for (std::size_t r = 0; r < plan.rest_count; ++r) {
    const std::size_t base = plan.rest_offsets[r];
    for (std::size_t b = 0; b < plan.op_dim; ++b) {
      const std::size_t col = base + plan.target_offsets[b];
      for (std::size_t a = 0; a < plan.op_dim; ++a) {
        const Complex v = op(a, b);
        if (v != Complex(0.0, 0.0)) {
          out(base + plan.target_offsets[a], col) = v;
        }
      }
    }
  }
  return out;
}

Matrix conjugate(const Matrix& u, const Matrix& a) {
  require_square(a, "conjugate");
  if (u.rows() != a.rows() || u.cols() != a.cols()) {
    throw std::invalid_argument("conjugate: dimension mismatch");
  }
  require_unitary(u, "conjugate");
  return u.adjoint() * a * u;
}

Vector apply_embedded(const Matrix& op, const std::vector<std::size_t>& targets,
                      const SystemLayout& layout, const Vector& state) {
  require_square(op, "apply_embedded");
  if (static_cast<std::size_t>(state.size()) != layout.total_dim()) {
    throw std::invalid_argument("apply_embedded: state dimension mismatch");
  }
  const EmbeddingPlan plan = make_plan(targets, layout);
  if (static_cast<std::size_t>(op.rows()) != plan.op_dim) {
    throw std::invalid_argument(
        "apply_embedded: operator dimension does not match the targeted subsystems");
  }

  Vector out(state.size());
  Vector block(plan.op_dim);
  for (std::size_t r = 0; r < plan.rest_count; ++r) {
    const std::size_t base = plan.rest_offsets[r];
    for (std::size_t a = 0; a < plan.op_dim; ++a) {
      block[a] = state[base + plan.target_offsets[a]];
    }
    Vector image = op * block;
    for (std::size_t a = 0; a < plan.op_dim; ++a) {
      out[base + plan.target_offsets[a]] = image[a];
    }
  }
  return out;
}

Matrix partial_trace(const Vector& state, const std::vector<std::size_t>& keep,
                     const SystemLayout& layout) {
  if (static_cast<std::size_t>(state.size()) != layout.total_dim()) {
    throw std::invalid_argument("partial_trace: state dimension mismatch");
  }
  const EmbeddingPlan plan = make_plan(keep, layout);
  Matrix rho = Matrix::Zero(plan.op_dim, plan.op_dim);
  for (std::size_t r = 0; r < plan.rest_count; ++r) {
    const std::size_t base = plan.rest_offsets[r];
    for (std::size_t a = 0; a < plan.op_dim; ++a) {
      const Complex va = state[base + plan.target_offsets[a]];
      if (va == Complex(0.0, 0.0)) continue;
      for (std::size_t b = 0; b < plan.op_dim; ++b) {
        rho(a, b) += va * std::conj(state[base + plan.target_offsets[b]]);
      }
    }
  }
  return rho;
}

}  // namespace dlab
