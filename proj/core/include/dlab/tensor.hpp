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
#include <vector>

#include "dlab/system_layout.hpp"
#include "dlab/types.hpp"

namespace dlab {

/// Lift `op`, acting on the listed target subsystems (in the given order,
/// adjacency not required), to the full space: op on the targets, identity
/// on everything else.
///
/// op's side length must equal the product of the target dimensions.
/// Throws std::invalid_argument on dimension mismatch or duplicate target,
/// std::out_of_range on a bad target index.
Matrix tensor_embed(const Matrix& op, const std::vector<std::size_t>& targets,
                    const SystemLayout& layout);

/// u^dagger a u, computed as two dense products. u must pass the unitarity
/// check and match a's dimensions.
Matrix conjugate(const Matrix& u, const Matrix& a);

/// Apply `op` (acting on the target subsystems) to a full-space vector
/// without materializing the embedded matrix.
Vector apply_embedded(const Matrix& op, const std::vector<std::size_t>& targets,
                      const SystemLayout& layout, const Vector& state);

/// Reduced density matrix of a pure full-space state on the kept subsystems,
/// with tensor factors ordered as listed in `keep`.
Matrix partial_trace(const Vector& state, const std::vector<std::size_t>& keep,
                     const SystemLayout& layout);

}  // namespace dlab
