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

#include <string>

#include "json.hpp"

#include "dlab/descriptor.hpp"

namespace dlab {

/// Frame snapshot document: layout, time, reference vector, cumulative, and
/// each component either as PauliSum text (qubit-only layouts when the
/// expansion stays within `pauli_term_cap` terms) or as a dense matrix of
/// row-major "re,im" pairs. Dense form round-trips bit-exact.
nlohmann::json frame_to_json(const DescriptorFrame& frame,
                             bool force_dense = false,
                             std::size_t pauli_term_cap = 4096);

DescriptorFrame frame_from_json(const nlohmann::json& j);

std::string frame_to_string(const DescriptorFrame& frame,
                            bool force_dense = false);
DescriptorFrame frame_from_string(const std::string& text);

}  // namespace dlab
