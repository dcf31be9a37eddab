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
#include <random>

#include "dlab/types.hpp"

namespace dlab {

/// Haar-distributed random unitary: QR of a complex Gaussian matrix with the
/// R-diagonal phases absorbed into Q.
Matrix haar_unitary(std::size_t dim, std::mt19937_64& rng);

/// Random normalized state vector.
Vector random_state(std::size_t dim, std::mt19937_64& rng);

}  // namespace dlab
