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

namespace dlab {

/// Ordered decomposition of the full Hilbert space into subsystems.
///
/// Subsystem 0 is the leftmost tensor factor, i.e. the most significant
/// digit of a basis index: for dims (d0, d1, ..., dk) the basis vector
/// |a0 a1 ... ak> has index a0*d1*...*dk + a1*d2*...*dk + ... + ak.
class SystemLayout {
 public:
  /// Throws std::invalid_argument if any dimension is < 2 or the product
  /// of dimensions exceeds `cap`.
  explicit SystemLayout(std::vector<std::size_t> dims,
                        std::size_t cap = default_dim_cap());

  std::size_t size() const { return dims_.size(); }
  std::size_t dim(std::size_t system) const { return dims_.at(system); }
  const std::vector<std::size_t>& dims() const { return dims_; }
  std::size_t total_dim() const { return total_; }

  bool is_qubit(std::size_t system) const { return dims_.at(system) == 2; }
  bool all_qubits() const;

  /// Index weight of one subsystem digit: product of the dimensions of all
  /// subsystems to its right.
  std::size_t stride(std::size_t system) const { return strides_.at(system); }

  /// Digit of `index` belonging to `system`.
  std::size_t digit(std::size_t index, std::size_t system) const {
    return (index / strides_[system]) % dims_[system];
  }

  bool operator==(const SystemLayout& other) const {
    return dims_ == other.dims_;
  }

  /// Global dimension cap: DESCRIPTOR_LAB_MAX_DIM if set, else 4096.
  static std::size_t default_dim_cap();

 private:
  std::vector<std::size_t> dims_;
  std::vector<std::size_t> strides_;
  std::size_t total_ = 1;
};

}  // namespace dlab
