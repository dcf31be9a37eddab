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

#include "dlab/system_layout.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace dlab {

SystemLayout::SystemLayout(std::vector<std::size_t> dims, std::size_t cap)
    : dims_(std::move(dims)) {
  if (dims_.empty()) {
    throw std::invalid_argument("SystemLayout: needs at least one subsystem");
  }
  for (std::size_t d : dims_) {
    if (d < 2) {
      throw std::invalid_argument("SystemLayout: subsystem dimensions must be >= 2");
    }
    if (total_ > cap / d) {
      throw std::invalid_argument("SystemLayout: total dimension exceeds the cap of " +
                                  std::to_string(cap));
    }
    total_ *= d;
  }
  strides_.assign(dims_.size(), 1);
  for (std::size_t k = dims_.size(); k-- > 1;) {
    strides_[k - 1] = strides_[k] * dims_[k];
  }
}

bool SystemLayout::all_qubits() const {
  return std::all_of(dims_.begin(), dims_.end(),
                     [](std::size_t d) { return d == 2; });
}

std::size_t SystemLayout::default_dim_cap() {
  static const std::size_t cap = [] {
    if (const char* env = std::getenv("DESCRIPTOR_LAB_MAX_DIM")) {
      char* end = nullptr;
      const unsigned long long value = std::strtoull(env, &end, 10);
      if (end != env && *end == '\0' && value >= 2) {
        return static_cast<std::size_t>(value);
      }
    }
    return static_cast<std::size_t>(4096);
  }();
  return cap;
}

}  // namespace dlab
