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

#include <cstdint>
#include <string>
#include <vector>

namespace dlab::cli {

// Exit codes shared with CI: 0 pass, 1 check failure, 2 usage/parse error.
inline constexpr int kExitPass = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

struct SimulateParams {
  std::string circuit_path;
  std::string picture = "both";  // heisenberg | schrodinger | both
  std::vector<std::string> observables;
  std::string format = "text";  // text | json | csv
  std::string dump_frame_path;
  bool dense_frame = false;
};

struct VerifyParams {
  std::string suite;  // equivalence | locality | theorem1 | noniso | recovery
  std::uint64_t seed = 42;
  std::size_t cases = 0;  // 0 means the suite default
  std::string format = "text";
};

struct ProtocolParams {
  std::string name;  // sdc | teleport | branching | chsh
  int i = 0;
  int j = 0;
  std::string alpha = "1";
  std::string beta = "0";
  bool decohere = false;
  std::size_t hops = 2;
  double a = 0.0;
  double a_prime = 1.5707963267948966;
  double b = 0.7853981633974483;
  double b_prime = -0.7853981633974483;
  std::string format = "text";
  std::string csv_path;
};

int cmd_simulate(const SimulateParams& params);
int cmd_verify(const VerifyParams& params);
int cmd_protocol(const ProtocolParams& params);

}  // namespace dlab::cli
