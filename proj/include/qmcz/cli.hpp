// Copyright 2026 The qmcz Authors
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
#include <optional>
#include <ostream>
#include <string>

#include "qmcz/io.hpp"

namespace qmcz {

/// Parsed invocation of one subcommand. A fixed seed makes every output
/// byte-identical across runs.
struct RunConfig {
  std::string subcommand;

  std::string instance_path;
  std::string circuit_path;
  std::string input_path;
  std::string out_path;
  std::string emit_instance_path;

  uint64_t budget = uint64_t{1} << 24;
  uint64_t seed = 1;
  std::optional<int> arity;

  // bounds
  std::optional<long long> ell, s, N, k;

  // grs construction
  std::optional<uint32_t> grs_p, grs_e;
  std::optional<Index> grs_k, grs_subgroup;
  uint32_t grs_rep = 0;
  std::optional<int> grs_m_max;
};

/// Exit status: 0 all checks pass, 1 a check failed, 2 input error.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace qmcz
