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

#include "qmcz/gates.hpp"

namespace qmcz {

/// One depth-one layer of a compiled schedule, keyed by its sigma tuple
/// (indices into the instance group).
struct ScheduleLayer {
  std::vector<int> sigma_indices;  // length m-1
  ModulationSpec mod;
  std::vector<PhysicalGate> gates;
};

/// A compiled inter-block multi-control-Z circuit: at most |group|^(m-1)
/// layers, each depth one, keyed by distinct sigma tuples in lexicographic
/// order.
struct GateSchedule {
  int m = 0;
  std::vector<ScheduleLayer> layers;
  std::vector<LogicalGate> source;

  std::vector<PhysicalGate> all_gates() const {
    std::vector<PhysicalGate> out;
    for (const auto& layer : layers) out.insert(out.end(), layer.gates.begin(), layer.gates.end());
    return out;
  }
};

/// Index of the unique group element mapping q_from to q_to (both logical
/// labels). Regularity of the validated action guarantees uniqueness;
/// NonRegular signals a corrupted instance.
int sigma_lookup(const FamilyInstance& instance, Index q_from, Index q_to);

/// Buckets gates by their sigma tuple anchored at the block-0 target,
/// merges coefficients of equal anchors in F_q, drops zero sums and empty
/// buckets, and emits one modulation + physical layer per bucket in
/// lexicographic sigma order. The result is canonical: independent of the
/// input gate order, and a fixed point under recompiling its own logical
/// reading.
GateSchedule compile_circuit(const FamilyInstance& instance, const CssCode& css,
                             const StandardForm& sf, const std::vector<LogicalGate>& circuit);

Index schedule_depth(const GateSchedule& schedule);

/// The logical reading of a schedule: one gate (gamma_Q, (Q, sigma_1(Q),
/// ..., sigma_{m-1}(Q))) per bucket entry.
std::vector<LogicalGate> flatten(const GateSchedule& schedule, const FamilyInstance& instance);

}  // namespace qmcz
