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

#include "qmcz/schedule.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace qmcz {

int sigma_lookup(const FamilyInstance& instance, Index q_from, Index q_to) {
  const auto& block = instance.logical_block;
  if (std::find(block.begin(), block.end(), q_from) == block.end()) {
    throw Error(ErrorCode::UnknownLabel, "label " + std::to_string(q_from) + " not logical");
  }
  if (std::find(block.begin(), block.end(), q_to) == block.end()) {
    throw Error(ErrorCode::UnknownLabel, "label " + std::to_string(q_to) + " not logical");
  }
  int found = -1;
  for (size_t g = 0; g < instance.group.size(); ++g) {
    if (instance.group[g][static_cast<size_t>(q_from)] == q_to) {
      if (found >= 0) {
        throw Error(ErrorCode::NonRegular, "two group elements map " + std::to_string(q_from) +
                                               " to " + std::to_string(q_to));
      }
      found = static_cast<int>(g);
    }
  }
  if (found < 0) {
    throw Error(ErrorCode::NonRegular, "no group element maps " + std::to_string(q_from) + " to " +
                                           std::to_string(q_to));
  }
  return found;
}

GateSchedule compile_circuit(const FamilyInstance& instance, const CssCode& css,
                             const StandardForm& sf, const std::vector<LogicalGate>& circuit) {
  GateSchedule schedule;
  schedule.source = circuit;
  if (circuit.empty()) {
    schedule.m = 2;
    return schedule;
  }
  const Index m = circuit.front().arity();
  if (m < 2) throw Error(ErrorCode::ArityMismatch, "gates need at least two targets");
  schedule.m = static_cast<int>(m);

  // bucket key: the sigma tuple anchored at the block-0 target
  std::map<std::vector<int>, std::map<Index, Fq>> buckets;
  for (const auto& gate : circuit) {
    if (gate.arity() != m) {
      throw Error(ErrorCode::ArityMismatch, "mixed gate arities in one circuit");
    }
    std::vector<int> key(static_cast<size_t>(m - 1));
    for (Index j = 1; j < m; ++j) {
      key[static_cast<size_t>(j - 1)] = sigma_lookup(instance, gate.targets[0], gate.targets[static_cast<size_t>(j)]);
    }
    auto& anchor = buckets[key];
    auto it = anchor.find(gate.targets[0]);
    if (it == anchor.end()) {
      anchor.emplace(gate.targets[0], Fq(instance.field(), gate.gamma.value_in(*instance.field())));
    } else {
      it->second += gate.gamma;
    }
  }

  for (auto& [key, anchor] : buckets) {
    std::vector<Index> s_set;
    std::vector<Fq> gamma;
    for (const auto& [label, coeff] : anchor) {
      if (coeff.is_zero()) continue;  // cancelled
      s_set.push_back(label);
      gamma.push_back(coeff);
    }
    if (s_set.empty()) continue;

    ScheduleLayer layer;
    layer.sigma_indices = key;
    layer.mod = modulation_build(css, sf, s_set, gamma);
    std::vector<Permutation> sigmas;
    for (int g : key) sigmas.push_back(instance.group[static_cast<size_t>(g)]);
    layer.gates = physical_layer(css, layer.mod, sigmas);
    schedule.layers.push_back(std::move(layer));
  }
  return schedule;
}

Index schedule_depth(const GateSchedule& schedule) {
  return static_cast<Index>(schedule.layers.size());
}

std::vector<LogicalGate> flatten(const GateSchedule& schedule, const FamilyInstance& instance) {
  std::vector<LogicalGate> out;
  for (const auto& layer : schedule.layers) {
    for (size_t i = 0; i < layer.mod.s_set.size(); ++i) {
      LogicalGate gate;
      gate.gamma = layer.mod.gamma[i];
      gate.targets.push_back(layer.mod.s_set[i]);
      for (int g : layer.sigma_indices) {
        gate.targets.push_back(
            instance.group[static_cast<size_t>(g)][static_cast<size_t>(layer.mod.s_set[i])]);
      }
      out.push_back(std::move(gate));
    }
  }
  return out;
}

}  // namespace qmcz
