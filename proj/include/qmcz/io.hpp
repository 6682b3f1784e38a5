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

#include <string>

#include <json.hpp>

#include "qmcz/schedule.hpp"

namespace qmcz {

using Json = nlohmann::json;

// Field block: { "p": int, "e": int, "modulus": [int,...] } (little-endian).
Json field_to_json(const Field& f);
FieldPtr field_from_json(const Json& j);

// Code block: { "field": {...}, "n": int, "gens": [[int,...],...] }.
Json code_to_json(const LinearCode& c);
LinearCode code_from_json(const Json& j);

// Instance file: { "code": {...}, "u": [int,...], "group": [[int,...],...],
//                  "logical_block": [int,...], "m_max": int }.
Json instance_to_json(const FamilyInstance& instance);
FamilyInstance instance_from_json(const Json& j);

// CSS artifact: { "field": {...}, "k": int, "n": int, "g1": [[...]],
//                 "g0": [[...]], "u_phys": [...], "u_log": [...],
//                 "labels": { "logical": [...], "physical": [...] } }.
Json css_to_json(const CssCode& css);
CssCode css_from_json(const Json& j);

// Circuit files share one shape; logical gates carry "gamma", physical
// gates carry "exponent". Labels are instance coordinates.
Json logical_circuit_to_json(const std::vector<LogicalGate>& gates, const Field& f);
std::vector<LogicalGate> logical_circuit_from_json(const Json& j, const FieldPtr& f);
Json physical_circuit_to_json(const std::vector<PhysicalGate>& gates, const Field& f);
std::vector<PhysicalGate> physical_circuit_from_json(const Json& j, const FieldPtr& f);

// Schedule file: { "m": int, "layers": [ { "sigmas": [int,...],
//                  "S": [label,...], "gamma": {label: int}, "gates": [...] } ] }.
// Reading a schedule rebuilds each layer's modulation from the css/sf pair.
Json schedule_to_json(const GateSchedule& schedule, const Field& f);
GateSchedule schedule_from_json(const Json& j, const CssCode& css, const StandardForm& sf);

/// Canonical serialization: 2-space indent, sorted keys, trailing newline.
/// Identical values always produce identical bytes.
std::string dump(const Json& j);

Json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const Json& j);

}  // namespace qmcz
