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

#include <doctest.h>

#include <functional>

#include "qmcz/io.hpp"

using namespace qmcz;

namespace {

void check_error(ErrorCode expected, const std::function<void()>& fn) {
  try {
    fn();
    FAIL_CHECK("expected error " << to_string(expected));
  } catch (const Error& e) {
    CHECK(e.code() == expected);
  }
}

}  // namespace

TEST_CASE("field and code round-trips") {
  auto f16 = Field::create(2, 4);
  FieldPtr f2 = field_from_json(field_to_json(*f16));
  CHECK(f2->same_as(*f16));

  LinearCode rs = reed_solomon(f16, 4);
  LinearCode rs2 = code_from_json(code_to_json(rs));
  CHECK(rs2.n() == rs.n());
  CHECK(rs2.gens() == rs.gens());
}

TEST_CASE("instance and css round-trips") {
  auto f8 = Field::create(2, 3);
  FamilyInstance inst = grs_build(f8, 3, 2, 0, 2);
  Json j = instance_to_json(inst);
  FamilyInstance inst2 = instance_from_json(j);
  CHECK(inst2.code.gens() == inst.code.gens());
  CHECK(inst2.u.entries() == inst.u.entries());
  CHECK(inst2.group == inst.group);
  CHECK(inst2.logical_block == inst.logical_block);
  CHECK(inst2.m_max == inst.m_max);
  CHECK(validate(inst2).all_pass());

  StandardForm sf = standard_form(inst);
  CssCode css = build_css(sf, inst);
  CssCode css2 = css_from_json(css_to_json(css));
  CHECK(css2.g1 == css.g1);
  CHECK(css2.g0 == css.g0);
  CHECK(css2.u_phys == css.u_phys);
  CHECK(css2.u_log == css.u_log);
  CHECK(css2.logical_labels == css.logical_labels);
  CHECK(css2.physical_labels == css.physical_labels);

  // emitted bytes are canonical: a reload serializes identically
  CHECK(dump(instance_to_json(inst2)) == dump(j));
  CHECK(dump(css_to_json(css2)) == dump(css_to_json(css)));
}

TEST_CASE("circuit and schedule round-trips") {
  auto f8 = Field::create(2, 3);
  FamilyInstance inst = grs_build(f8, 3, 2, 0, 2);
  StandardForm sf = standard_form(inst);
  CssCode css = build_css(sf, inst);

  std::vector<LogicalGate> circuit = {LogicalGate{Fq(f8, 3), {0, 1}},
                                      LogicalGate{Fq(f8, 1), {1, 0}}};
  Json cj = logical_circuit_to_json(circuit, *f8);
  auto circuit2 = logical_circuit_from_json(cj, f8);
  CHECK(circuit2.size() == 2);
  CHECK(circuit2[0].gamma == circuit[0].gamma);
  CHECK(circuit2[1].targets == circuit[1].targets);

  GateSchedule sched = compile_circuit(inst, css, sf, circuit);
  Json sj = schedule_to_json(sched, *f8);
  GateSchedule sched2 = schedule_from_json(sj, css, sf);
  CHECK(dump(schedule_to_json(sched2, *f8)) == dump(sj));
  CHECK(sched2.layers.size() == sched.layers.size());
  for (size_t i = 0; i < sched.layers.size(); ++i) {
    CHECK(sched2.layers[i].sigma_indices == sched.layers[i].sigma_indices);
    CHECK(sched2.layers[i].mod.m_vector == sched.layers[i].mod.m_vector);
  }

  // physical circuits use the exponent key
  Json pj = physical_circuit_to_json(sched.all_gates(), *f8);
  CHECK(pj["gates"].front().contains("exponent"));
  auto gates2 = physical_circuit_from_json(pj, f8);
  CHECK(gates2.size() == sched.all_gates().size());
}

TEST_CASE("malformed inputs are rejected") {
  auto f8 = Field::create(2, 3);
  check_error(ErrorCode::ParseError, [] { field_from_json(Json{{"p", 2}}); });
  check_error(ErrorCode::NonPrime, [] {
    field_from_json(Json{{"p", 4}, {"e", 1}, {"modulus", Json::array({0, 1})}});
  });

  // row length mismatch in a code file
  Json bad = code_to_json(reed_solomon(f8, 2));
  bad["gens"][0].erase(7);
  check_error(ErrorCode::ParseError, [&] { code_from_json(bad); });

  // entry outside the field range
  Json bad2 = code_to_json(reed_solomon(f8, 2));
  bad2["gens"][0][0] = 9;
  check_error(ErrorCode::ParseError, [&] { code_from_json(bad2); });

  // group element that is not a permutation
  FamilyInstance inst = grs_build(f8, 3, 2, 0, 2);
  Json ij = instance_to_json(inst);
  ij["group"][1][0] = 0;
  ij["group"][1][1] = 0;
  check_error(ErrorCode::ParseError, [&] { instance_from_json(ij); });

  // zero twist entry
  Json ij2 = instance_to_json(inst);
  ij2["u"][3] = 0;
  check_error(ErrorCode::InvalidArgument, [&] { instance_from_json(ij2); });

  check_error(ErrorCode::ParseError, [] { load_json_file("/nonexistent/file.json"); });
}

TEST_CASE("circuit coefficients outside the field are rejected") {
  auto f8 = Field::create(2, 3);
  Json j{{"m", 2},
         {"gates", Json::array({Json{{"gamma", 9}, {"targets", Json::array({0, 1})}}})}};
  check_error(ErrorCode::ParseError, [&] { logical_circuit_from_json(j, f8); });
  Json pj{{"m", 2},
          {"gates", Json::array({Json{{"exponent", 200}, {"targets", Json::array({0, 1})}}})}};
  check_error(ErrorCode::ParseError, [&] { physical_circuit_from_json(pj, f8); });
}

TEST_CASE("checked-in fixtures stay canonical") {
  // reserializing a fixture must reproduce its bytes exactly
  for (const char* name : {"rs16_instance.json", "rs8_instance.json", "rs9_instance.json"}) {
    std::string path = std::string(QMCZ_FIXTURE_DIR) + "/" + name;
    Json j = load_json_file(path);
    FamilyInstance inst = instance_from_json(j);
    CHECK(validate(inst).all_pass());
    CHECK(dump(instance_to_json(inst)) == dump(j));
  }
  for (const char* name : {"rs16_css.json", "rs8_css.json", "rs9_css.json"}) {
    std::string path = std::string(QMCZ_FIXTURE_DIR) + "/" + name;
    Json j = load_json_file(path);
    CssCode css = css_from_json(j);
    CHECK(dump(css_to_json(css)) == dump(j));
  }
  // the stored css artifacts match a fresh build from the instances
  FamilyInstance rs16 =
      instance_from_json(load_json_file(std::string(QMCZ_FIXTURE_DIR) + "/rs16_instance.json"));
  CssCode rebuilt = build_css(standard_form(rs16), rs16);
  Json stored = load_json_file(std::string(QMCZ_FIXTURE_DIR) + "/rs16_css.json");
  CHECK(dump(css_to_json(rebuilt)) == dump(stored));
}
