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

#include <set>

#include "qmcz/family.hpp"

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

bool item_passes(const ValidationReport& report, const std::string& needle) {
  for (const auto& item : report.items) {
    if (item.name.find(needle) != std::string::npos) return item.pass;
  }
  FAIL("no validation item matching " << needle);
  return false;
}

}  // namespace

TEST_CASE("grs instances") {
  auto f16 = Field::create(2, 4);
  FamilyInstance rs16 = grs_build(f16, 4, 2, 0, 3);
  CHECK(rs16.n() == 16);
  CHECK(rs16.logical_block == std::vector<Index>{0, 1});
  CHECK(rs16.group.size() == 2);
  CHECK(rs16.m_max == 3);
  CHECK(rs16.code.has_all_ones());

  auto f8 = Field::create(2, 3);
  FamilyInstance rs8 = grs_build(f8, 3, 2, 0, 2);
  CHECK(rs8.n() == 8);
  CHECK(rs8.logical_block == std::vector<Index>{0, 1});
  CHECK(rs8.m_max == 2);

  // a non-zero coset representative shifts the logical block
  FamilyInstance shifted = grs_build(f16, 4, 2, 4, 3);
  CHECK(shifted.logical_block == std::vector<Index>{4, 5});
  CHECK(validate(shifted).all_pass());

  check_error(ErrorCode::DualDistanceTooSmall, [&] { grs_build(f16, 4, 8, 0, 3); });
  check_error(ErrorCode::MultiplicationTooWeak, [&] { grs_build(f16, 4, 2, 0, 4); });
  check_error(ErrorCode::BlockNotCoset, [&] { grs_build(f16, 4, 3, 0, 2); });
  try {
    grs_build(f16, 4, 2, 0, 4);
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("order 4") != std::string::npos);
  }
}

TEST_CASE("validation re-verifies every invariant") {
  auto f16 = Field::create(2, 4);
  FamilyInstance rs16 = grs_build(f16, 4, 2, 0, 3);
  ValidationReport good = validate(rs16);
  CHECK(good.all_pass());

  // a transposition in place of a translation breaks the automorphism item
  FamilyInstance tampered = rs16;
  Permutation tr = identity_permutation(16);
  std::swap(tr[3], tr[11]);
  tampered.group[1] = tr;
  ValidationReport bad = validate(tampered);
  CHECK(!bad.all_pass());
  CHECK(!item_passes(bad, "automorphisms"));

  // a logical block that is not a coset of the group orbit fails regularity
  FamilyInstance skewed = rs16;
  skewed.logical_block = {0, 2};
  ValidationReport bad2 = validate(skewed);
  CHECK(!bad2.all_pass());
  CHECK(!item_passes(bad2, "regular"));

  // informational item records the all-ones twist as group invariant
  for (const auto& item : good.items) {
    if (item.informational) CHECK(item.pass);
  }
}

TEST_CASE("regular action and closure properties") {
  for (auto params : std::vector<std::tuple<uint32_t, uint32_t, Index, Index, int>>{
           {2, 4, 4, 2, 3}, {2, 3, 3, 2, 2}, {3, 2, 3, 3, 2}}) {
    auto [p, e, k, v, m] = params;
    auto f = Field::create(p, e);
    FamilyInstance inst = grs_build(f, k, v, 0, m);

    // sigma -> sigma(Q0) is a bijection from the group onto the block
    std::set<Index> images;
    for (const auto& perm : inst.group) {
      images.insert(perm[static_cast<size_t>(inst.logical_block.front())]);
    }
    CHECK(images == std::set<Index>(inst.logical_block.begin(), inst.logical_block.end()));

    // composing any two group elements lands in the group
    std::set<Permutation> members(inst.group.begin(), inst.group.end());
    for (const auto& a : inst.group) {
      for (const auto& b : inst.group) {
        CHECK(members.count(compose(a, b)) == 1);
      }
    }
  }
}

TEST_CASE("exact dual distances of grs instances") {
  // column-subset ranks pin the dual distance exactly: it exceeds t iff all
  // t-subsets of generator columns are independent, so D-dual = k+1 for
  // these evaluation codes
  auto f16 = Field::create(2, 4);
  FamilyInstance rs16 = grs_build(f16, 4, 2, 0, 3);
  CHECK(dual_distance_exceeds(rs16.code, 4));
  CHECK(!dual_distance_exceeds(rs16.code, 5));

  auto f8 = Field::create(2, 3);
  FamilyInstance rs8 = grs_build(f8, 3, 2, 0, 2);
  CHECK(dual_distance_exceeds(rs8.code, 3));
  CHECK(!dual_distance_exceeds(rs8.code, 4));
  // message enumeration agrees on the small dual
  CHECK(min_distance(dual(rs8.code)) == 4);

  CHECK(min_distance(rs16.code) == 13);
  CHECK(min_distance(rs8.code) == 6);
}

TEST_CASE("classical bound calculator") {
  BoundReport r = classical_bounds(8, 4, 28);
  CHECK(r.K_lb == Rational(5));
  CHECK(r.D_lb == Rational(25));
  CHECK(r.Dperp_lb == Rational(9));
  CHECK(r.K_lb.floor() == 5);
  CHECK(r.D_lb.floor() == 25);
  CHECK(r.Dperp_lb.floor() == 9);

  // exact ratios for unit length
  BoundReport unit = classical_bounds(8, 4, 1);
  CHECK(unit.K_lb == Rational(5, 28));
  CHECK(unit.D_lb == Rational(25, 28));
  CHECK(unit.Dperp_lb == Rational(9, 28));

  check_error(ErrorCode::HypothesisViolated, [] { classical_bounds(4, 3, 28); });
  check_error(ErrorCode::HypothesisViolated, [] { classical_bounds(3, 2, 28); });
  try {
    classical_bounds(4, 3, 28);
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("2s-1") != std::string::npos);
  }
}

TEST_CASE("quantum and depth bounds") {
  CHECK(quantum_bounds(13, 5, 2) == 3);
  CHECK(quantum_bounds(6, 4, 2) == 2);
  CHECK(quantum_bounds(5, 5, 5) == 0);
  check_error(ErrorCode::InvalidArgument, [] { quantum_bounds(-1, 5, 2); });

  CHECK(depth_bound(2, 3) == 4);
  CHECK(depth_bound(7, 2) == 7);
  CHECK(depth_bound(1, 5) == 1);
  check_error(ErrorCode::InvalidArgument, [] { depth_bound(0, 2); });
  check_error(ErrorCode::InvalidArgument, [] { depth_bound(2, 1); });

  BoundReport r = bounds_with_quantum(classical_bounds(8, 4, 28), 2, 3);
  CHECK(r.d_lb == 7);  // min(25, 9) - 2
  CHECK(r.depth_ub == 4);
}

TEST_CASE("rationals") {
  CHECK(Rational(6, 4) == Rational(3, 2));
  CHECK(Rational(-6, 4) == Rational(-3, 2));
  CHECK(Rational(1, -2) == Rational(-1, 2));
  CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
  CHECK((Rational(3, 2) * Rational(4, 9)) == Rational(2, 3));
  CHECK(Rational(7, 2).floor() == 3);
  CHECK(Rational(-7, 2).floor() == -4);
  CHECK(Rational(5, 28).str() == "5/28");
  check_error(ErrorCode::DivisionByZero, [] { Rational(1, 0); });
}

TEST_CASE("supplied twists are checked against the dual relation") {
  auto f16 = Field::create(2, 4);
  LinearCode rs4 = reed_solomon(f16, 4);
  TwistVector ones = TwistVector::all_ones(f16, 16);
  // full-support evaluation: the complementary-degree code is the dual
  CHECK(check_dual_relation(rs4, ones, reed_solomon(f16, 12)));
  CHECK(!check_dual_relation(rs4, ones, reed_solomon(f16, 11)));

  // a scaled twist still matches when the complement is rescaled to suit
  auto f9 = Field::create(3, 2);
  LinearCode rs3 = reed_solomon(f9, 3);
  CHECK(check_dual_relation(rs3, TwistVector::all_ones(f9, 9), reed_solomon(f9, 6)));
  FqRowVector entries = FqRowVector::Constant(9, Fq(f9, 2));
  TwistVector doubled(f9, entries);
  // scaling every coordinate by the same unit preserves the row space
  CHECK(check_dual_relation(rs3, doubled, reed_solomon(f9, 6)));
}
