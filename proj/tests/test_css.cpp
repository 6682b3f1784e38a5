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

#include "qmcz/css.hpp"

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

std::vector<uint32_t> raw(const FqRowVector& v, const Field& f) {
  std::vector<uint32_t> out;
  for (Index i = 0; i < v.cols(); ++i) out.push_back(v(i).value_in(f));
  return out;
}

}  // namespace

TEST_CASE("standard form of rs16") {
  auto f16 = Field::create(2, 4);
  FamilyInstance rs16 = grs_build(f16, 4, 2, 0, 3);
  StandardForm sf = standard_form(rs16);
  CHECK(sf.k == 2);
  CHECK(sf.rows() == 4);
  CHECK(sf.cols() == 16);

  // delta property on the logical columns
  for (Index r = 0; r < sf.k; ++r) {
    for (Index c = 0; c < sf.k; ++c) {
      CHECK(sf.g_tilde(r, c) == (r == c ? Fq(1) : Fq(0)));
    }
  }
  // zero block below the identity
  for (Index r = sf.k; r < sf.rows(); ++r) {
    for (Index c = 0; c < sf.k; ++c) CHECK(sf.g_tilde(r, c) == Fq(0));
  }
  // rows still span the original code
  FqMatrix coord_rows(sf.rows(), sf.cols());
  for (Index r = 0; r < sf.rows(); ++r) coord_rows.row(r) = sf.row_in_coord_order(r);
  LinearCode respan(f16, 16, coord_rows);
  CHECK(respan.same_space_as(rs16.code));

  // the top rows are interpolants: evaluate them at the logical places
  // through the coordinate ordering
  for (Index r = 0; r < sf.k; ++r) {
    FqRowVector row = sf.row_in_coord_order(r);
    for (Index t = 0; t < sf.k; ++t) {
      CHECK(row(rs16.logical_block[static_cast<size_t>(t)]) == (r == t ? Fq(1) : Fq(0)));
    }
  }
}

TEST_CASE("standard form is a fixed point on already-reduced input") {
  auto f16 = Field::create(2, 4);
  FamilyInstance rs16 = grs_build(f16, 4, 2, 0, 3);
  StandardForm sf = standard_form(rs16);

  FqMatrix coord_rows(sf.rows(), sf.cols());
  for (Index r = 0; r < sf.rows(); ++r) coord_rows.row(r) = sf.row_in_coord_order(r);
  FamilyInstance already = rs16;
  already.code = LinearCode(f16, 16, coord_rows);
  StandardForm sf2 = standard_form(already);
  CHECK(sf2.g_tilde == sf.g_tilde);
  CHECK(sf2.column_order == sf.column_order);
}

TEST_CASE("dependent logical columns are rejected with a witness") {
  auto f16 = Field::create(2, 4);
  // K = 2 rows cannot have 3 independent columns
  FamilyInstance bad{reed_solomon(f16, 2), TwistVector::all_ones(f16, 16),
                     {identity_permutation(16)}, {0, 1, 2}, 1};
  try {
    standard_form(bad);
    FAIL_CHECK("expected LogicalColumnsDependent");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::LogicalColumnsDependent);
    CHECK(std::string(e.what()).find("[") != std::string::npos);
  }
}

TEST_CASE("puncturing and block independence") {
  auto f16 = Field::create(2, 4);
  FamilyInstance rs16 = grs_build(f16, 4, 2, 0, 3);
  CssCode css16 = build_css(standard_form(rs16), rs16);
  CHECK(css16.k() == 2);
  CHECK(css16.n() == 14);
  CHECK(css16.stab_rows() == 2);
  CHECK(css16.logical_labels == std::vector<Index>{0, 1});
  CHECK(css16.physical_labels.size() == 14);

  auto f8 = Field::create(2, 3);
  FamilyInstance rs8 = grs_build(f8, 3, 2, 0, 2);
  CssCode css8 = build_css(standard_form(rs8), rs8);
  CHECK(css8.k() == 2);
  CHECK(css8.n() == 6);
  CHECK(css8.stab_rows() == 1);

  // the inner-product table is diagonal-nonzero on g1 rows, zero elsewhere
  for (const CssCode* css : {&css16, &css8}) {
    FqMatrix table = independence_table(*css);
    for (Index a = 0; a < table.rows(); ++a) {
      for (Index b = 0; b < table.cols(); ++b) {
        if (a == b && a < css->k()) {
          CHECK(!(table(a, b) == Fq(0)));
        } else {
          CHECK(table(a, b) == Fq(0));
        }
      }
    }
  }

  // corrupting one twist entry on a physical coordinate breaks the pattern
  FamilyInstance corrupted = rs8;
  FqRowVector entries = corrupted.u.entries();
  entries(5) = Fq(f8, 3);
  corrupted.u = TwistVector(f8, entries);
  check_error(ErrorCode::IndependenceViolated,
              [&] { build_css(standard_form(corrupted), corrupted); });
}

TEST_CASE("logical basis states are cosets") {
  auto f8 = Field::create(2, 3);
  FamilyInstance rs8 = grs_build(f8, 3, 2, 0, 2);
  CssCode css = build_css(standard_form(rs8), rs8);
  const Field& f = *f8;

  Rref g0_span = rref_of<Fq>(css.g0);

  // x = 0 gives rowspan(g0) itself, including the zero string
  FqRowVector x0 = fq_zero_row(f8, 2);
  auto zero_state = logical_basis(css, x0);
  CHECK(zero_state.size() == 8);
  bool has_zero = false;
  for (const auto& s : zero_state) {
    bool z = true;
    for (Index j = 0; j < s.cols(); ++j) z = z && s(j) == Fq(0);
    has_zero = has_zero || z;
    CHECK(in_row_space(g0_span, s));
  }
  CHECK(has_zero);

  // x = (1, 0): strings pairwise distinct, differences in rowspan(g0)
  FqRowVector x10 = fq_zero_row(f8, 2);
  x10(0) = Fq(f8, 1);
  auto state = logical_basis(css, x10);
  CHECK(state.size() == 8);
  std::set<std::vector<uint32_t>> uniq;
  for (const auto& s : state) uniq.insert(raw(s, f));
  CHECK(uniq.size() == 8);
  for (const auto& s : state) {
    CHECK(in_row_space(g0_span, FqRowVector(s - state.front())));
  }

  // distinct logical vectors give disjoint string sets; together they
  // partition all q^K codewords of the punctured code
  std::set<std::vector<uint32_t>> all;
  for (uint32_t a = 0; a < 8; ++a) {
    for (uint32_t b = 0; b < 8; ++b) {
      FqRowVector x(2);
      x(0) = Fq(f8, a);
      x(1) = Fq(f8, b);
      for (const auto& s : logical_basis(css, x)) all.insert(raw(s, f));
    }
  }
  CHECK(all.size() == 512);  // 64 states x 8 strings, no overlap

  // well-definedness: offsetting x's representative by a g0 row reproduces
  // the same string set
  std::set<std::vector<uint32_t>> base;
  for (const auto& s : state) base.insert(raw(s, f));
  std::set<std::vector<uint32_t>> offset;
  for (const auto& s : state) offset.insert(raw(FqRowVector(s + css.g0.row(0)), f));
  CHECK(base == offset);

  check_error(ErrorCode::BudgetExceeded, [&] { logical_basis(css, x10, 4); });
}

TEST_CASE("logical basis with an empty stabilizer block") {
  auto f9 = Field::create(3, 2);
  FamilyInstance rs9 = grs_build(f9, 3, 3, 0, 2);
  CssCode css = build_css(standard_form(rs9), rs9);
  CHECK(css.stab_rows() == 0);
  FqRowVector x(3);
  x(0) = Fq(f9, 1);
  x(1) = Fq(f9, 2);
  x(2) = Fq(f9, 0);
  auto state = logical_basis(css, x);
  CHECK(state.size() == 1);
  // the single string is x . g1
  FqRowVector expect = fq_zero_row(f9, css.n());
  for (Index t = 0; t < 3; ++t) {
    for (Index j = 0; j < css.n(); ++j) expect(j) += x(t) * css.g1(t, j);
  }
  CHECK(state.front() == expect);
}

TEST_CASE("css distances") {
  auto f16 = Field::create(2, 4);
  FamilyInstance rs16 = grs_build(f16, 4, 2, 0, 3);
  CssCode css16 = build_css(standard_form(rs16), rs16);
  CssDistance d16 = css_distance(css16);
  // dX = 11: a cubic with all three roots at physical points has punctured
  // weight 14-3 and cannot vanish on both logical points; dZ = 3: every
  // 2-subset of stabilizer columns is independent (Vandermonde-type), and a
  // 2x3 system always has a kernel vector clear of the 3-subset-independent
  // dual of C1
  CHECK(d16.dx == 11);
  CHECK(d16.dz == 3);
  CHECK(d16.d == 3);
  CHECK(*d16.d >= quantum_bounds(13, 5, 2));

  auto f8 = Field::create(2, 3);
  FamilyInstance rs8 = grs_build(f8, 3, 2, 0, 2);
  CssCode css8 = build_css(standard_form(rs8), rs8);
  CssDistance d8 = css_distance(css8);
  // dX = 4: quadratics with both roots physical; dZ = 2: one stabilizer
  // equation in two unknowns always solves, and no weight-2 word satisfies
  // the full Vandermonde parity
  CHECK(d8.dx == 4);
  CHECK(d8.dz == 2);
  CHECK(d8.d == 2);
  CHECK(*d8.d >= quantum_bounds(6, 4, 2));

  auto f9 = Field::create(3, 2);
  FamilyInstance rs9 = grs_build(f9, 3, 3, 0, 2);
  CssCode css9 = build_css(standard_form(rs9), rs9);
  CssDistance d9 = css_distance(css9);
  CHECK(d9.d == 1);  // C0 is the full space once the stabilizer block is empty
  CHECK(*d9.d >= quantum_bounds(7, 4, 3));

  // the weight ladder and the message scan agree where both apply
  CssDistance d8_ladder = css_distance(css8, 600);  // forces ladders
  CHECK(d8_ladder.dx == d8.dx);
  CHECK(d8_ladder.dz == d8.dz);
}

TEST_CASE("degenerate css code without logical qudits") {
  auto f2 = Field::create(2, 1);
  CssCode css;
  css.field = f2;
  css.g1 = FqMatrix(0, 2);
  css.g0 = fq_zeros(f2, 2, 2);
  css.g0(0, 0) = Fq(f2, 1);
  css.g0(1, 1) = Fq(f2, 1);
  css.u_log = FqRowVector(0);
  css.u_phys = FqRowVector::Constant(2, Fq(f2, 1));
  css.physical_labels = {0, 1};
  check_error(ErrorCode::NoLogicalQudits, [&] { css_distance(css); });
}

TEST_CASE("logical block order is data, not a constraint") {
  // the same instance with the block listed in reverse: row t of the
  // standard form now interpolates the t-th label of the reversed sequence
  auto f16 = Field::create(2, 4);
  FamilyInstance rs16 = grs_build(f16, 4, 2, 0, 3);
  FamilyInstance reversed = rs16;
  reversed.logical_block = {1, 0};
  CHECK(validate(reversed).all_pass());

  StandardForm sf = standard_form(reversed);
  CssCode css = build_css(sf, reversed);
  CHECK(css.logical_labels == std::vector<Index>{1, 0});
  for (Index r = 0; r < 2; ++r) {
    FqRowVector row = sf.row_in_coord_order(r);
    for (Index t = 0; t < 2; ++t) {
      CHECK(row(reversed.logical_block[static_cast<size_t>(t)]) == (r == t ? Fq(1) : Fq(0)));
    }
  }
}
