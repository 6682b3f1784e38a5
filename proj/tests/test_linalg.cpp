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

#include <random>

#include "qmcz/linalg.hpp"

using namespace qmcz;

namespace {

FqMatrix random_matrix(const FieldPtr& f, Index rows, Index cols, std::mt19937_64& rng) {
  FqMatrix m = fq_zeros(f, rows, cols);
  for (Index i = 0; i < rows; ++i) {
    for (Index j = 0; j < cols; ++j) {
      m(i, j) = Fq(f, static_cast<uint32_t>(rng() % f->q()));
    }
  }
  return m;
}

bool is_zero_row(const FqRowVector& v) {
  for (Index j = 0; j < v.cols(); ++j) {
    if (!(v(j) == Fq(0))) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("rref is canonical and idempotent") {
  auto f4 = Field::create(2, 2);
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 25; ++trial) {
    FqMatrix m = random_matrix(f4, 4, 6, rng);
    Rref r = rref_of<Fq>(m);
    CHECK(r.rank() <= 4);
    // pivot columns strictly increase and hold unit columns
    for (size_t i = 0; i + 1 < r.pivot_cols.size(); ++i) {
      CHECK(r.pivot_cols[i] < r.pivot_cols[i + 1]);
    }
    for (Index i = 0; i < r.rank(); ++i) {
      for (Index row = 0; row < r.mat.rows(); ++row) {
        CHECK(r.mat(row, r.pivot_cols[static_cast<size_t>(i)]) == (row == i ? Fq(1) : Fq(0)));
      }
    }
    Rref r2 = rref_of<Fq>(r.mat);
    CHECK(r2.mat == r.mat);
    // row space is preserved
    for (Index i = 0; i < m.rows(); ++i) CHECK(in_row_space(r, FqRowVector(m.row(i))));
  }
}

TEST_CASE("kernel basis spans the solution space") {
  auto f9 = Field::create(3, 2);
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    FqMatrix m = random_matrix(f9, 3, 5, rng);
    FqMatrix ker = kernel_basis(m, f9, 5);
    CHECK(ker.rows() == 5 - rref_of<Fq>(m).rank());
    for (Index i = 0; i < ker.rows(); ++i) {
      for (Index r = 0; r < m.rows(); ++r) {
        Fq acc(f9, 0);
        for (Index j = 0; j < 5; ++j) acc += m(r, j) * ker(i, j);
        CHECK(acc == Fq(0));
      }
    }
    CHECK(rank_of(ker) == ker.rows());
  }
  // kernel of an empty constraint set is everything
  FqMatrix id = kernel_basis(FqMatrix(0, 4), f9, 4);
  CHECK(id.rows() == 4);
  CHECK(rank_of(id) == 4);
}

TEST_CASE("membership by reduction") {
  auto f8 = Field::create(2, 3);
  std::mt19937_64 rng(3);
  FqMatrix m = random_matrix(f8, 2, 5, rng);
  Rref r = rref_of<Fq>(m);
  // random combinations stay inside
  for (int trial = 0; trial < 20; ++trial) {
    Fq a(f8, static_cast<uint32_t>(rng() % 8)), b(f8, static_cast<uint32_t>(rng() % 8));
    FqRowVector v = a * m.row(0) + b * m.row(1);
    CHECK(in_row_space(r, v));
  }
  // a vector outside the span reduces to something nonzero
  if (r.rank() < 5) {
    FqRowVector v = fq_zero_row(f8, 5);
    // put a one in a non-pivot column beyond what reduction can clear
    std::vector<bool> pivot(5, false);
    for (Index c : r.pivot_cols) pivot[static_cast<size_t>(c)] = true;
    for (Index c = 0; c < 5; ++c) {
      if (!pivot[static_cast<size_t>(c)]) {
        v(c) = Fq(f8, 1);
        break;
      }
    }
    CHECK(!in_row_space(r, v));
    CHECK(!is_zero_row(reduce_against(r, v)));
  }
}

TEST_CASE("permutation helpers") {
  auto f4 = Field::create(2, 2);
  std::mt19937_64 rng(11);
  Permutation a = {2, 0, 3, 1};
  Permutation b = {1, 2, 3, 0};
  CHECK(is_permutation_of(a, 4));
  CHECK(!is_permutation_of({0, 0, 1, 2}, 4));
  CHECK(identity_permutation(3) == Permutation{0, 1, 2});

  FqRowVector v = fq_zero_row(f4, 4);
  for (Index i = 0; i < 4; ++i) v(i) = Fq(f4, static_cast<uint32_t>(rng() % 4));
  // applying a then b equals applying the composite b-then-a place map
  FqRowVector lhs = apply_permutation(a, apply_permutation(b, v));
  FqRowVector rhs = apply_permutation(compose(b, a), v);
  CHECK(lhs == rhs);
}
