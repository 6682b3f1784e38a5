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

#include "qmcz/code.hpp"

#include <algorithm>
#include <string>

namespace qmcz {

LinearCode::LinearCode(FieldPtr field, Index n, FqMatrix gens)
    : field_(std::move(field)), n_(n), gens_(std::move(gens)) {
  if (n_ < 1) throw Error(ErrorCode::InvalidArgument, "code length must be positive");
  if (gens_.cols() != n_ && gens_.rows() > 0) {
    throw Error(ErrorCode::LengthMismatch, "generator rows do not match code length");
  }
  if (gens_.rows() == 0) gens_.resize(0, n_);
  bind_to_field(gens_, field_);
  rref_ = rref_of<Fq>(gens_);
  if (rref_.rank() != gens_.rows()) {
    throw Error(ErrorCode::InvalidArgument, "generator rows are dependent");
  }
}

LinearCode LinearCode::full_space(const FieldPtr& field, Index n) {
  FqMatrix id = fq_zeros(field, n, n);
  for (Index i = 0; i < n; ++i) id(i, i) = Fq(field, 1);
  return LinearCode(field, n, std::move(id));
}

bool LinearCode::member(const FqRowVector& v) const {
  if (v.cols() != n_) throw Error(ErrorCode::LengthMismatch, "vector length != code length");
  return in_row_space(rref_, v);
}

bool LinearCode::has_all_ones() const {
  return member(FqRowVector::Constant(n_, Fq(field_, 1)));
}

bool LinearCode::same_space_as(const LinearCode& other) const {
  return dim() == other.dim() && contains(*this, other);
}

TwistVector::TwistVector(FieldPtr field, FqRowVector entries)
    : field_(std::move(field)), entries_(std::move(entries)) {
  bind_to_field(entries_, field_);
  for (Index i = 0; i < entries_.cols(); ++i) {
    if (entries_(i).is_zero()) {
      throw Error(ErrorCode::InvalidArgument,
                  "twist entry at coordinate " + std::to_string(i) + " is zero");
    }
  }
}

TwistVector TwistVector::all_ones(const FieldPtr& field, Index n) {
  return TwistVector(field, FqRowVector::Constant(n, Fq(field, 1)));
}

TwistVector TwistVector::inverse() const {
  FqRowVector inv(entries_.cols());
  for (Index i = 0; i < entries_.cols(); ++i) inv(i) = entries_(i).inverse();
  return TwistVector(field_, std::move(inv));
}

LinearCode dual(const LinearCode& c) {
  FqMatrix basis = kernel_basis(c.gens(), c.field(), c.n());
  return LinearCode(c.field(), c.n(), std::move(basis));
}

FqRowVector schur(const FqRowVector& a, const FqRowVector& b) {
  if (a.cols() != b.cols()) throw Error(ErrorCode::LengthMismatch, "schur product length mismatch");
  return a.cwiseProduct(b);
}

LinearCode schur_power(const LinearCode& c, int m) {
  if (m < 1) throw Error(ErrorCode::InvalidArgument, "schur power requires m >= 1");
  if (c.dim() == 0) return LinearCode::zero(c.field(), c.n());
  // Grow the span one factor at a time; the intermediate basis never
  // exceeds n rows, so this covers all K^m products by multilinearity.
  FqMatrix basis = row_basis(c.gens());
  for (int step = 1; step < m; ++step) {
    FqMatrix products(basis.rows() * c.dim(), c.n());
    Index r = 0;
    for (Index i = 0; i < basis.rows(); ++i) {
      for (Index j = 0; j < c.dim(); ++j) {
        products.row(r++) = schur(FqRowVector(basis.row(i)), FqRowVector(c.gens().row(j)));
      }
    }
    basis = row_basis(products);
  }
  return LinearCode(c.field(), c.n(), std::move(basis));
}

FqRowVector twist(const TwistVector& u, const FqRowVector& v) {
  if (u.n() != v.cols()) throw Error(ErrorCode::LengthMismatch, "twist length mismatch");
  return u.entries().cwiseProduct(v);
}

LinearCode twist(const TwistVector& u, const LinearCode& c) {
  if (u.n() != c.n()) throw Error(ErrorCode::LengthMismatch, "twist length mismatch");
  FqMatrix gens = c.gens();
  for (Index i = 0; i < gens.rows(); ++i) {
    gens.row(i) = twist(u, FqRowVector(gens.row(i)));
  }
  return LinearCode(c.field(), c.n(), std::move(gens));
}

bool contains(const LinearCode& outer, const LinearCode& inner) {
  if (outer.n() != inner.n()) throw Error(ErrorCode::LengthMismatch, "codes of different length");
  if (!outer.field()->same_as(*inner.field())) {
    throw Error(ErrorCode::SpecMismatch, "codes over different fields");
  }
  for (Index i = 0; i < inner.dim(); ++i) {
    if (!outer.member(FqRowVector(inner.gens().row(i)))) return false;
  }
  return true;
}

std::optional<int> min_distance(const LinearCode& c, uint64_t budget) {
  if (c.dim() == 0) {
    throw Error(ErrorCode::DegenerateCode, "zero-dimensional code has no nonzero words");
  }
  const Field& f = *c.field();
  const uint64_t q = f.q();
  const Index K = c.dim(), n = c.n();

  uint64_t count = 1;
  for (Index i = 0; i < K; ++i) {
    if (count > budget / q) return std::nullopt;
    count *= q;
  }

  // raw-value copy of the generator rows
  std::vector<std::vector<uint32_t>> rows(static_cast<size_t>(K), std::vector<uint32_t>(static_cast<size_t>(n)));
  for (Index i = 0; i < K; ++i) {
    for (Index j = 0; j < n; ++j) {
      rows[static_cast<size_t>(i)][static_cast<size_t>(j)] = c.gens()(i, j).value_in(f);
    }
  }

  int best = static_cast<int>(n) + 1;
  std::vector<uint32_t> word(static_cast<size_t>(n), 0);
  std::vector<uint32_t> digits(static_cast<size_t>(K), 0);
  for (uint64_t msg = 1; msg < count; ++msg) {
    // Base-q increment with carry. Digits are field-element values, so a
    // step from v to v+1 changes the word by (elem(v+1) - elem(v)) * row.
    for (Index d = 0; d < K; ++d) {
      const auto& row = rows[static_cast<size_t>(d)];
      auto& dig = digits[static_cast<size_t>(d)];
      const uint32_t next = dig + 1 == q ? 0 : dig + 1;
      const uint32_t delta = f.sub(next, dig);
      for (Index j = 0; j < n; ++j) {
        auto& w = word[static_cast<size_t>(j)];
        w = f.add(w, f.mul(delta, row[static_cast<size_t>(j)]));
      }
      dig = next;
      if (next != 0) break;
    }
    int w = 0;
    for (Index j = 0; j < n; ++j) w += word[static_cast<size_t>(j)] != 0;
    if (w < best) {
      best = w;
      if (best == 1) break;
    }
  }
  return best;
}

bool mult_property_check(const LinearCode& c, const TwistVector& u, int m) {
  if (u.n() != c.n()) throw Error(ErrorCode::LengthMismatch, "twist length mismatch");
  return contains(dual(c), twist(u, schur_power(c, m)));
}

bool mult_downgrade_check(const LinearCode& c, const TwistVector& u, int m) {
  if (!c.has_all_ones()) {
    throw Error(ErrorCode::AllOnesMissing, "code does not contain the all-one vector");
  }
  for (int mt = 1; mt <= m; ++mt) {
    if (!mult_property_check(c, u, mt)) return false;
  }
  return true;
}

bool is_invariant_under(const LinearCode& c, const Permutation& perm) {
  if (!is_permutation_of(perm, c.n())) {
    throw Error(ErrorCode::InvalidArgument, "not a permutation of the coordinate set");
  }
  for (Index i = 0; i < c.dim(); ++i) {
    if (!c.member(apply_permutation(perm, FqRowVector(c.gens().row(i))))) return false;
  }
  return true;
}

bool is_transitive(const LinearCode& c, const std::vector<Permutation>& group) {
  for (size_t g = 0; g < group.size(); ++g) {
    if (!is_invariant_under(c, group[g])) {
      throw Error(ErrorCode::NotAutomorphism,
                  "group element " + std::to_string(g) + " is not a code automorphism");
    }
  }
  std::vector<bool> orbit(static_cast<size_t>(c.n()), false);
  std::vector<Index> frontier = {0};
  orbit[0] = true;
  Index seen = 1;
  while (!frontier.empty()) {
    Index x = frontier.back();
    frontier.pop_back();
    for (const auto& perm : group) {
      Index y = perm[static_cast<size_t>(x)];
      if (!orbit[static_cast<size_t>(y)]) {
        orbit[static_cast<size_t>(y)] = true;
        frontier.push_back(y);
        ++seen;
      }
    }
  }
  return seen == c.n();
}

LinearCode reed_solomon(const FieldPtr& field, Index k) {
  const Index n = field->q();
  if (k < 1 || k > n) throw Error(ErrorCode::InvalidArgument, "RS dimension out of range");
  FqMatrix gens = fq_zeros(field, k, n);
  for (Index r = 0; r < k; ++r) {
    for (Index x = 0; x < n; ++x) {
      gens(r, x) = Fq(field, field->pow(static_cast<uint32_t>(x), static_cast<uint64_t>(r)));
    }
  }
  return LinearCode(field, n, std::move(gens));
}

}  // namespace qmcz
