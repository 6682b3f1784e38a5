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
#include <vector>

#include "qmcz/linalg.hpp"

namespace qmcz {

/// A linear code over GF(q), stored by its generator matrix only. Rows are
/// required to be independent; the reduced form is cached for membership
/// tests. Zero-dimensional codes (K = 0, explicit length) are legal values,
/// e.g. as the dual of the full space.
class LinearCode {
 public:
  LinearCode(FieldPtr field, Index n, FqMatrix gens);

  static LinearCode zero(FieldPtr field, Index n) {
    return LinearCode(std::move(field), n, FqMatrix(0, n));
  }
  static LinearCode full_space(const FieldPtr& field, Index n);

  const FieldPtr& field() const { return field_; }
  Index n() const { return n_; }
  Index dim() const { return gens_.rows(); }
  const FqMatrix& gens() const { return gens_; }
  const Rref& reduced() const { return rref_; }

  bool member(const FqRowVector& v) const;
  bool has_all_ones() const;

  /// Row spaces equal.
  bool same_space_as(const LinearCode& other) const;

 private:
  FieldPtr field_;
  Index n_;
  FqMatrix gens_;
  Rref rref_;
};

/// Per-coordinate nonzero scaling vector.
class TwistVector {
 public:
  TwistVector(FieldPtr field, FqRowVector entries);
  static TwistVector all_ones(const FieldPtr& field, Index n);

  const FieldPtr& field() const { return field_; }
  Index n() const { return entries_.cols(); }
  const FqRowVector& entries() const { return entries_; }
  TwistVector inverse() const;

 private:
  FieldPtr field_;
  FqRowVector entries_;
};

/// Dual code under the standard inner product; dimension n - K. The dual of
/// the full space is the zero-dimensional code.
LinearCode dual(const LinearCode& c);

/// Span of all m-fold coordinatewise products of codewords.
LinearCode schur_power(const LinearCode& c, int m);

/// Coordinatewise product of two vectors.
FqRowVector schur(const FqRowVector& a, const FqRowVector& b);

/// { (u_1 c_1, ..., u_n c_n) : c in C }.
LinearCode twist(const TwistVector& u, const LinearCode& c);
FqRowVector twist(const TwistVector& u, const FqRowVector& v);

/// Subspace test: every generator of inner lies in outer.
bool contains(const LinearCode& outer, const LinearCode& inner);

/// Exact minimum nonzero weight by message enumeration (q^K evaluations,
/// short-circuiting at weight 1); nullopt when q^K exceeds the budget.
std::optional<int> min_distance(const LinearCode& c, uint64_t budget = uint64_t{1} << 24);

/// u * C^{*m} contained in the dual of C.
bool mult_property_check(const LinearCode& c, const TwistVector& u, int m);

/// Checks the property at every order 1..m. Requires the all-one vector in
/// C, under which a single check at m already forces the whole ladder; the
/// full scan is the test of that implication.
bool mult_downgrade_check(const LinearCode& c, const TwistVector& u, int m);

/// Permuting every generator row lands back in the code.
bool is_invariant_under(const LinearCode& c, const Permutation& perm);

/// The orbit of coordinate 0 under the group covers every coordinate. Each
/// permutation must first pass is_invariant_under (NotAutomorphism names the
/// offender).
bool is_transitive(const LinearCode& c, const std::vector<Permutation>& group);

/// Reed-Solomon code over all q points of the field, canonical element
/// order, generator rows 1, x, ..., x^(k-1).
LinearCode reed_solomon(const FieldPtr& field, Index k);

}  // namespace qmcz
