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

#include <Eigen/Core>
#include <vector>

#include "qmcz/field.hpp"

namespace Eigen {

template <>
struct NumTraits<qmcz::Fq> {
  typedef qmcz::Fq Real;
  typedef qmcz::Fq NonInteger;
  typedef qmcz::Fq Literal;
  typedef qmcz::Fq Nested;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 0,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 4,
    MulCost = 4,
  };
  static inline qmcz::Fq epsilon() { return qmcz::Fq(0); }
  static inline qmcz::Fq dummy_precision() { return qmcz::Fq(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace qmcz {

using FqMatrix = Eigen::Matrix<Fq, Eigen::Dynamic, Eigen::Dynamic>;
using FqRowVector = Eigen::Matrix<Fq, 1, Eigen::Dynamic>;
using FqColVector = Eigen::Matrix<Fq, Eigen::Dynamic, 1>;
using Index = Eigen::Index;

/// Coordinate permutation: place i maps to place perm[i].
using Permutation = std::vector<Index>;

inline FqMatrix fq_zeros(const FieldPtr& f, Index rows, Index cols) {
  return FqMatrix::Constant(rows, cols, Fq(f, 0));
}
inline FqRowVector fq_zero_row(const FieldPtr& f, Index n) {
  return FqRowVector::Constant(n, Fq(f, 0));
}

/// Rebinds every entry to the given field (embedding integer constants);
/// throws SpecMismatch on entries from a different field.
template <typename Derived>
void bind_to_field(Eigen::MatrixBase<Derived>& m, const FieldPtr& f) {
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      m(i, j) = Fq(f, m(i, j).value_in(*f));
    }
  }
}

/// Reduced row echelon form with deterministic pivoting: columns scanned
/// left to right, pivot row = first row (top down) with a nonzero entry.
struct Rref {
  FqMatrix mat;
  std::vector<Index> pivot_cols;
  Index rank() const { return static_cast<Index>(pivot_cols.size()); }
};

template <typename Scalar>
Rref rref_of(Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> m) {
  Rref out;
  const Index rows = m.rows(), cols = m.cols();
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index pivot = -1;
    for (Index i = r; i < rows; ++i) {
      if (!(m(i, c) == Scalar(0))) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != r) m.row(pivot).swap(m.row(r));
    Scalar inv = Scalar(1) / m(r, c);
    for (Index j = c; j < cols; ++j) m(r, j) = m(r, j) * inv;
    for (Index i = 0; i < rows; ++i) {
      if (i == r) continue;
      Scalar factor = m(i, c);
      if (factor == Scalar(0)) continue;
      for (Index j = c; j < cols; ++j) m(i, j) = m(i, j) - factor * m(r, j);
    }
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.mat = std::move(m);
  return out;
}

inline Rref rref_of_rows(const FqMatrix& m) { return rref_of<Fq>(m); }

inline Index rank_of(const FqMatrix& m) { return rref_of<Fq>(m).rank(); }

/// Nonzero rows of the reduced form: a canonical basis of the row space.
inline FqMatrix row_basis(const FqMatrix& m) {
  Rref r = rref_of<Fq>(m);
  return r.mat.topRows(r.rank());
}

/// Remainder of v after elimination against the reduced rows; zero iff v
/// lies in the row space.
inline FqRowVector reduce_against(const Rref& r, FqRowVector v) {
  for (Index i = 0; i < r.rank(); ++i) {
    Index c = r.pivot_cols[static_cast<size_t>(i)];
    Fq factor = v(c);
    if (factor == Fq(0)) continue;
    for (Index j = 0; j < v.cols(); ++j) v(j) = v(j) - factor * r.mat(i, j);
  }
  return v;
}

inline bool in_row_space(const Rref& r, const FqRowVector& v) {
  FqRowVector rem = reduce_against(r, v);
  for (Index j = 0; j < rem.cols(); ++j) {
    if (!(rem(j) == Fq(0))) return false;
  }
  return true;
}

/// Rows spanning { x : m x^T = 0 }, built from the reduced form with free
/// columns taken in ascending order. For a 0xN input this is the identity.
FqMatrix kernel_basis(const FqMatrix& m, const FieldPtr& f, Index n_cols);

/// out[i] = v[perm[i]]; the permuted evaluation vector.
FqRowVector apply_permutation(const Permutation& perm, const FqRowVector& v);

/// Place-map composition: (a o b)(i) = a[b[i]].
Permutation compose(const Permutation& a, const Permutation& b);

bool is_permutation_of(const Permutation& perm, Index n);

Permutation identity_permutation(Index n);

}  // namespace qmcz
