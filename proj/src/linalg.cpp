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

#include "qmcz/linalg.hpp"

#include <algorithm>
#include <numeric>

namespace qmcz {

FqMatrix kernel_basis(const FqMatrix& m, const FieldPtr& f, Index n_cols) {
  const Fq zero(f, 0), one(f, 1);
  if (m.rows() == 0) {
    FqMatrix id = fq_zeros(f, n_cols, n_cols);
    for (Index i = 0; i < n_cols; ++i) id(i, i) = one;
    return id;
  }
  Rref r = rref_of<Fq>(m);
  const Index rank = r.rank();
  std::vector<bool> is_pivot(static_cast<size_t>(n_cols), false);
  for (Index c : r.pivot_cols) is_pivot[static_cast<size_t>(c)] = true;

  FqMatrix out = fq_zeros(f, n_cols - rank, n_cols);
  Index row = 0;
  for (Index free_c = 0; free_c < n_cols; ++free_c) {
    if (is_pivot[static_cast<size_t>(free_c)]) continue;
    out(row, free_c) = one;
    for (Index i = 0; i < rank; ++i) {
      Index pc = r.pivot_cols[static_cast<size_t>(i)];
      out(row, pc) = -Fq(f, r.mat(i, free_c).value_in(*f));
    }
    ++row;
  }
  return out;
}

FqRowVector apply_permutation(const Permutation& perm, const FqRowVector& v) {
  FqRowVector out(v.cols());
  for (Index i = 0; i < v.cols(); ++i) out(i) = v(perm[static_cast<size_t>(i)]);
  return out;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  Permutation out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[static_cast<size_t>(b[i])];
  return out;
}

bool is_permutation_of(const Permutation& perm, Index n) {
  if (static_cast<Index>(perm.size()) != n) return false;
  std::vector<bool> seen(static_cast<size_t>(n), false);
  for (Index v : perm) {
    if (v < 0 || v >= n || seen[static_cast<size_t>(v)]) return false;
    seen[static_cast<size_t>(v)] = true;
  }
  return true;
}

Permutation identity_permutation(Index n) {
  Permutation p(static_cast<size_t>(n));
  std::iota(p.begin(), p.end(), Index{0});
  return p;
}

}  // namespace qmcz
