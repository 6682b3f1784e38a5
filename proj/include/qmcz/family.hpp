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

#include <optional>
#include <string>
#include <vector>

#include "qmcz/code.hpp"
#include "qmcz/rational.hpp"

namespace qmcz {

/// An evaluation code equipped with everything the gate construction
/// consumes: a nonzero twist vector, a permutation group acting on the
/// coordinates (identity first), an ordered logical coordinate block L on
/// which the action is regular, and the largest verified multiplication
/// order m_max.
struct FamilyInstance {
  LinearCode code;                  // full length N, pre-puncture
  TwistVector u;                    // length N
  std::vector<Permutation> group;   // |group| == |L|
  std::vector<Index> logical_block; // ordered coordinate subset L
  int m_max = 0;

  const FieldPtr& field() const { return code.field(); }
  Index n() const { return code.n(); }
  Index logical_count() const { return static_cast<Index>(logical_block.size()); }
};

struct ValidationItem {
  std::string name;
  bool pass = false;
  bool informational = false;  // recorded, but excluded from the verdict
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationItem> items;
  bool all_pass() const {
    for (const auto& it : items) {
      if (!it.informational && !it.pass) return false;
    }
    return true;
  }
};

/// Builds a generalized Reed-Solomon instance: code RS(q, k) over all q
/// points, u = all-ones, group = translations x -> x+v by the additive
/// subgroup V spanned by the first log_p|V| canonical basis elements
/// (so V = { values 0 .. |V|-1 }), logical block = the coset rep+V. Every
/// FamilyInstance invariant is re-verified before returning.
FamilyInstance grs_build(const FieldPtr& field, Index k, Index subgroup_size,
                         uint32_t coset_rep, int m_max = 2);

/// Re-verifies every instance invariant from scratch, itemized; group
/// elements are checked as code automorphisms by membership of the
/// permuted evaluation vectors. Whether u itself is group-invariant is
/// recorded as an informational item.
ValidationReport validate(const FamilyInstance& instance);

/// True iff every size-t subset of columns of the generator matrix has full
/// rank t; equivalent to dual distance > t. Exhaustive over subsets.
bool dual_distance_exceeds(const LinearCode& code, Index t);

/// Duality relation for a supplied twist vector: twist(u, complement) equals
/// the dual of the code as a row space. The twist is an input to be checked,
/// never derived; this is the check offered to instances that come with a
/// complement code.
bool check_dual_relation(const LinearCode& code, const TwistVector& u,
                         const LinearCode& complement);

struct BoundReport {
  long long ell = 0, s = 0, N = 0;
  Rational K_lb, D_lb, Dperp_lb;           // exact rational lower bounds
  std::optional<long long> k;              // logical dimension, when supplied
  std::optional<long long> d_lb;           // min(D,Dperp) - k, floored at 0
  std::optional<int> m;                    // gate arity, when supplied
  std::optional<long long> depth_ub;       // k^(m-1)
};

/// Closed-form family bounds: K >= (ell+1-s)/(s(ell-1)) N,
/// D >= (1 - 3/(s(ell-1))) N, Dperp >= (ell+1)/(s(ell-1)) N.
/// Requires ell >= 4 and ell >= 2s-1; violations raise HypothesisViolated
/// naming the failed inequality.
BoundReport classical_bounds(long long ell, long long s, long long N);

/// max(0, min(D, Dperp) - k).
long long quantum_bounds(long long D, long long Dperp, long long k);

/// k^(m-1), the layer-count ceiling for arity-m circuits.
long long depth_bound(long long k, int m);

/// Fills the optional quantum entries of a bound report.
BoundReport bounds_with_quantum(BoundReport report, long long k, std::optional<int> m);

}  // namespace qmcz
