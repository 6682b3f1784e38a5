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

#include "qmcz/family.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace qmcz {

namespace {

// next size-t combination of column indices in lexicographic order
bool next_combination(std::vector<Index>& idx, Index n) {
  const Index t = static_cast<Index>(idx.size());
  for (Index i = t; i-- > 0;) {
    if (idx[static_cast<size_t>(i)] < n - (t - i)) {
      ++idx[static_cast<size_t>(i)];
      for (Index j = i + 1; j < t; ++j) {
        idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
      }
      return true;
    }
  }
  return false;
}

}  // namespace

bool dual_distance_exceeds(const LinearCode& code, Index t) {
  if (t == 0) return true;
  if (t > code.dim()) return false;  // more columns than rank: always dependent
  std::vector<Index> idx(static_cast<size_t>(t));
  for (Index i = 0; i < t; ++i) idx[static_cast<size_t>(i)] = i;
  do {
    FqMatrix sub(code.dim(), t);
    for (Index c = 0; c < t; ++c) sub.col(c) = code.gens().col(idx[static_cast<size_t>(c)]);
    if (rank_of(sub) < t) return false;
  } while (next_combination(idx, code.n()));
  return true;
}

bool check_dual_relation(const LinearCode& code, const TwistVector& u,
                         const LinearCode& complement) {
  if (u.n() != code.n() || complement.n() != code.n()) {
    throw Error(ErrorCode::LengthMismatch, "dual relation operands disagree in length");
  }
  return twist(u, complement).same_space_as(dual(code));
}

FamilyInstance grs_build(const FieldPtr& field, Index k, Index subgroup_size,
                         uint32_t coset_rep, int m_max) {
  const Index q = field->q();
  if (k < 1 || k > q) throw Error(ErrorCode::InvalidArgument, "RS dimension out of range");
  if (coset_rep >= field->q()) throw Error(ErrorCode::InvalidArgument, "coset representative out of range");
  if (m_max < 1) throw Error(ErrorCode::InvalidArgument, "m_max must be >= 1");

  // V must be the canonical additive subgroup { values 0 .. |V|-1 }
  Index v = subgroup_size;
  if (v < 1 || v >= q) {
    throw Error(ErrorCode::BlockNotCoset, "subgroup size must lie in [1, q)");
  }
  while (v > 1 && v % field->p() == 0) v /= field->p();
  if (v != 1) {
    throw Error(ErrorCode::BlockNotCoset, "subgroup size must be a power of p");
  }

  LinearCode code = reed_solomon(field, k);
  TwistVector u = TwistVector::all_ones(field, q);

  std::vector<Permutation> group;
  group.reserve(static_cast<size_t>(subgroup_size));
  for (uint32_t tv = 0; tv < static_cast<uint32_t>(subgroup_size); ++tv) {
    Permutation perm(static_cast<size_t>(q));
    for (Index i = 0; i < q; ++i) {
      perm[static_cast<size_t>(i)] = field->add(static_cast<uint32_t>(i), tv);
    }
    group.push_back(std::move(perm));
  }

  std::vector<Index> block;
  for (uint32_t tv = 0; tv < static_cast<uint32_t>(subgroup_size); ++tv) {
    block.push_back(field->add(coset_rep, tv));
  }
  std::sort(block.begin(), block.end());

  if (!dual_distance_exceeds(code, subgroup_size)) {
    throw Error(ErrorCode::DualDistanceTooSmall,
                "dual distance " + std::to_string(k + 1) + " does not exceed block size " +
                    std::to_string(subgroup_size));
  }
  for (int mt = 1; mt <= m_max; ++mt) {
    if (!mult_property_check(code, u, mt)) {
      throw Error(ErrorCode::MultiplicationTooWeak,
                  "multiplication property fails at order " + std::to_string(mt));
    }
  }

  FamilyInstance instance{std::move(code), std::move(u), std::move(group), std::move(block), m_max};
  ValidationReport report = validate(instance);
  if (!report.all_pass()) {
    throw Error(ErrorCode::InvalidArgument, "constructed instance failed validation");
  }
  return instance;
}

ValidationReport validate(const FamilyInstance& instance) {
  ValidationReport report;
  auto add = [&](std::string name, bool pass, std::string detail = "", bool info = false) {
    report.items.push_back({std::move(name), pass, info, std::move(detail)});
  };

  const LinearCode& code = instance.code;
  const Index n = code.n();
  const auto& group = instance.group;
  const auto& block = instance.logical_block;

  {
    bool ok = instance.u.n() == n;
    for (Index i = 0; ok && i < n; ++i) ok = !instance.u.entries()(i).is_zero();
    add("twist entries nonzero, length matches", ok);
  }
  add("all-one vector in code", code.has_all_ones());

  bool perms_ok = !group.empty();
  for (const auto& perm : group) perms_ok = perms_ok && is_permutation_of(perm, n);
  add("group elements are coordinate permutations", perms_ok);

  bool identity_first = !group.empty() && group.front() == identity_permutation(n);
  add("identity element listed first", identity_first);

  bool block_ok = !block.empty();
  for (Index c : block) block_ok = block_ok && c >= 0 && c < n;
  {
    std::set<Index> uniq(block.begin(), block.end());
    block_ok = block_ok && uniq.size() == block.size();
  }
  add("logical block is an ordered coordinate subset", block_ok);

  if (!perms_ok || !block_ok) return report;  // nothing below is meaningful

  {
    bool closed = true;
    std::set<Permutation> members(group.begin(), group.end());
    for (const auto& a : group) {
      for (const auto& b : group) {
        if (members.find(compose(a, b)) == members.end()) {
          closed = false;
          break;
        }
      }
      if (!closed) break;
    }
    add("group closed under composition", closed);
  }

  {
    bool fixes = true;
    std::set<Index> block_set(block.begin(), block.end());
    for (const auto& perm : group) {
      for (Index c : block) {
        if (block_set.find(perm[static_cast<size_t>(c)]) == block_set.end()) {
          fixes = false;
          break;
        }
      }
      if (!fixes) break;
    }
    add("group fixes logical block setwise", fixes);
  }

  {
    // Each permuted generator row must land in the code: the permuted
    // vector is the evaluation of the transformed function, so membership
    // is exactly the automorphism condition.
    bool autom = true;
    std::string detail;
    for (size_t g = 0; g < group.size(); ++g) {
      if (!is_invariant_under(code, group[g])) {
        autom = false;
        detail = "group element " + std::to_string(g) + " moves the code";
        break;
      }
    }
    add("group elements are code automorphisms", autom, detail);
  }

  add("logical block size equals group size",
      block.size() == group.size());

  {
    // regular action: for each ordered pair (Q, Q') exactly one element
    bool regular = true;
    std::string detail;
    for (Index from : block) {
      for (Index to : block) {
        int hits = 0;
        for (const auto& perm : group) {
          if (perm[static_cast<size_t>(from)] == to) ++hits;
        }
        if (hits != 1) {
          regular = false;
          detail = "pair (" + std::to_string(from) + ", " + std::to_string(to) + ") has " +
                   std::to_string(hits) + " group elements";
          break;
        }
      }
      if (!regular) break;
    }
    add("group action regular on logical block", regular, detail);
  }

  {
    bool ladder = instance.m_max >= 1 && code.has_all_ones();
    std::string detail;
    if (ladder) {
      for (int mt = 1; mt <= instance.m_max; ++mt) {
        if (!mult_property_check(code, instance.u, mt)) {
          ladder = false;
          detail = "fails at order " + std::to_string(mt);
          break;
        }
      }
    }
    add("multiplication property at orders 1.." + std::to_string(instance.m_max), ladder, detail);
  }

  add("dual distance exceeds logical block size",
      dual_distance_exceeds(code, static_cast<Index>(block.size())));

  {
    bool invariant = true;
    for (const auto& perm : group) {
      if (apply_permutation(perm, instance.u.entries()) != instance.u.entries()) {
        invariant = false;
        break;
      }
    }
    add("twist vector invariant under group (informational)", invariant, "", true);
  }

  return report;
}

BoundReport classical_bounds(long long ell, long long s, long long N) {
  if (s < 1) throw Error(ErrorCode::HypothesisViolated, "s >= 1 fails");
  if (ell < 4) throw Error(ErrorCode::HypothesisViolated, "ell >= 4 fails");
  if (ell < 2 * s - 1) throw Error(ErrorCode::HypothesisViolated, "ell >= 2s-1 fails");
  if (N < 1) throw Error(ErrorCode::InvalidArgument, "N must be positive");

  BoundReport report;
  report.ell = ell;
  report.s = s;
  report.N = N;
  const long long den = s * (ell - 1);
  report.K_lb = Rational((ell + 1 - s) * N, den);
  report.D_lb = Rational((den - 3) * N, den);
  report.Dperp_lb = Rational((ell + 1) * N, den);
  return report;
}

long long quantum_bounds(long long D, long long Dperp, long long k) {
  if (D < 0 || Dperp < 0 || k < 0) {
    throw Error(ErrorCode::InvalidArgument, "bound inputs must be nonnegative");
  }
  long long d = std::min(D, Dperp) - k;
  return d > 0 ? d : 0;
}

long long depth_bound(long long k, int m) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "k must be >= 1");
  if (m < 2) throw Error(ErrorCode::InvalidArgument, "gate arity must be >= 2");
  long long out = 1;
  for (int i = 1; i < m; ++i) {
    if (out > (1ll << 62) / k) throw Error(ErrorCode::InvalidArgument, "depth bound overflows");
    out *= k;
  }
  return out;
}

BoundReport bounds_with_quantum(BoundReport report, long long k, std::optional<int> m) {
  report.k = k;
  report.d_lb = quantum_bounds(report.D_lb.floor(), report.Dperp_lb.floor(), k);
  if (m.has_value()) {
    report.m = m;
    report.depth_ub = depth_bound(k, *m);
  }
  return report;
}

}  // namespace qmcz
