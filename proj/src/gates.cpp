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

#include "qmcz/gates.hpp"

#include <algorithm>
#include <string>

namespace qmcz {

namespace {

Index position_of(const std::vector<Index>& labels, Index label) {
  for (size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == label) return static_cast<Index>(i);
  }
  throw Error(ErrorCode::UnknownLabel, "label " + std::to_string(label) + " not in block");
}

}  // namespace

ModulationSpec modulation_build(const CssCode& css, const StandardForm& sf,
                                const std::vector<Index>& s_set, const std::vector<Fq>& gamma) {
  if (s_set.size() != gamma.size()) {
    throw Error(ErrorCode::LengthMismatch, "gamma must be defined exactly on S");
  }
  const Field& f = *css.field;
  const Index N = sf.cols();

  ModulationSpec mod;
  // canonical ascending order over S
  std::vector<size_t> order(s_set.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](size_t a, size_t b) { return s_set[a] < s_set[b]; });

  mod.m_vector = fq_zero_row(css.field, N);
  for (size_t oi : order) {
    Index label = s_set[oi];
    Index pos = css.logical_position(label);  // UnknownLabel on bad input
    if (!mod.s_set.empty() && mod.s_set.back() == label) {
      throw Error(ErrorCode::InvalidArgument, "duplicate label in S");
    }
    mod.s_set.push_back(label);
    Fq g(css.field, gamma[oi].value_in(f));
    mod.gamma.push_back(g);
    Fq coeff = g * css.u_log(pos).inverse();
    FqRowVector row = sf.row_in_coord_order(pos);
    for (Index c = 0; c < N; ++c) mod.m_vector(c) += coeff * row(c);
  }
  return mod;
}

std::vector<PhysicalGate> physical_layer(const CssCode& css, const ModulationSpec& mod,
                                         const std::vector<Permutation>& sigmas) {
  std::vector<PhysicalGate> out;
  const Fq zero(css.field, 0);
  for (Index pos = 0; pos < css.n(); ++pos) {
    Index label = css.physical_labels[static_cast<size_t>(pos)];
    Fq exponent = -(css.u_phys(pos) * mod.m_vector(label));
    if (exponent == zero) continue;
    PhysicalGate gate;
    gate.exponent = exponent;
    gate.targets.reserve(sigmas.size() + 1);
    gate.targets.push_back(label);
    for (const auto& sigma : sigmas) gate.targets.push_back(sigma[static_cast<size_t>(label)]);
    out.push_back(std::move(gate));
  }
  return out;
}

uint32_t logical_phase(const std::vector<LogicalGate>& gates, const std::vector<FqRowVector>& xs,
                       const std::vector<Index>& labels, const Field& field) {
  const uint32_t p = field.p();
  uint32_t total = 0;
  for (const auto& gate : gates) {
    if (gate.arity() != static_cast<Index>(xs.size())) {
      throw Error(ErrorCode::BlockMismatch, "gate arity differs from number of input blocks");
    }
    uint32_t prod = gate.gamma.value_in(field);
    for (size_t j = 0; j < xs.size() && prod != 0; ++j) {
      Index pos = position_of(labels, gate.targets[j]);
      prod = field.mul(prod, xs[j](pos).value_in(field));
    }
    total = (total + field.trace(prod)) % p;
  }
  return total;
}

uint32_t logical_phase(const CssCode& css, const std::vector<LogicalGate>& gates,
                       const std::vector<FqRowVector>& xs) {
  return logical_phase(gates, xs, css.logical_labels, *css.field);
}

uint32_t physical_phase(const std::vector<PhysicalGate>& gates,
                        const std::vector<FqRowVector>& strings, const std::vector<Index>& labels,
                        const Field& field) {
  const uint32_t p = field.p();
  uint32_t total = 0;
  for (const auto& gate : gates) {
    if (gate.arity() != static_cast<Index>(strings.size())) {
      throw Error(ErrorCode::BlockMismatch, "gate arity differs from number of input blocks");
    }
    uint32_t prod = gate.exponent.value_in(field);
    for (size_t j = 0; j < strings.size() && prod != 0; ++j) {
      Index pos = position_of(labels, gate.targets[j]);
      prod = field.mul(prod, strings[j](pos).value_in(field));
    }
    total = (total + field.trace(prod)) % p;
  }
  return total;
}

uint32_t physical_phase(const CssCode& css, const std::vector<PhysicalGate>& gates,
                        const std::vector<FqRowVector>& strings) {
  return physical_phase(gates, strings, css.physical_labels, *css.field);
}

IdentityCheck verify_main_theorem(const CssCode& css, const StandardForm& sf,
                                  const ModulationSpec& mod,
                                  const std::vector<Permutation>& sigmas) {
  const Field& f = *css.field;
  const Index K = sf.rows();
  const Index m = static_cast<Index>(sigmas.size()) + 1;
  const Index N = sf.cols();

  // raw copies: rows in instance coordinate order, u over all coordinates
  std::vector<std::vector<uint32_t>> rows(static_cast<size_t>(K));
  for (Index r = 0; r < K; ++r) {
    FqRowVector v = sf.row_in_coord_order(r);
    rows[static_cast<size_t>(r)].resize(static_cast<size_t>(N));
    for (Index c = 0; c < N; ++c) rows[static_cast<size_t>(r)][static_cast<size_t>(c)] = v(c).value_in(f);
  }
  std::vector<uint32_t> u(static_cast<size_t>(N), 0), mvec(static_cast<size_t>(N), 0);
  for (Index pos = 0; pos < css.n(); ++pos) {
    u[static_cast<size_t>(css.physical_labels[static_cast<size_t>(pos)])] = css.u_phys(pos).value_in(f);
  }
  for (Index pos = 0; pos < css.k(); ++pos) {
    u[static_cast<size_t>(css.logical_labels[static_cast<size_t>(pos)])] = css.u_log(pos).value_in(f);
  }
  for (Index c = 0; c < N; ++c) mvec[static_cast<size_t>(c)] = mod.m_vector(c).value_in(f);
  std::vector<uint32_t> gam(mod.gamma.size());
  for (size_t i = 0; i < gam.size(); ++i) gam[i] = mod.gamma[i].value_in(f);

  IdentityCheck check;
  std::vector<Index> tuple(static_cast<size_t>(m), 0);
  while (true) {
    uint32_t lhs = 0;
    for (Index pos = 0; pos < css.n(); ++pos) {
      const Index P = css.physical_labels[static_cast<size_t>(pos)];
      uint32_t term = f.mul(u[static_cast<size_t>(P)], mvec[static_cast<size_t>(P)]);
      if (term == 0) continue;
      term = f.mul(term, rows[static_cast<size_t>(tuple[0])][static_cast<size_t>(P)]);
      for (Index j = 1; j < m && term != 0; ++j) {
        Index pj = sigmas[static_cast<size_t>(j - 1)][static_cast<size_t>(P)];
        term = f.mul(term, rows[static_cast<size_t>(tuple[static_cast<size_t>(j)])][static_cast<size_t>(pj)]);
      }
      lhs = f.add(lhs, term);
    }
    uint32_t rhs = 0;
    for (size_t si = 0; si < mod.s_set.size(); ++si) {
      const Index Q = mod.s_set[si];
      uint32_t term = f.mul(gam[si], rows[static_cast<size_t>(tuple[0])][static_cast<size_t>(Q)]);
      for (Index j = 1; j < m && term != 0; ++j) {
        Index qj = sigmas[static_cast<size_t>(j - 1)][static_cast<size_t>(Q)];
        term = f.mul(term, rows[static_cast<size_t>(tuple[static_cast<size_t>(j)])][static_cast<size_t>(qj)]);
      }
      rhs = f.add(rhs, term);
    }
    if (lhs != f.neg(rhs)) {
      check.pass = false;
      check.witness = tuple;
      return check;
    }
    // next tuple in base-K counter order
    Index d = 0;
    while (d < m && ++tuple[static_cast<size_t>(d)] == K) tuple[static_cast<size_t>(d++)] = 0;
    if (d == m) break;
  }
  return check;
}

IdentityCheck corollary_sum_check(const FamilyInstance& instance, int m) {
  if (m < 1) throw Error(ErrorCode::InvalidArgument, "order must be >= 1");
  const Field& f = *instance.field();
  const Index K = instance.code.dim();
  const Index N = instance.n();
  const Index tuple_len = m + 1;

  std::vector<std::vector<uint32_t>> rows(static_cast<size_t>(K));
  for (Index r = 0; r < K; ++r) {
    rows[static_cast<size_t>(r)].resize(static_cast<size_t>(N));
    for (Index c = 0; c < N; ++c) {
      rows[static_cast<size_t>(r)][static_cast<size_t>(c)] = instance.code.gens()(r, c).value_in(f);
    }
  }
  std::vector<uint32_t> u(static_cast<size_t>(N));
  for (Index c = 0; c < N; ++c) u[static_cast<size_t>(c)] = instance.u.entries()(c).value_in(f);

  IdentityCheck check;
  std::vector<Index> tuple(static_cast<size_t>(tuple_len), 0);
  while (true) {
    uint32_t sum = 0;
    for (Index c = 0; c < N; ++c) {
      uint32_t term = u[static_cast<size_t>(c)];
      for (Index t = 0; t < tuple_len && term != 0; ++t) {
        term = f.mul(term, rows[static_cast<size_t>(tuple[static_cast<size_t>(t)])][static_cast<size_t>(c)]);
      }
      sum = f.add(sum, term);
    }
    if (sum != 0) {
      check.pass = false;
      check.witness = tuple;
      return check;
    }
    Index d = 0;
    while (d < tuple_len && ++tuple[static_cast<size_t>(d)] == K) tuple[static_cast<size_t>(d++)] = 0;
    if (d == tuple_len) break;
  }
  return check;
}

SparseApplyResult sparse_apply(const CssCode& css, const std::vector<PhysicalGate>& gates,
                               const std::vector<std::vector<FqRowVector>>& states,
                               uint64_t budget) {
  const Field& f = *css.field;
  const uint32_t p = f.p();
  const size_t m = states.size();
  if (m == 0) throw Error(ErrorCode::InvalidArgument, "need at least one state");

  SparseApplyResult out;
  uint64_t total = 1;
  for (const auto& st : states) {
    if (st.empty()) throw Error(ErrorCode::InvalidArgument, "empty sparse state");
    out.radices.push_back(st.size());
    if (total > budget / st.size()) {
      throw Error(ErrorCode::BudgetExceeded, "term tuple count exceeds budget");
    }
    total *= st.size();
  }

  // raw strings per block and precomputed gate target positions
  std::vector<std::vector<std::vector<uint32_t>>> raw(m);
  for (size_t b = 0; b < m; ++b) {
    raw[b].resize(states[b].size());
    for (size_t t = 0; t < states[b].size(); ++t) {
      const auto& s = states[b][t];
      if (s.cols() != css.n()) throw Error(ErrorCode::LengthMismatch, "string length != n");
      raw[b][t].resize(static_cast<size_t>(css.n()));
      for (Index j = 0; j < css.n(); ++j) raw[b][t][static_cast<size_t>(j)] = s(j).value_in(f);
    }
  }
  struct RawGate {
    uint32_t exponent;
    std::vector<Index> pos;
  };
  std::vector<RawGate> rg;
  rg.reserve(gates.size());
  for (const auto& gate : gates) {
    if (gate.arity() != static_cast<Index>(m)) {
      throw Error(ErrorCode::BlockMismatch, "gate arity differs from number of blocks");
    }
    RawGate g;
    g.exponent = gate.exponent.value_in(f);
    for (size_t j = 0; j < m; ++j) g.pos.push_back(css.physical_position(gate.targets[j]));
    rg.push_back(std::move(g));
  }

  out.exponents.resize(total);
  std::vector<size_t> term(m, 0);
  for (uint64_t idx = 0; idx < total; ++idx) {
    uint32_t acc = 0;
    for (const auto& g : rg) {
      uint32_t prod = g.exponent;
      for (size_t j = 0; j < m && prod != 0; ++j) {
        prod = f.mul(prod, raw[j][term[j]][static_cast<size_t>(g.pos[j])]);
      }
      acc = (acc + f.trace(prod)) % p;
    }
    out.exponents[idx] = acc;
    if (idx == 0) {
      out.exponent = acc;
    } else if (acc != out.exponent) {
      out.uniform = false;
    }
    size_t d = 0;
    while (d < m && ++term[d] == states[d].size()) term[d++] = 0;
  }
  return out;
}

}  // namespace qmcz
