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
#include <vector>

#include "qmcz/css.hpp"

namespace qmcz {

/// Diagonal multi-control-Z gate on m logical qudits, one per code block:
/// |x_0 ... x_{m-1}> picks up exp((2 pi i / p) tr(gamma x_0 ... x_{m-1})).
/// Target j is a logical label (instance coordinate) addressing block j.
struct LogicalGate {
  Fq gamma;
  std::vector<Index> targets;

  Index arity() const { return static_cast<Index>(targets.size()); }
};

/// Physical counterpart; target j is a physical label addressing block j.
struct PhysicalGate {
  Fq exponent;
  std::vector<Index> targets;

  Index arity() const { return static_cast<Index>(targets.size()); }
};

/// The modulation function M = sum_{Q in S} gamma_Q u_Q^{-1} g~_Q, stored
/// as its full-length evaluation vector in instance coordinate order.
/// M vanishes on logical labels outside S, takes gamma_Q u_Q^{-1} at
/// Q in S, and lies in the pre-puncture code.
struct ModulationSpec {
  std::vector<Index> s_set;   // logical labels, ascending
  std::vector<Fq> gamma;      // aligned with s_set
  FqRowVector m_vector;       // length N, instance coordinate order
};

ModulationSpec modulation_build(const CssCode& css, const StandardForm& sf,
                                const std::vector<Index>& s_set, const std::vector<Fq>& gamma);

/// One depth-one physical layer: a gate on (P, sigma_1(P), ..., sigma_{m-1}(P))
/// with exponent -u_P M(P) for every physical label P with nonzero exponent.
/// Each block's target list is duplicate-free because the sigmas are
/// bijections.
std::vector<PhysicalGate> physical_layer(const CssCode& css, const ModulationSpec& mod,
                                         const std::vector<Permutation>& sigmas);

/// Phase exponent in Z_p accumulated by a diagonal circuit on given inputs.
/// `labels` maps block positions to the gate-target label space: position i
/// holds label labels[i].
uint32_t logical_phase(const std::vector<LogicalGate>& gates,
                       const std::vector<FqRowVector>& xs, const std::vector<Index>& labels,
                       const Field& field);
uint32_t logical_phase(const CssCode& css, const std::vector<LogicalGate>& gates,
                       const std::vector<FqRowVector>& xs);

uint32_t physical_phase(const std::vector<PhysicalGate>& gates,
                        const std::vector<FqRowVector>& strings, const std::vector<Index>& labels,
                        const Field& field);
uint32_t physical_phase(const CssCode& css, const std::vector<PhysicalGate>& gates,
                        const std::vector<FqRowVector>& strings);

struct IdentityCheck {
  bool pass = true;
  std::vector<Index> witness;  // failing generator-row tuple, when !pass
};

/// The pre-trace field identity behind the compiled layer: for every tuple
/// (b^0, ..., b^{m-1}) of standard-form rows of the pre-puncture code,
///   sum_{P physical} u_P M(P) b^0(P) prod_j b^j(sigma_j(P))
///     = - sum_{Q in S} gamma_Q b^0(Q) prod_j b^j(sigma_j(Q)).
/// Multilinearity extends the identity to all codeword tuples, which gives
/// phase equality on every logical state; this is strictly stronger than
/// comparing post-trace phases.
IdentityCheck verify_main_theorem(const CssCode& css, const StandardForm& sf,
                                  const ModulationSpec& mod, const std::vector<Permutation>& sigmas);

/// Full-support sum identity at order m: for all (m+1)-tuples of generator
/// rows, sum_i u_i prod_t b^t(i) = 0. Equivalent to the m-multiplication
/// property; callers may probe beyond the verified m_max, where failure is
/// a result, not an error.
IdentityCheck corollary_sum_check(const FamilyInstance& instance, int m);

struct SparseApplyResult {
  bool uniform = true;
  uint32_t exponent = 0;                // common exponent when uniform
  std::vector<uint32_t> exponents;      // one per term tuple, mixed-radix order
  std::vector<uint64_t> radices;        // term counts per block
};

/// Applies a diagonal physical circuit to m sparse states (each a list of
/// computational strings): records the phase exponent of every term tuple
/// and reports whether all tuples agree. On logical basis states a compiled
/// logical circuit must be uniform (gauge invariance).
SparseApplyResult sparse_apply(const CssCode& css, const std::vector<PhysicalGate>& gates,
                               const std::vector<std::vector<FqRowVector>>& states,
                               uint64_t budget = uint64_t{1} << 24);

}  // namespace qmcz
