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
#include <vector>

#include "qmcz/family.hpp"

namespace qmcz {

/// Generator matrix brought to the block form [I_k | G1 ; 0 | G0], logical
/// columns first. The top k rows restricted to the logical columns form the
/// identity (the delta property), so row t is the unique basis function
/// taking value 1 at logical label t and 0 at the others.
struct StandardForm {
  FqMatrix g_tilde;                 // K x N in standard-form column layout
  Index k = 0;                      // logical count
  std::vector<Index> column_order;  // instance coordinate -> standard-form column
  std::vector<Index> coord_of_col;  // standard-form column -> instance coordinate

  Index rows() const { return g_tilde.rows(); }
  Index cols() const { return g_tilde.cols(); }

  /// Row r as a full-length vector indexed by instance coordinates.
  FqRowVector row_in_coord_order(Index r) const;
};

/// Deterministic reduction: logical columns (in block order) are pivoted
/// first, producing I_k on top and zeros below; the remaining rows are then
/// brought to reduced echelon form over the physical columns. Throws
/// LogicalColumnsDependent (naming a dependent subset) when the logical
/// columns of the generator matrix are not independent, i.e. when the dual
/// distance precondition fails.
StandardForm standard_form(const FamilyInstance& instance);

/// The punctured pair: g1/g0 are the standard-form blocks with the logical
/// columns deleted. Logical Z operators come from ker(g0), logical X
/// operators from rowspan([g1; g0]).
struct CssCode {
  FieldPtr field;
  FqMatrix g1;                        // k x n
  FqMatrix g0;                        // (K-k) x n
  FqRowVector u_log;                  // twist entries on logical columns, in L order
  FqRowVector u_phys;                 // twist entries on physical columns
  std::vector<Index> logical_labels;  // instance coordinates, in L order
  std::vector<Index> physical_labels; // instance coordinates, canonical order

  Index k() const { return g1.rows(); }
  Index n() const { return g1.cols(); }
  Index stab_rows() const { return g0.rows(); }

  /// Position of an instance coordinate within the logical / physical
  /// blocks; throws UnknownLabel.
  Index logical_position(Index label) const;
  Index physical_position(Index label) const;
};

/// Punctures the standard form and verifies the block-independence
/// inner-product table: <g, u_phys * g'> over the physical columns must be
/// nonzero exactly for g = g' a g1 row. Throws IndependenceViolated with
/// the offending pair otherwise.
CssCode build_css(const StandardForm& sf, const FamilyInstance& instance);

/// The inner-product table itself (K x K, rows/cols ordered g1 then g0),
/// exposed for report generation.
FqMatrix independence_table(const CssCode& css);

/// The q^(K-k) computational strings of the logical basis state |x>:
/// { sum_Q x_Q g1_Q + g : g in rowspan(g0) }, each of length n. Strings are
/// pairwise distinct coset representatives enumerated in canonical message
/// order. Throws BudgetExceeded when q^(K-k) > budget.
std::vector<FqRowVector> logical_basis(const CssCode& css, const FqRowVector& x,
                                       uint64_t budget = uint64_t{1} << 24);

struct CssDistance {
  std::optional<int> dx;  // min weight over C1 \ rowspan(g0)
  std::optional<int> dz;  // min weight over C0 \ dual(C1)
  std::optional<int> d;   // min of the two, when both known
};

/// Brute-force distances. Each side enumerates messages when the codeword
/// count fits the budget and otherwise climbs supports by weight; a side
/// whose enumeration would exceed the budget is reported as nullopt.
CssDistance css_distance(const CssCode& css, uint64_t budget = uint64_t{1} << 24);

}  // namespace qmcz
