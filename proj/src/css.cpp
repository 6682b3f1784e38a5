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

#include "qmcz/css.hpp"

#include <algorithm>
#include <string>

namespace qmcz {

namespace {

std::string index_list(const std::vector<Index>& v) {
  std::string out = "[";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(v[i]);
  }
  return out + "]";
}

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

FqRowVector StandardForm::row_in_coord_order(Index r) const {
  FqRowVector out(cols());
  for (Index coord = 0; coord < cols(); ++coord) {
    out(coord) = g_tilde(r, column_order[static_cast<size_t>(coord)]);
  }
  return out;
}

StandardForm standard_form(const FamilyInstance& instance) {
  const LinearCode& code = instance.code;
  const FieldPtr& f = code.field();
  const Index N = code.n(), K = code.dim();
  const Index k = instance.logical_count();

  StandardForm sf;
  sf.k = k;
  sf.column_order.assign(static_cast<size_t>(N), -1);
  sf.coord_of_col.assign(static_cast<size_t>(N), -1);
  for (Index t = 0; t < k; ++t) {
    sf.column_order[static_cast<size_t>(instance.logical_block[static_cast<size_t>(t)])] = t;
  }
  Index next = k;
  for (Index coord = 0; coord < N; ++coord) {
    if (sf.column_order[static_cast<size_t>(coord)] < 0) {
      sf.column_order[static_cast<size_t>(coord)] = next++;
    }
    sf.coord_of_col[static_cast<size_t>(sf.column_order[static_cast<size_t>(coord)])] = coord;
  }

  FqMatrix m(K, N);
  for (Index coord = 0; coord < N; ++coord) {
    m.col(sf.column_order[static_cast<size_t>(coord)]) = code.gens().col(coord);
  }

  // The logical columns must be independent before pivoting can succeed.
  {
    FqMatrix logical_cols = m.leftCols(k);
    if (rank_of(logical_cols) < k) {
      FqMatrix ker = kernel_basis(logical_cols, f, k);
      std::vector<Index> dependent;
      for (Index j = 0; j < k; ++j) {
        if (!(ker(0, j) == Fq(0))) {
          dependent.push_back(instance.logical_block[static_cast<size_t>(j)]);
        }
      }
      throw Error(ErrorCode::LogicalColumnsDependent,
                  "dependent logical columns " + index_list(dependent));
    }
  }

  const Fq zero(f, 0);
  for (Index t = 0; t < k; ++t) {
    Index pivot = -1;
    for (Index i = t; i < K; ++i) {
      if (!(m(i, t) == zero)) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) {
      // unreachable once the rank check passed; independence of the logical
      // columns survives the preceding row operations
      throw Error(ErrorCode::LogicalColumnsDependent,
                  "no pivot available in logical column " + std::to_string(t));
    }
    if (pivot != t) m.row(pivot).swap(m.row(t));
    Fq inv = m(t, t).inverse();
    for (Index j = 0; j < N; ++j) m(t, j) = m(t, j) * inv;
    for (Index i = 0; i < K; ++i) {
      if (i == t) continue;
      Fq factor = m(i, t);
      if (factor == zero) continue;
      for (Index j = 0; j < N; ++j) m(i, j) = m(i, j) - factor * m(t, j);
    }
  }

  // canonicalize the stabilizer block over the physical columns
  if (K > k) {
    FqMatrix bottom = m.block(k, k, K - k, N - k);
    Rref r = rref_of<Fq>(bottom);
    m.block(k, k, K - k, N - k) = r.mat;
  }

  sf.g_tilde = std::move(m);
  return sf;
}

Index CssCode::logical_position(Index label) const {
  for (size_t i = 0; i < logical_labels.size(); ++i) {
    if (logical_labels[i] == label) return static_cast<Index>(i);
  }
  throw Error(ErrorCode::UnknownLabel, "no logical qudit with label " + std::to_string(label));
}

Index CssCode::physical_position(Index label) const {
  for (size_t i = 0; i < physical_labels.size(); ++i) {
    if (physical_labels[i] == label) return static_cast<Index>(i);
  }
  throw Error(ErrorCode::UnknownLabel, "no physical qudit with label " + std::to_string(label));
}

FqMatrix independence_table(const CssCode& css) {
  const Index K = css.k() + css.stab_rows();
  const Index n = css.n();
  FqMatrix rows(K, n);
  rows.topRows(css.k()) = css.g1;
  rows.bottomRows(css.stab_rows()) = css.g0;
  FqMatrix table = fq_zeros(css.field, K, K);
  for (Index a = 0; a < K; ++a) {
    for (Index b = 0; b < K; ++b) {
      Fq acc(css.field, 0);
      for (Index c = 0; c < n; ++c) acc += rows(a, c) * css.u_phys(c) * rows(b, c);
      table(a, b) = acc;
    }
  }
  return table;
}

CssCode build_css(const StandardForm& sf, const FamilyInstance& instance) {
  const Index K = sf.rows(), N = sf.cols(), k = sf.k;
  const Index n = N - k;

  CssCode css;
  css.field = instance.field();
  css.g1 = sf.g_tilde.block(0, k, k, n);
  css.g0 = sf.g_tilde.block(k, k, K - k, n);
  css.u_log = FqRowVector(k);
  css.u_phys = FqRowVector(n);
  css.logical_labels.resize(static_cast<size_t>(k));
  css.physical_labels.resize(static_cast<size_t>(n));
  for (Index col = 0; col < N; ++col) {
    Index coord = sf.coord_of_col[static_cast<size_t>(col)];
    if (col < k) {
      css.u_log(col) = instance.u.entries()(coord);
      css.logical_labels[static_cast<size_t>(col)] = coord;
    } else {
      css.u_phys(col - k) = instance.u.entries()(coord);
      css.physical_labels[static_cast<size_t>(col - k)] = coord;
    }
  }

  // Independence of the blocks is witnessed by the twisted inner-product
  // table over the punctured coordinates: nonzero exactly on the g1
  // diagonal.
  FqMatrix table = independence_table(css);
  for (Index a = 0; a < K; ++a) {
    for (Index b = 0; b < K; ++b) {
      const bool expect_nonzero = (a == b && a < k);
      if ((table(a, b) == Fq(0)) == expect_nonzero) {
        throw Error(ErrorCode::IndependenceViolated,
                    "inner product of rows " + std::to_string(a) + ", " + std::to_string(b) +
                        " violates the block-independence pattern");
      }
    }
  }
  return css;
}

std::vector<FqRowVector> logical_basis(const CssCode& css, const FqRowVector& x, uint64_t budget) {
  if (x.cols() != css.k()) throw Error(ErrorCode::LengthMismatch, "x must have length k");
  const Field& f = *css.field;
  const uint64_t q = f.q();
  const Index r0 = css.stab_rows();

  uint64_t count = 1;
  for (Index i = 0; i < r0; ++i) {
    if (count > budget / q) {
      throw Error(ErrorCode::BudgetExceeded, "coset enumeration exceeds budget");
    }
    count *= q;
  }

  // coset offset: x . g1
  FqRowVector offset = fq_zero_row(css.field, css.n());
  for (Index t = 0; t < css.k(); ++t) {
    Fq xt(css.field, x(t).value_in(f));
    for (Index j = 0; j < css.n(); ++j) offset(j) += xt * css.g1(t, j);
  }

  std::vector<FqRowVector> out;
  out.reserve(static_cast<size_t>(count));
  std::vector<uint32_t> digits(static_cast<size_t>(r0), 0);
  FqRowVector word = offset;
  out.push_back(word);
  for (uint64_t msg = 1; msg < count; ++msg) {
    for (Index d = 0; d < r0; ++d) {
      auto& dig = digits[static_cast<size_t>(d)];
      const uint32_t next = dig + 1 == q ? 0 : dig + 1;
      const Fq delta(css.field, f.sub(next, dig));
      for (Index j = 0; j < css.n(); ++j) word(j) += delta * css.g0(d, j);
      dig = next;
      if (next != 0) break;
    }
    out.push_back(word);
  }
  return out;
}

namespace {

struct RawMatrix {
  std::vector<std::vector<uint32_t>> rows;
  Index cols = 0;
};

RawMatrix raw_of(const FqMatrix& m, const Field& f) {
  RawMatrix out;
  out.cols = m.cols();
  out.rows.assign(static_cast<size_t>(m.rows()), std::vector<uint32_t>(static_cast<size_t>(m.cols())));
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      out.rows[static_cast<size_t>(i)][static_cast<size_t>(j)] = m(i, j).value_in(f);
    }
  }
  return out;
}

// Minimum weight over words generated by `gens` whose message is *not*
// supported entirely on rows outside [lo, hi): i.e. at least one digit in
// the marked row range must be nonzero.
std::optional<int> message_scan(const RawMatrix& gens, const Field& f, Index marked_lo,
                                Index marked_hi, uint64_t budget) {
  const uint64_t q = f.q();
  const Index K = static_cast<Index>(gens.rows.size());
  const Index n = gens.cols;
  uint64_t count = 1;
  for (Index i = 0; i < K; ++i) {
    if (count > budget / q) return std::nullopt;
    count *= q;
  }
  int best = static_cast<int>(n) + 1;
  std::vector<uint32_t> word(static_cast<size_t>(n), 0);
  std::vector<uint32_t> digits(static_cast<size_t>(K), 0);
  for (uint64_t msg = 1; msg < count; ++msg) {
    for (Index d = 0; d < K; ++d) {
      const auto& row = gens.rows[static_cast<size_t>(d)];
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
    bool marked = false;
    for (Index d = marked_lo; d < marked_hi && !marked; ++d) {
      marked = digits[static_cast<size_t>(d)] != 0;
    }
    if (!marked) continue;
    int w = 0;
    for (Index j = 0; j < n; ++j) w += word[static_cast<size_t>(j)] != 0;
    if (w < best) {
      best = w;
      if (best == 1) return best;
    }
  }
  return best <= static_cast<int>(n) ? std::optional<int>(best) : std::nullopt;
}

// Minimum weight over sparse vectors v with inside(v)=0 and outside(v)!=0,
// climbing supports by weight. `inside` and `outside` are parity matrices.
std::optional<int> weight_ladder(const RawMatrix& inside, const RawMatrix& outside, const Field& f,
                                 Index n, uint64_t budget) {
  const uint64_t q = f.q();
  uint64_t used = 0;
  std::vector<uint32_t> vals;
  for (Index w = 1; w <= n; ++w) {
    std::vector<Index> supp(static_cast<size_t>(w));
    for (Index i = 0; i < w; ++i) supp[static_cast<size_t>(i)] = i;
    do {
      uint64_t patterns = 1;
      for (Index i = 0; i < w; ++i) patterns *= q - 1;
      for (uint64_t pat = 0; pat < patterns; ++pat) {
        if (++used > budget) return std::nullopt;
        vals.assign(static_cast<size_t>(w), 0);
        uint64_t rest = pat;
        for (Index i = 0; i < w; ++i) {
          vals[static_cast<size_t>(i)] = static_cast<uint32_t>(rest % (q - 1)) + 1;
          rest /= q - 1;
        }
        bool in_kernel = true;
        for (const auto& row : inside.rows) {
          uint32_t acc = 0;
          for (Index i = 0; i < w; ++i) {
            acc = f.add(acc, f.mul(row[static_cast<size_t>(supp[static_cast<size_t>(i)])],
                                   vals[static_cast<size_t>(i)]));
          }
          if (acc != 0) {
            in_kernel = false;
            break;
          }
        }
        if (!in_kernel) continue;
        bool outside_hit = false;
        for (const auto& row : outside.rows) {
          uint32_t acc = 0;
          for (Index i = 0; i < w; ++i) {
            acc = f.add(acc, f.mul(row[static_cast<size_t>(supp[static_cast<size_t>(i)])],
                                   vals[static_cast<size_t>(i)]));
          }
          if (acc != 0) {
            outside_hit = true;
            break;
          }
        }
        if (outside_hit) return static_cast<int>(w);
      }
    } while (next_combination(supp, n));
  }
  return std::nullopt;
}

}  // namespace

CssDistance css_distance(const CssCode& css, uint64_t budget) {
  if (css.k() == 0) {
    throw Error(ErrorCode::NoLogicalQudits, "rowspan(g0) already spans the full code");
  }
  const Field& f = *css.field;
  const Index n = css.n();

  CssDistance out;

  // X side: words of rowspan([g1; g0]) whose g1-part is nonzero. By block
  // independence the g1 message digits decide coset membership directly.
  {
    FqMatrix stacked(css.k() + css.stab_rows(), n);
    stacked.topRows(css.k()) = css.g1;
    stacked.bottomRows(css.stab_rows()) = css.g0;
    RawMatrix gens = raw_of(stacked, f);
    out.dx = message_scan(gens, f, 0, css.k(), budget);
    if (!out.dx.has_value()) {
      // v in C1 iff Hv = 0 with H the dual basis of C1; v outside
      // rowspan(g0) iff H0 v != 0 with H0 the dual basis of g0
      FqMatrix h = kernel_basis(stacked, css.field, n);
      FqMatrix h0 = kernel_basis(css.g0, css.field, n);
      out.dx = weight_ladder(raw_of(h, f), raw_of(h0, f), f, n, budget);
    }
  }

  // Z side: words with g0 v = 0 and g1 v != 0.
  {
    FqMatrix c0_basis = kernel_basis(css.g0, css.field, n);
    RawMatrix gens = raw_of(c0_basis, f);
    RawMatrix g1raw = raw_of(css.g1, f);
    const uint64_t q = f.q();
    uint64_t count = 1;
    bool fits = true;
    for (Index i = 0; i < c0_basis.rows(); ++i) {
      if (count > budget / q) {
        fits = false;
        break;
      }
      count *= q;
    }
    if (fits) {
      int best = static_cast<int>(n) + 1;
      std::vector<uint32_t> word(static_cast<size_t>(n), 0);
      std::vector<uint32_t> digits(static_cast<size_t>(c0_basis.rows()), 0);
      for (uint64_t msg = 1; msg < count; ++msg) {
        for (Index d = 0; d < c0_basis.rows(); ++d) {
          const auto& row = gens.rows[static_cast<size_t>(d)];
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
        if (w >= best) continue;
        bool logical = false;
        for (const auto& row : g1raw.rows) {
          uint32_t acc = 0;
          for (Index j = 0; j < n; ++j) {
            acc = f.add(acc, f.mul(row[static_cast<size_t>(j)], word[static_cast<size_t>(j)]));
          }
          if (acc != 0) {
            logical = true;
            break;
          }
        }
        if (!logical) continue;
        best = w;
        if (best == 1) break;
      }
      out.dz = best <= static_cast<int>(n) ? std::optional<int>(best) : std::nullopt;
    } else {
      out.dz = weight_ladder(raw_of(css.g0, f), g1raw, f, n, budget);
    }
  }

  if (out.dx.has_value() && out.dz.has_value()) {
    out.d = std::min(*out.dx, *out.dz);
  }
  return out;
}

}  // namespace qmcz
