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

#include "qmcz/field.hpp"

#include <algorithm>
#include <numeric>

namespace qmcz {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonPrime: return "NonPrime";
    case ErrorCode::ReducibleModulus: return "ReducibleModulus";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::SpecMismatch: return "SpecMismatch";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::DegenerateCode: return "DegenerateCode";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::AllOnesMissing: return "AllOnesMissing";
    case ErrorCode::NotAutomorphism: return "NotAutomorphism";
    case ErrorCode::MultiplicationTooWeak: return "MultiplicationTooWeak";
    case ErrorCode::DualDistanceTooSmall: return "DualDistanceTooSmall";
    case ErrorCode::BlockNotCoset: return "BlockNotCoset";
    case ErrorCode::NonRegular: return "NonRegular";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::LogicalColumnsDependent: return "LogicalColumnsDependent";
    case ErrorCode::IndependenceViolated: return "IndependenceViolated";
    case ErrorCode::NoLogicalQudits: return "NoLogicalQudits";
    case ErrorCode::UnknownLabel: return "UnknownLabel";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::BlockMismatch: return "BlockMismatch";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "UnknownError";
}

namespace {

constexpr uint32_t kMaxQ = 1u << 16;
constexpr uint32_t kAddTableLimit = 512;  // full add table up to this q

bool is_prime(uint32_t n) {
  if (n < 2) return false;
  for (uint32_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// Polynomials over GF(p) as little-endian coefficient vectors.
std::vector<uint32_t> poly_rem(std::vector<uint32_t> a, const std::vector<uint32_t>& b, uint32_t p) {
  // b monic
  const size_t db = b.size() - 1;
  while (a.size() > db) {
    uint32_t lead = a.back();
    if (lead != 0) {
      size_t shift = a.size() - 1 - db;
      for (size_t i = 0; i <= db; ++i) {
        uint64_t t = static_cast<uint64_t>(lead) * b[i] % p;
        a[shift + i] = static_cast<uint32_t>((a[shift + i] + p - t) % p);
      }
    }
    a.pop_back();
  }
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

std::vector<uint32_t> value_digits(uint64_t v, uint32_t p, uint32_t len) {
  std::vector<uint32_t> d(len, 0);
  for (uint32_t i = 0; i < len; ++i) {
    d[i] = static_cast<uint32_t>(v % p);
    v /= p;
  }
  return d;
}

bool poly_is_irreducible(const std::vector<uint32_t>& m, uint32_t p) {
  const size_t e = m.size() - 1;
  if (e == 1) return true;
  // trial division by every monic polynomial of degree 1..e/2
  for (size_t d = 1; 2 * d <= e; ++d) {
    uint64_t count = 1;
    for (size_t i = 0; i < d; ++i) count *= p;
    for (uint64_t v = 0; v < count; ++v) {
      std::vector<uint32_t> div = value_digits(v, p, static_cast<uint32_t>(d));
      div.push_back(1);
      if (poly_rem(m, div, p).empty()) return false;
    }
  }
  return true;
}

std::vector<uint32_t> prime_factors(uint32_t n) {
  std::vector<uint32_t> out;
  for (uint32_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

FieldPtr Field::create(uint32_t p, uint32_t e,
                       const std::optional<std::vector<uint32_t>>& modulus) {
  if (!is_prime(p)) {
    throw Error(ErrorCode::NonPrime, "p = " + std::to_string(p) + " is not prime");
  }
  if (e < 1) throw Error(ErrorCode::DegreeMismatch, "extension degree must be >= 1");

  uint64_t q64 = 1;
  for (uint32_t i = 0; i < e; ++i) {
    q64 *= p;
    if (q64 > kMaxQ) {
      throw Error(ErrorCode::InvalidArgument, "field size p^e exceeds 2^16");
    }
  }
  const uint32_t q = static_cast<uint32_t>(q64);

  std::vector<uint32_t> mod;
  if (modulus.has_value()) {
    mod = *modulus;
    if (mod.size() != static_cast<size_t>(e) + 1) {
      throw Error(ErrorCode::DegreeMismatch,
                  "modulus must have degree e = " + std::to_string(e));
    }
    for (auto& c : mod) c %= p;
    if (mod.back() != 1) throw Error(ErrorCode::DegreeMismatch, "modulus must be monic");
    if (!poly_is_irreducible(mod, p)) {
      throw Error(ErrorCode::ReducibleModulus, "modulus is reducible over GF(p)");
    }
  } else {
    // x^e + c(x), smallest c in base-p integer encoding
    for (uint64_t v = 0;; ++v) {
      mod = value_digits(v, p, e);
      mod.push_back(1);
      if (poly_is_irreducible(mod, p)) break;
    }
  }

  auto field = std::shared_ptr<Field>(new Field());
  field->p_ = p;
  field->e_ = e;
  field->q_ = q;
  field->modulus_ = mod;

  // structural key: p, e, and the modulus packed in base p (fits 64 bits
  // since p^(e+1) <= q * p <= 2^32)
  uint64_t mval = 0;
  for (size_t i = mod.size(); i-- > 0;) mval = mval * p + mod[i];
  field->key_ = (static_cast<uint64_t>(p) << 40) ^ (static_cast<uint64_t>(e) << 33) ^ mval;

  // Bootstrap multiplication by polynomial arithmetic, then freeze tables.
  auto slow_mul = [&](uint32_t a, uint32_t b) -> uint32_t {
    std::vector<uint32_t> da = value_digits(a, p, e), db = value_digits(b, p, e);
    std::vector<uint32_t> prod(2 * e - 1, 0);
    for (uint32_t i = 0; i < e; ++i) {
      if (da[i] == 0) continue;
      for (uint32_t j = 0; j < e; ++j) {
        prod[i + j] = static_cast<uint32_t>((prod[i + j] + static_cast<uint64_t>(da[i]) * db[j]) % p);
      }
    }
    std::vector<uint32_t> r = poly_rem(prod, mod, p);
    uint64_t v = 0;
    for (size_t i = r.size(); i-- > 0;) v = v * p + r[i];
    return static_cast<uint32_t>(v);
  };
  auto slow_pow = [&](uint32_t a, uint64_t n) -> uint32_t {
    uint32_t r = 1;
    while (n > 0) {
      if (n & 1) r = slow_mul(r, a);
      a = slow_mul(a, a);
      n >>= 1;
    }
    return r;
  };

  // smallest multiplicative generator
  uint32_t gen = 1;
  if (q > 2) {
    const auto factors = prime_factors(q - 1);
    for (uint32_t g = 2; g < q; ++g) {
      bool ok = true;
      for (uint32_t r : factors) {
        if (slow_pow(g, (q - 1) / r) == 1) {
          ok = false;
          break;
        }
      }
      if (ok) {
        gen = g;
        break;
      }
    }
  }

  field->exp_.assign(size_t{2} * (q - 1), 0);
  field->log_.assign(q, 0);
  uint32_t acc = 1;
  for (uint32_t i = 0; i < q - 1; ++i) {
    field->exp_[i] = acc;
    field->exp_[i + (q - 1)] = acc;
    field->log_[acc] = i;
    acc = slow_mul(acc, gen);
  }

  field->neg_.assign(q, 0);
  for (uint32_t a = 0; a < q; ++a) {
    auto d = value_digits(a, p, e);
    uint64_t v = 0;
    for (size_t i = d.size(); i-- > 0;) v = v * p + (p - d[i]) % p;
    field->neg_[a] = static_cast<uint32_t>(v);
  }

  field->inv_.assign(q, 0);
  for (uint32_t a = 1; a < q; ++a) {
    field->inv_[a] = field->exp_[(q - 1 - field->log_[a]) % (q - 1)];
  }

  if (q <= kAddTableLimit) {
    field->add_.assign(static_cast<size_t>(q) * q, 0);
    for (uint32_t a = 0; a < q; ++a) {
      auto da = value_digits(a, p, e);
      for (uint32_t b = 0; b < q; ++b) {
        auto db = value_digits(b, p, e);
        uint64_t v = 0;
        for (size_t i = e; i-- > 0;) v = v * p + (da[i] + db[i]) % p;
        field->add_[static_cast<size_t>(a) * q + b] = static_cast<uint32_t>(v);
      }
    }
  }

  field->trace_.assign(q, 0);
  for (uint32_t a = 0; a < q; ++a) {
    uint32_t t = a, s = a;
    for (uint32_t j = 1; j < e; ++j) {
      t = slow_pow(t, p);
      s = field->add(s, t);
    }
    field->trace_[a] = s;  // lies in the prime subfield, value < p
  }

  return field;
}

uint32_t Field::add(uint32_t a, uint32_t b) const {
  if (!add_.empty()) return add_[static_cast<size_t>(a) * q_ + b];
  if (p_ == 2) return a ^ b;
  uint32_t out = 0, mul = 1;
  for (uint32_t i = 0; i < e_; ++i) {
    out += (a % p_ + b % p_) % p_ * mul;
    a /= p_;
    b /= p_;
    mul *= p_;
  }
  return out;
}

uint32_t Field::pow(uint32_t a, uint64_t n) const {
  if (a == 0) return n == 0 ? 1 : 0;
  if (q_ == 2) return 1;  // a must be 1
  uint64_t l = static_cast<uint64_t>(log_[a]) * (n % (q_ - 1)) % (q_ - 1);
  return exp_[l];
}

uint32_t Field::frobenius(uint32_t a, uint32_t j) const {
  if (a == 0 || q_ == 2) return a;
  uint64_t n = 1;
  for (uint32_t i = 0; i < j; ++i) n = n * p_ % (q_ - 1);
  return exp_[static_cast<uint64_t>(log_[a]) * n % (q_ - 1)];
}

std::vector<uint32_t> Field::enumerate_elements() const {
  std::vector<uint32_t> out(q_);
  std::iota(out.begin(), out.end(), 0u);
  return out;
}

}  // namespace qmcz
