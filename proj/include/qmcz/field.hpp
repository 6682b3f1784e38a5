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
#include <memory>
#include <optional>
#include <ostream>
#include <vector>

#include "qmcz/errors.hpp"

namespace qmcz {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// Exact arithmetic in GF(p^e), q = p^e <= 2^16.
///
/// Elements are canonical integers in [0, q) whose base-p digits are the
/// polynomial coefficients over GF(p), least significant digit = constant
/// term. Multiplication goes through discrete-log tables built once at
/// construction; the tables are an implementation detail, never part of a
/// file format.
class Field {
 public:
  /// Builds GF(p^e). When no modulus is given, picks the monic irreducible
  /// x^e + c(x) whose non-leading coefficient vector c, read as a base-p
  /// integer, is smallest (x^4+x+1 for GF(16), x^2+1 for GF(9), ...), so
  /// identical parameters always give the identical field.
  static FieldPtr create(uint32_t p, uint32_t e,
                         const std::optional<std::vector<uint32_t>>& modulus = std::nullopt);

  uint32_t p() const { return p_; }
  uint32_t e() const { return e_; }
  uint32_t q() const { return q_; }
  /// Monic degree-e modulus, little-endian, length e+1.
  const std::vector<uint32_t>& modulus() const { return modulus_; }

  // Raw-value arithmetic; all inputs and outputs live in [0, q).
  uint32_t add(uint32_t a, uint32_t b) const;
  uint32_t sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }
  uint32_t mul(uint32_t a, uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  uint32_t div(uint32_t a, uint32_t b) const {
    if (b == 0) throw Error(ErrorCode::DivisionByZero, "division by zero field element");
    return mul(a, inv_[b]);
  }
  uint32_t neg(uint32_t a) const { return neg_[a]; }
  uint32_t inv(uint32_t a) const {
    if (a == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
    return inv_[a];
  }
  uint32_t pow(uint32_t a, uint64_t n) const;
  /// a^(p^j).
  uint32_t frobenius(uint32_t a, uint32_t j) const;
  /// Trace into the prime subfield: a + a^p + ... + a^(p^(e-1)). The result
  /// is a canonical value < p.
  uint32_t trace(uint32_t a) const { return trace_[a]; }

  /// All q elements in canonical order (0, 1, 2, ...).
  std::vector<uint32_t> enumerate_elements() const;

  /// Structural identity: same p, e, and modulus. Elements of two fields
  /// created from equal parameters interoperate freely.
  bool same_as(const Field& other) const { return key_ == other.key_; }
  uint64_t key() const { return key_; }

 private:
  Field() = default;

  uint32_t p_ = 0, e_ = 0, q_ = 0;
  std::vector<uint32_t> modulus_;
  uint64_t key_ = 0;
  std::vector<uint32_t> exp_;    // length 2(q-1); exp_[i] = g^i
  std::vector<uint32_t> log_;    // log_[a] for a != 0
  std::vector<uint32_t> inv_;
  std::vector<uint32_t> neg_;
  std::vector<uint32_t> trace_;
  std::vector<uint32_t> add_;    // full table when q is small, else empty
};

/// A field element for use as an Eigen scalar. Carries its field by pointer;
/// the owning FieldPtr must outlive the element (codes and instances hold
/// one). Default-constructed and integer-constructed values are unbound
/// constants: they adopt the field of the first bound operand they meet and
/// embed as n * 1 (i.e. n mod p). Eigen's internal Scalar(0)/Scalar(1)
/// temporaries are exactly such constants.
class Fq {
 public:
  Fq() : field_(nullptr), raw_(0) {}
  Fq(long long n) : field_(nullptr), raw_(n) {}  // NOLINT: implicit by design
  Fq(const Field* f, uint32_t v) : field_(f), raw_(v) {}
  Fq(const FieldPtr& f, uint32_t v) : field_(f.get()), raw_(v) {}

  bool bound() const { return field_ != nullptr; }
  const Field* field() const { return field_; }

  /// Canonical value in the given field; embeds unbound constants,
  /// rejects elements of a structurally different field.
  uint32_t value_in(const Field& f) const {
    if (field_ != nullptr) {
      if (field_ != &f && !field_->same_as(f)) {
        throw Error(ErrorCode::SpecMismatch, "element belongs to a different field");
      }
      return static_cast<uint32_t>(raw_);
    }
    long long p = static_cast<long long>(f.p());
    long long r = raw_ % p;
    return static_cast<uint32_t>(r < 0 ? r + p : r);
  }

  bool is_zero() const { return raw_ == 0; }

  friend Fq operator+(const Fq& a, const Fq& b) {
    const Field* f = join(a, b);
    if (f == nullptr) return Fq(a.raw_ + b.raw_);
    return Fq(f, f->add(a.value_in(*f), b.value_in(*f)));
  }
  friend Fq operator-(const Fq& a, const Fq& b) {
    const Field* f = join(a, b);
    if (f == nullptr) return Fq(a.raw_ - b.raw_);
    return Fq(f, f->sub(a.value_in(*f), b.value_in(*f)));
  }
  friend Fq operator*(const Fq& a, const Fq& b) {
    const Field* f = join(a, b);
    if (f == nullptr) return Fq(a.raw_ * b.raw_);
    return Fq(f, f->mul(a.value_in(*f), b.value_in(*f)));
  }
  friend Fq operator/(const Fq& a, const Fq& b) {
    const Field* f = join(a, b);
    if (f == nullptr) throw Error(ErrorCode::SpecMismatch, "division of unbound constants");
    return Fq(f, f->div(a.value_in(*f), b.value_in(*f)));
  }
  Fq operator-() const {
    if (field_ == nullptr) return Fq(-raw_);
    return Fq(field_, field_->neg(static_cast<uint32_t>(raw_)));
  }
  Fq& operator+=(const Fq& o) { return *this = *this + o; }
  Fq& operator-=(const Fq& o) { return *this = *this - o; }
  Fq& operator*=(const Fq& o) { return *this = *this * o; }
  Fq& operator/=(const Fq& o) { return *this = *this / o; }

  friend bool operator==(const Fq& a, const Fq& b) {
    const Field* f = join(a, b);
    if (f == nullptr) return a.raw_ == b.raw_;
    return a.value_in(*f) == b.value_in(*f);
  }
  friend bool operator!=(const Fq& a, const Fq& b) { return !(a == b); }

  Fq inverse() const {
    if (field_ == nullptr) throw Error(ErrorCode::SpecMismatch, "inverse of unbound constant");
    return Fq(field_, field_->inv(static_cast<uint32_t>(raw_)));
  }
  Fq frobenius(uint32_t j) const {
    if (field_ == nullptr) throw Error(ErrorCode::SpecMismatch, "frobenius of unbound constant");
    return Fq(field_, field_->frobenius(static_cast<uint32_t>(raw_), j));
  }
  Fq trace() const {
    if (field_ == nullptr) throw Error(ErrorCode::SpecMismatch, "trace of unbound constant");
    return Fq(field_, field_->trace(static_cast<uint32_t>(raw_)));
  }

  friend std::ostream& operator<<(std::ostream& os, const Fq& x) { return os << x.raw_; }

 private:
  static const Field* join(const Fq& a, const Fq& b) {
    if (a.field_ != nullptr && b.field_ != nullptr) {
      if (a.field_ != b.field_ && !a.field_->same_as(*b.field_)) {
        throw Error(ErrorCode::SpecMismatch, "mixed-field arithmetic");
      }
      return a.field_;
    }
    return a.field_ != nullptr ? a.field_ : b.field_;
  }

  const Field* field_;
  long long raw_;
};

inline Fq make_elem(const FieldPtr& f, uint32_t v) { return Fq(f, v); }

}  // namespace qmcz
