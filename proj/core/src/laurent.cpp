// Copyright 2026 The addpoly Authors.
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

#include "addpoly/laurent.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "addpoly/error.hpp"

namespace addpoly {

int64_t ipow(int64_t base, int exponent) {
  int64_t r = 1;
  for (int i = 0; i < exponent; ++i) r *= base;
  return r;
}

namespace {

int64_t floor_div(int64_t a, int64_t b) {
  int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

int64_t ceil_div(int64_t a, int64_t b) { return -floor_div(-a, b); }

int64_t sat_add(int64_t a, int64_t b) {
  const int64_t r = a + b;
  return r >= Laurent::kInfinity ? Laurent::kInfinity : r;
}

void check_same_field(const Laurent& a, const Laurent& b) {
  if (a.field() != b.field() && !(*a.field() == *b.field())) {
    throw Error(ErrorKind::kInvalidArgument,
                "Laurent operands over different fields");
  }
}

PrecisionExhausted exhausted(const std::string& what, int64_t precision) {
  const int64_t suggestion =
      std::max<int64_t>(2 * Laurent::kDefaultPrecision,
                        precision == Laurent::kInfinity ? 0 : 2 * precision);
  return PrecisionExhausted(what, suggestion);
}

}  // namespace

Laurent::Laurent(FieldPtr field) : field_(std::move(field)) {}

Laurent::Laurent(FieldPtr field, int64_t start, std::vector<Fq> coeffs,
                 int64_t precision)
    : field_(std::move(field)),
      start_(start),
      coeffs_(std::move(coeffs)),
      precision_(precision >= kInfinity ? kInfinity : precision) {
  normalize();
}

Laurent Laurent::zero(FieldPtr field, int64_t precision) {
  return Laurent(std::move(field), 0, {}, precision);
}

Laurent Laurent::constant(FieldPtr field, Fq c) {
  return Laurent(std::move(field), 0, {c});
}

Laurent Laurent::monomial(FieldPtr field, Fq c, int64_t exponent) {
  return Laurent(std::move(field), exponent, {c});
}

Laurent Laurent::t_power(FieldPtr field, int64_t exponent) {
  const Fq one = field->one();
  return Laurent(std::move(field), exponent, {one});
}

void Laurent::normalize() {
  if (!exact() && !coeffs_.empty()) {
    const int64_t keep = precision_ - start_;
    if (keep <= 0) {
      coeffs_.clear();
    } else if (static_cast<int64_t>(coeffs_.size()) > keep) {
      coeffs_.resize(static_cast<std::size_t>(keep));
    }
  }
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead].v == 0) ++lead;
  if (lead == coeffs_.size()) {
    coeffs_.clear();
    start_ = precision_;
    return;
  }
  if (lead > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
    start_ += static_cast<int64_t>(lead);
  }
  while (coeffs_.back().v == 0) coeffs_.pop_back();
}

int64_t Laurent::valuation() const {
  if (!coeffs_.empty()) return start_;
  if (exact()) return kInfinity;
  throw exhausted("valuation of a value that is zero to precision O(t^" +
                      std::to_string(precision_) + ")",
                  precision_);
}

int64_t Laurent::degree() const {
  if (coeffs_.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "degree of zero");
  }
  return start_ + static_cast<int64_t>(coeffs_.size()) - 1;
}

Fq Laurent::leading() const {
  if (coeffs_.empty()) {
    if (!exact()) throw exhausted("leading coefficient unknown", precision_);
    throw Error(ErrorKind::kInvalidArgument, "leading coefficient of zero");
  }
  return coeffs_.front();
}

Fq Laurent::coeff(int64_t exponent) const {
  if (coeffs_.empty() || exponent < start_) return field_->zero();
  const int64_t i = exponent - start_;
  if (i >= static_cast<int64_t>(coeffs_.size())) return field_->zero();
  return coeffs_[static_cast<std::size_t>(i)];
}

Laurent Laurent::operator-() const {
  Laurent r = *this;
  for (Fq& c : r.coeffs_) c = field_->neg(c);
  return r;
}

Laurent operator+(const Laurent& a, const Laurent& b) {
  check_same_field(a, b);
  const int64_t prec = std::min(a.precision_, b.precision_);
  if (a.coeffs_.empty() && b.coeffs_.empty()) return Laurent::zero(a.field_, prec);
  if (a.coeffs_.empty()) return Laurent(b.field_, b.start_, b.coeffs_, prec);
  if (b.coeffs_.empty()) return Laurent(a.field_, a.start_, a.coeffs_, prec);
  const int64_t lo = std::min(a.start_, b.start_);
  const int64_t hi =
      std::max(a.start_ + static_cast<int64_t>(a.coeffs_.size()),
               b.start_ + static_cast<int64_t>(b.coeffs_.size()));
  std::vector<Fq> c(static_cast<std::size_t>(hi - lo), a.field_->zero());
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    c[static_cast<std::size_t>(a.start_ - lo) + i] = a.coeffs_[i];
  }
  const Field& f = *a.field_;
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) {
    Fq& slot = c[static_cast<std::size_t>(b.start_ - lo) + i];
    slot = f.add(slot, b.coeffs_[i]);
  }
  return Laurent(a.field_, lo, std::move(c), prec);
}

Laurent operator-(const Laurent& a, const Laurent& b) { return a + (-b); }

Laurent operator*(const Laurent& a, const Laurent& b) {
  check_same_field(a, b);
  if (a.is_exact_zero() || b.is_exact_zero()) return Laurent(a.field_);
  int64_t prec = Laurent::kInfinity;
  if (!a.exact() || !b.exact()) {
    prec = std::min(sat_add(a.start_, b.precision_),
                    sat_add(b.start_, a.precision_));
  }
  if (a.coeffs_.empty() || b.coeffs_.empty()) {
    return Laurent::zero(a.field_, prec);
  }
  const Field& f = *a.field_;
  std::vector<Fq> c(a.coeffs_.size() + b.coeffs_.size() - 1, f.zero());
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].v == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      c[i + j] = f.add(c[i + j], f.mul(a.coeffs_[i], b.coeffs_[j]));
    }
  }
  return Laurent(a.field_, a.start_ + b.start_, std::move(c), prec);
}

Laurent Laurent::scaled(Fq c) const {
  if (c.v == 0) return Laurent(field_);
  Laurent r = *this;
  for (Fq& x : r.coeffs_) x = field_->mul(x, c);
  return r;
}

Laurent Laurent::shifted(int64_t n) const {
  Laurent r = *this;
  if (!r.coeffs_.empty()) r.start_ += n;
  if (!r.exact()) r.precision_ += n;
  if (r.coeffs_.empty()) r.start_ = r.precision_;
  return r;
}

Laurent Laurent::inverse(int64_t relative_precision) const {
  if (coeffs_.empty()) {
    throw Error(ErrorKind::kDivisionByZero,
                exact() ? "inverse of zero"
                        : "inverse of a value that is zero to precision");
  }
  const Field& f = *field_;
  if (is_monomial()) {
    return Laurent::monomial(field_, f.inv(coeffs_[0]), -start_);
  }
  int64_t rel = relative_precision;
  if (!exact()) rel = std::min(rel, precision_ - start_);
  if (rel <= 0) throw exhausted("inverse needs positive precision", precision_);
  const auto n = static_cast<std::size_t>(rel);
  std::vector<Fq> b(n, f.zero());
  const Fq a0_inv = f.inv(coeffs_[0]);
  b[0] = a0_inv;
  for (std::size_t k = 1; k < n; ++k) {
    Fq acc = f.zero();
    const std::size_t top = std::min(k, coeffs_.size() - 1);
    for (std::size_t i = 1; i <= top; ++i) {
      acc = f.add(acc, f.mul(coeffs_[i], b[k - i]));
    }
    b[k] = f.neg(f.mul(a0_inv, acc));
  }
  return Laurent(field_, -start_, std::move(b), -start_ + rel);
}

Laurent Laurent::frobenius(int k) const {
  const int64_t pk = ipow(field_->p(), k);
  Laurent r(field_);
  r.precision_ = exact() ? kInfinity : precision_ * pk;
  if (coeffs_.empty()) {
    r.start_ = r.precision_;
    return r;
  }
  r.start_ = start_ * pk;
  r.coeffs_.assign((coeffs_.size() - 1) * static_cast<std::size_t>(pk) + 1,
                   field_->zero());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    r.coeffs_[i * static_cast<std::size_t>(pk)] = field_->frobenius(coeffs_[i], k);
  }
  return r;
}

Laurent Laurent::root(int k) const {
  const int64_t pk = ipow(field_->p(), k);
  const int64_t prec = exact() ? kInfinity : ceil_div(precision_, pk);
  if (coeffs_.empty()) return Laurent::zero(field_, prec);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const int64_t n = start_ + static_cast<int64_t>(i);
    if (coeffs_[i].v != 0 && ((n % pk) + pk) % pk != 0) {
      throw Error(ErrorKind::kNotAPthPower,
                  "nonzero coefficient at t^" + std::to_string(n) +
                      " is not a p^" + std::to_string(k) + "-th power");
    }
  }
  std::vector<Fq> c((coeffs_.size() - 1) / static_cast<std::size_t>(pk) + 1,
                    field_->zero());
  for (std::size_t i = 0; i < coeffs_.size(); i += static_cast<std::size_t>(pk)) {
    c[i / static_cast<std::size_t>(pk)] = field_->root(coeffs_[i], k);
  }
  return Laurent(field_, floor_div(start_, pk), std::move(c), prec);
}

Laurent Laurent::truncated(int64_t cutoff) const {
  return Laurent(field_, start_, coeffs_, std::min(precision_, cutoff));
}

std::string Laurent::to_string() const {
  std::string out;
  const Field& f = *field_;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].v == 0) continue;
    const int64_t n = start_ + static_cast<int64_t>(i);
    if (!out.empty()) out += " + ";
    const bool unit = coeffs_[i] == f.one() && f.e() == 1;
    if (n == 0) {
      out += f.to_string(coeffs_[i]);
      continue;
    }
    if (!unit) out += f.to_string(coeffs_[i]) + "*";
    out += n == 1 ? "t" : "t^" + std::to_string(n);
  }
  if (!exact()) {
    if (!out.empty()) out += " + ";
    out += "O(t^" + std::to_string(precision_) + ")";
  }
  return out.empty() ? "0" : out;
}

bool operator==(const Laurent& a, const Laurent& b) {
  const bool same_field =
      a.field_ == b.field_ || (a.field_ && b.field_ && *a.field_ == *b.field_);
  return same_field && a.precision_ == b.precision_ && a.coeffs_ == b.coeffs_ &&
         (a.coeffs_.empty() || a.start_ == b.start_);
}

Laurent exact_quotient(const Laurent& a, const Laurent& b,
                       int64_t relative_precision) {
  if (b.is_zero()) {
    throw Error(ErrorKind::kDivisionByZero, "division by zero");
  }
  if (a.is_exact_zero()) return Laurent(a.field());
  if (!a.exact() || !b.exact() || b.is_monomial()) {
    return a * b.inverse(relative_precision);
  }
  // Exact division of Laurent polynomials: the quotient has
  // deg a - deg b + 1 coefficients past its valuation.
  const int64_t len = (a.degree() - a.valuation()) - (b.degree() - b.valuation()) + 1;
  if (len <= 0) {
    throw Error(ErrorKind::kInvalidArgument, "exact_quotient: not divisible");
  }
  Laurent q = (a * b.inverse(len)).truncated(a.valuation() - b.valuation() + len);
  q = Laurent(q.field(), q.valuation_bound(), q.coeffs());
  if (!(q * b == a)) {
    throw Error(ErrorKind::kInvalidArgument, "exact_quotient: not divisible");
  }
  return q;
}

}  // namespace addpoly
