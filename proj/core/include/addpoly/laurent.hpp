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

#ifndef ADDPOLY_LAURENT_HPP_
#define ADDPOLY_LAURENT_HPP_

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "addpoly/field.hpp"

namespace addpoly {

// A truncated Laurent series over F_q: the coefficients of t^n for n in
// [valuation, precision) are known, everything from `precision` on is not.
// Exact values (finite Laurent polynomials with no hidden tail) carry
// precision kInfinity.
//
// Invariants: a nonzero value has a nonzero leading coefficient, and stored
// coefficients never reach the precision. The zero-to-precision value of an
// inexact computation has no stored coefficients and an unknown valuation.
class Laurent {
 public:
  static constexpr int64_t kInfinity = std::numeric_limits<int64_t>::max() / 4;
  static constexpr int64_t kDefaultPrecision = 64;

  explicit Laurent(FieldPtr field);  // exact zero
  Laurent(FieldPtr field, int64_t start, std::vector<Fq> coeffs,
          int64_t precision = kInfinity);

  static Laurent zero(FieldPtr field, int64_t precision = kInfinity);
  static Laurent constant(FieldPtr field, Fq c);
  static Laurent monomial(FieldPtr field, Fq c, int64_t exponent);
  static Laurent t_power(FieldPtr field, int64_t exponent);

  const FieldPtr& field() const { return field_; }

  bool exact() const { return precision_ == kInfinity; }
  int64_t precision() const { return precision_; }
  // True when no known coefficient is nonzero (exact zero or zero to
  // precision).
  bool is_zero() const { return coeffs_.empty(); }
  bool is_exact_zero() const { return coeffs_.empty() && exact(); }
  bool is_monomial() const { return coeffs_.size() == 1 && exact(); }

  // kInfinity for exact zero; throws PrecisionExhausted for an inexact value
  // that is zero to its precision.
  int64_t valuation() const;
  // A lower bound valid even for inexact zeros (the precision, then).
  int64_t valuation_bound() const { return start_; }
  // Highest exponent with a known nonzero coefficient; requires nonzero.
  int64_t degree() const;
  Fq leading() const;
  Fq coeff(int64_t exponent) const;
  const std::vector<Fq>& coeffs() const { return coeffs_; }

  Laurent operator-() const;
  friend Laurent operator+(const Laurent& a, const Laurent& b);
  friend Laurent operator-(const Laurent& a, const Laurent& b);
  friend Laurent operator*(const Laurent& a, const Laurent& b);
  Laurent& operator+=(const Laurent& b) { return *this = *this + b; }
  Laurent& operator-=(const Laurent& b) { return *this = *this - b; }

  Laurent scaled(Fq c) const;
  Laurent shifted(int64_t n) const;  // multiplied by t^n
  // Inverse; exact for monomials, otherwise known to `relative_precision`
  // terms past the valuation (or fewer if the input is less precise).
  Laurent inverse(int64_t relative_precision = kDefaultPrecision) const;
  // a^(p^k) coefficientwise via Frobenius on F_q and t -> t^(p^k).
  Laurent frobenius(int k = 1) const;
  // r with r^(p^k) = *this; throws NotAPthPower when some known nonzero
  // coefficient sits at an exponent not divisible by p^k.
  Laurent root(int k = 1) const;
  // Drops every coefficient at exponent >= cutoff.
  Laurent truncated(int64_t cutoff) const;

  // "c*t^n" terms in ascending order joined by " + ", "O(t^N)" tail when
  // inexact, "0" for exact zero.
  std::string to_string() const;

  friend bool operator==(const Laurent& a, const Laurent& b);

 private:
  void normalize();

  FieldPtr field_;
  int64_t start_ = kInfinity;  // exponent of coeffs_[0]
  std::vector<Fq> coeffs_;
  int64_t precision_ = kInfinity;
};

// Quotient a/b in the Laurent polynomial ring when both are exact and b
// divides a; for inexact operands the product with the series inverse of b.
Laurent exact_quotient(const Laurent& a, const Laurent& b,
                       int64_t relative_precision = Laurent::kDefaultPrecision);

// base^exponent for small nonnegative exponents.
int64_t ipow(int64_t base, int exponent);

}  // namespace addpoly

#endif  // ADDPOLY_LAURENT_HPP_
