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

#ifndef ADDPOLY_PPOLY_HPP_
#define ADDPOLY_PPOLY_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "addpoly/laurent.hpp"

namespace addpoly {

// One-variable additive polynomial sum_j c_j Y^(p^j). Exact zero
// coefficients are never stored.
class Additive {
 public:
  explicit Additive(FieldPtr field) : field_(std::move(field)) {}

  static Additive monomial(const Laurent& c, int exponent_index);

  const FieldPtr& field() const { return field_; }
  const std::map<int, Laurent>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  // Adds c to the coefficient of Y^(p^j).
  void add_term(int j, const Laurent& c);
  // Removes the coefficient of Y^(p^j), known or not.
  void erase_term(int j) { terms_.erase(j); }
  Laurent coefficient(int j) const;

  // Largest / smallest j with a stored coefficient; the polynomial must be
  // nonzero.
  int top_index() const { return terms_.rbegin()->first; }
  int low_index() const { return terms_.begin()->first; }
  const Laurent& top() const { return terms_.rbegin()->second; }

  Laurent evaluate(const Laurent& y) const;
  // Value at c*t^h, computed termwise.
  Laurent evaluate_monomial(Fq c, int64_t h) const;

  // Y -> c * Y^(p^h).
  Additive compose_monomial(const Laurent& c, int h) const;

  Additive operator-() const;
  friend Additive operator+(const Additive& a, const Additive& b);
  friend Additive operator-(const Additive& a, const Additive& b);
  friend bool operator==(const Additive& a, const Additive& b) = default;

 private:
  FieldPtr field_;
  std::map<int, Laurent> terms_;
};

struct PrincipalEntry {
  std::size_t variable;  // 0-based
  int m;                 // top degree is p^m
  Laurent coeff;
};

using PrincipalPart = std::vector<PrincipalEntry>;

struct SeparabilityData {
  bool separable = false;
  std::map<std::size_t, Laurent> linear_coeffs;  // variable -> a_i
};

// Multivariate additive polynomial P(T_1..T_r) = sum_i f_i(T_i). Every
// variable carries a nonzero f_i. Variables are 0-based internally and
// printed 1-based.
class PPoly {
 public:
  // Coefficients must be exact unless allow_inexact is set (transformations
  // that invert a non-monomial coefficient produce series).
  PPoly(FieldPtr field, std::vector<Additive> parts, bool allow_inexact = false);

  const FieldPtr& field() const { return field_; }
  std::size_t arity() const { return parts_.size(); }
  const Additive& part(std::size_t i) const { return parts_[i]; }
  const std::vector<Additive>& parts() const { return parts_; }
  bool exact() const;

  // m_i, the exponent index of the top degree of variable i.
  int top_index(std::size_t i) const { return parts_[i].top_index(); }
  int max_top_index() const;

  // Canonical text form, e.g. "T1^2 + t*T2^2 + T2".
  std::string to_string() const;

  friend bool operator==(const PPoly& a, const PPoly& b);

 private:
  FieldPtr field_;
  std::vector<Additive> parts_;
};

// Throws ArityMismatch when x.size() != arity.
Laurent evaluate(const PPoly& p, std::span<const Laurent> x);

PrincipalPart principal_part(const PPoly& p);

// The polynomial made of the principal part alone.
PPoly principal_polynomial(const PPoly& p);

SeparabilityData separability_data(const PPoly& p);

// g(Y) = f(t^j * Y^(p^h)).
Additive substitute_monomial(const Additive& f, int64_t j, int h);

// Result of X_1 := sum_i a_i T_i (keeping the other variables): the new
// polynomial plus the maps between argument vectors.
struct LinearChange {
  PPoly q;
  std::size_t pivot;                 // i0 in the source
  std::vector<std::size_t> order;    // order[k] = source variable of X_k
  std::vector<Laurent> a;            // linear coefficients of the source
  Laurent pivot_inverse;             // a_{i0}^{-1}

  // X from T.
  std::vector<Laurent> forward(std::span<const Laurent> t) const;
  // T from X.
  std::vector<Laurent> backward(std::span<const Laurent> x) const;
};

// Change of variables making the linear part exactly X_1. All variables
// must share the top degree p^m. Throws NotEqualDegree or ZeroPivot.
LinearChange linear_change(const PPoly& p, std::span<const Laurent> a,
                           std::size_t i0);

// The index chosen by the maximal-valuation rule: among variables with a
// nonzero linear coefficient, maximize v(c_i) - p^m v(a_i). Ties resolve to
// the lowest index.
std::optional<std::size_t> pivot_by_valuation(const PPoly& p);

}  // namespace addpoly

#endif  // ADDPOLY_PPOLY_HPP_
