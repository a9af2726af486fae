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

#include "addpoly/ppoly.hpp"

#include <algorithm>

#include "addpoly/error.hpp"

namespace addpoly {

Additive Additive::monomial(const Laurent& c, int exponent_index) {
  Additive a(c.field());
  a.add_term(exponent_index, c);
  return a;
}

void Additive::add_term(int j, const Laurent& c) {
  auto it = terms_.find(j);
  if (it == terms_.end()) {
    if (!c.is_exact_zero()) terms_.emplace(j, c);
    return;
  }
  it->second += c;
  if (it->second.is_exact_zero()) terms_.erase(it);
}

Laurent Additive::coefficient(int j) const {
  auto it = terms_.find(j);
  return it == terms_.end() ? Laurent(field_) : it->second;
}

Laurent Additive::evaluate(const Laurent& y) const {
  Laurent sum(field_);
  for (const auto& [j, c] : terms_) sum += c * y.frobenius(j);
  return sum;
}

Laurent Additive::evaluate_monomial(Fq c, int64_t h) const {
  Laurent sum(field_);
  if (c.v == 0) return sum;
  for (const auto& [j, coeff] : terms_) {
    const int64_t pj = ipow(field_->p(), j);
    sum += coeff.scaled(field_->frobenius(c, j)).shifted(h * pj);
  }
  return sum;
}

Additive Additive::compose_monomial(const Laurent& c, int h) const {
  Additive out(field_);
  for (const auto& [j, coeff] : terms_) {
    out.add_term(j + h, coeff * c.frobenius(j));
  }
  return out;
}

Additive Additive::operator-() const {
  Additive out(field_);
  for (const auto& [j, c] : terms_) out.terms_.emplace(j, -c);
  return out;
}

Additive operator+(const Additive& a, const Additive& b) {
  Additive out = a;
  for (const auto& [j, c] : b.terms_) out.add_term(j, c);
  return out;
}

Additive operator-(const Additive& a, const Additive& b) { return a + (-b); }

PPoly::PPoly(FieldPtr field, std::vector<Additive> parts, bool allow_inexact)
    : field_(std::move(field)), parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i].is_zero()) {
      throw Error(ErrorKind::kUnknownVariableGap,
                  "variable T" + std::to_string(i + 1) + " has no terms");
    }
    if (!allow_inexact) {
      for (const auto& [j, c] : parts_[i].terms()) {
        if (!c.exact()) {
          throw Error(ErrorKind::kInexactCoefficient,
                      "coefficients must be exact Laurent polynomials");
        }
      }
    }
  }
}

bool PPoly::exact() const {
  for (const Additive& f : parts_) {
    for (const auto& [j, c] : f.terms()) {
      if (!c.exact()) return false;
    }
  }
  return true;
}

int PPoly::max_top_index() const {
  int m = 0;
  for (const Additive& f : parts_) m = std::max(m, f.top_index());
  return m;
}

namespace {

std::string coefficient_prefix(const Laurent& c) {
  const Field& f = *c.field();
  if (c.is_monomial() && c.valuation() == 0 && c.leading() == f.one()) {
    return "";
  }
  if (c.is_monomial()) return c.to_string() + "*";
  return "(" + c.to_string() + ")*";
}

}  // namespace

std::string PPoly::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    const auto& terms = parts_[i].terms();
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
      if (!out.empty()) out += " + ";
      out += coefficient_prefix(it->second);
      out += "T" + std::to_string(i + 1);
      if (it->first > 0) {
        out += "^" + std::to_string(ipow(field_->p(), it->first));
      }
    }
  }
  return out.empty() ? "0" : out;
}

bool operator==(const PPoly& a, const PPoly& b) {
  return *a.field_ == *b.field_ && a.parts_.size() == b.parts_.size() &&
         std::equal(a.parts_.begin(), a.parts_.end(), b.parts_.begin(),
                    [](const Additive& x, const Additive& y) {
                      return x.terms() == y.terms();
                    });
}

Laurent evaluate(const PPoly& p, std::span<const Laurent> x) {
  if (x.size() != p.arity()) {
    throw Error(ErrorKind::kArityMismatch,
                "expected " + std::to_string(p.arity()) + " arguments, got " +
                    std::to_string(x.size()));
  }
  Laurent sum(p.field());
  for (std::size_t i = 0; i < x.size(); ++i) sum += p.part(i).evaluate(x[i]);
  return sum;
}

PrincipalPart principal_part(const PPoly& p) {
  PrincipalPart out;
  for (std::size_t i = 0; i < p.arity(); ++i) {
    out.push_back({i, p.part(i).top_index(), p.part(i).top()});
  }
  return out;
}

PPoly principal_polynomial(const PPoly& p) {
  std::vector<Additive> parts;
  for (const PrincipalEntry& e : principal_part(p)) {
    parts.push_back(Additive::monomial(e.coeff, e.m));
  }
  return PPoly(p.field(), std::move(parts), /*allow_inexact=*/true);
}

SeparabilityData separability_data(const PPoly& p) {
  SeparabilityData out;
  for (std::size_t i = 0; i < p.arity(); ++i) {
    const Laurent a = p.part(i).coefficient(0);
    if (!a.is_exact_zero()) out.linear_coeffs.emplace(i, a);
  }
  out.separable = !out.linear_coeffs.empty();
  return out;
}

Additive substitute_monomial(const Additive& f, int64_t j, int h) {
  return f.compose_monomial(Laurent::t_power(f.field(), j), h);
}

std::vector<Laurent> LinearChange::forward(std::span<const Laurent> t) const {
  if (t.size() != order.size()) {
    throw Error(ErrorKind::kArityMismatch, "forward: wrong argument count");
  }
  const FieldPtr& f = q.field();
  std::vector<Laurent> x(order.size(), Laurent(f));
  for (std::size_t i = 0; i < t.size(); ++i) x[0] += a[i] * t[i];
  for (std::size_t k = 1; k < order.size(); ++k) x[k] = t[order[k]];
  return x;
}

std::vector<Laurent> LinearChange::backward(std::span<const Laurent> x) const {
  if (x.size() != order.size()) {
    throw Error(ErrorKind::kArityMismatch, "backward: wrong argument count");
  }
  const FieldPtr& f = q.field();
  std::vector<Laurent> t(order.size(), Laurent(f));
  Laurent rest = x[0];
  for (std::size_t k = 1; k < order.size(); ++k) {
    t[order[k]] = x[k];
    rest -= a[order[k]] * x[k];
  }
  t[pivot] = pivot_inverse * rest;
  return t;
}

LinearChange linear_change(const PPoly& p, std::span<const Laurent> a,
                           std::size_t i0) {
  const std::size_t r = p.arity();
  if (a.size() != r) {
    throw Error(ErrorKind::kArityMismatch, "linear_change: need one a_i per variable");
  }
  if (i0 >= r) throw Error(ErrorKind::kInvalidArgument, "pivot out of range");
  const int m = p.top_index(0);
  for (std::size_t i = 0; i < r; ++i) {
    if (p.top_index(i) != m) {
      throw Error(ErrorKind::kNotEqualDegree,
                  "linear_change needs all variables at the same top degree");
    }
  }
  if (a[i0].is_zero()) {
    throw Error(ErrorKind::kZeroPivot, "linear coefficient of the pivot is zero");
  }
  const FieldPtr& f = p.field();
  const Laurent u = a[i0].inverse();

  std::vector<std::size_t> order{i0};
  for (std::size_t i = 0; i < r; ++i) {
    if (i != i0) order.push_back(i);
  }
  // T_{i0} = u (X_1 - sum_{i != i0} a_i X_i)
  std::vector<Additive> parts;
  Additive first = p.part(i0).compose_monomial(u, 0);
  first.erase_term(0);
  first.add_term(0, Laurent::constant(f, f->one()));
  parts.push_back(std::move(first));
  for (std::size_t k = 1; k < r; ++k) {
    const std::size_t i = order[k];
    Additive g = p.part(i) - p.part(i0).compose_monomial(u * a[i], 0);
    g.erase_term(0);
    if (g.is_zero()) {
      throw Error(ErrorKind::kNotEqualDegree,
                  "variable collapsed during the change of variables");
    }
    parts.push_back(std::move(g));
  }
  return LinearChange{PPoly(f, std::move(parts), /*allow_inexact=*/true), i0,
                      std::move(order),
                      std::vector<Laurent>(a.begin(), a.end()), u};
}

std::optional<std::size_t> pivot_by_valuation(const PPoly& p) {
  std::optional<std::size_t> best;
  int64_t best_key = 0;
  for (std::size_t i = 0; i < p.arity(); ++i) {
    const Laurent a = p.part(i).coefficient(0);
    if (a.is_exact_zero()) continue;
    const int m = p.top_index(i);
    const int64_t key =
        p.part(i).top().valuation() - ipow(p.field()->p(), m) * a.valuation();
    if (!best || key > best_key) {
      best = i;
      best_key = key;
    }
  }
  return best;
}

}  // namespace addpoly
