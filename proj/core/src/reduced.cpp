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

#include <algorithm>
#include <string>

#include "addpoly/imagecalc.hpp"

namespace addpoly::image {

ReducedForm to_reduced_form(const PPoly& p) {
  if (!separability_data(p).separable) {
    throw Error(ErrorKind::kNotSeparable, "the polynomial has no linear term");
  }
  Vanishing van = check_vanishes_nowhere(principal_part(p));
  if (!van.nowhere) throw VanishesSomewhere(std::move(van.witness));

  NormalizedFamily fam = equalize_degrees(p);
  if (static_cast<int64_t>(fam.size()) != fam.degree()) {
    throw Error(ErrorKind::kNotFiniteCase,
                "s = " + std::to_string(fam.size()) + " differs from p^M = " +
                    std::to_string(fam.degree()));
  }
  EchelonResult ech = valuation_echelonize(std::move(fam));
  if (!ech.echelonized()) throw VanishesSomewhere(std::move(*ech.dependence));

  const PPoly members = ech.family.as_ppoly();
  const std::optional<std::size_t> i0 = pivot_by_valuation(members);
  if (!i0) {
    throw Error(ErrorKind::kNoTopLevelLinear,
                "no variable of maximal degree carries a linear term");
  }
  std::vector<Laurent> a;
  for (std::size_t i = 0; i < members.arity(); ++i) {
    a.push_back(members.part(i).coefficient(0));
  }
  LinearChange change = linear_change(members, a, *i0);
  PPoly q = change.q;
  return {std::move(q), std::move(ech.family), std::move(change)};
}

AlphaBeta alpha_beta(const PPoly& q) {
  const FieldPtr& f = q.field();
  const int m = q.top_index(0);
  if (m < 1) throw Error(ErrorKind::kNotReducedForm, "degree must be at least p");
  for (std::size_t i = 0; i < q.arity(); ++i) {
    if (q.top_index(i) != m) {
      throw Error(ErrorKind::kNotReducedForm, "all variables need the same degree");
    }
    const Laurent lin = q.part(i).coefficient(0);
    const bool ok = i == 0 ? (lin.is_monomial() && lin.valuation() == 0 &&
                              lin.leading() == f->one())
                           : lin.is_exact_zero();
    if (!ok) throw Error(ErrorKind::kNotReducedForm, "linear part must be exactly X1");
  }
  const int64_t p = f->p();
  const int64_t pm = ipow(p, m);

  // beta over the terms c_1j X_1^(p^(m-j)), j < m
  std::optional<Rational> beta;
  for (const auto& [sigma, c] : q.part(0).terms()) {
    if (sigma == 0) continue;
    const Rational b(-c.valuation(), ipow(p, sigma) - 1);
    if (!beta || b > *beta) beta = b;
  }

  std::optional<Rational> alpha;
  for (std::size_t i = 0; i < q.arity(); ++i) {
    const int64_t vc = q.part(i).top().valuation();
    for (const auto& [sigma, lambda] : q.part(i).terms()) {
      if (sigma == m) continue;
      const int64_t ps = ipow(p, sigma);
      const Rational a(lambda.valuation() - vc, pm - ps);
      const Rational value = Rational(lambda.valuation()) + Rational(ps) * a;
      if (!alpha || value < *alpha) alpha = value;
    }
  }
  // X_1 is always present, so both are set.
  return {*alpha, *beta};
}

}  // namespace addpoly::image
