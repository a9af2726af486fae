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
#include <utility>

#include "addpoly/frobenius.hpp"
#include "addpoly/imagecalc.hpp"

namespace addpoly::image {
namespace {

constexpr int kMaxEchelonSteps = 100'000;

int64_t mod(int64_t a, int64_t m) { return ((a % m) + m) % m; }

// Identity-like back map: Y -> coeff * Y^(p^h) in component i.
std::vector<Additive> unit_back(const FieldPtr& f, std::size_t arity,
                                std::size_t i, const Laurent& coeff, int h) {
  std::vector<Additive> back(arity, Additive(f));
  back[i] = Additive::monomial(coeff, h);
  return back;
}

std::vector<Additive> compose_all(const std::vector<Additive>& back,
                                  const Laurent& c, int h) {
  std::vector<Additive> out;
  out.reserve(back.size());
  for (const Additive& r : back) out.push_back(r.compose_monomial(c, h));
  return out;
}

// Members g(t^l Y^(p^(nu - m))) for l < p^(nu - m), with back maps to match.
std::vector<FamilyMember> split(const FamilyMember& m, int nu, int p) {
  const int top = m.g.top_index();
  const int h = nu - top;
  const int64_t count = ipow(p, h);
  std::vector<FamilyMember> out;
  for (int64_t l = 0; l < count; ++l) {
    const Laurent tl = Laurent::t_power(m.g.field(), l);
    out.push_back({substitute_monomial(m.g, l, h), compose_all(m.back, tl, h)});
  }
  return out;
}

Laurent principal_value(const PrincipalPart& pp, std::span<const Laurent> x) {
  Laurent sum(pp.front().coeff.field());
  for (std::size_t i = 0; i < pp.size(); ++i) {
    sum += pp[i].coeff * x[i].frobenius(pp[i].m);
  }
  return sum;
}

// The top-degree coefficients of a back map that P sends to 0.
std::optional<std::vector<Laurent>> witness_from_back(
    const PrincipalPart& pp, const std::vector<Additive>& back) {
  const FieldPtr& f = pp.front().coeff.field();
  int top = -1;
  for (std::size_t i = 0; i < back.size(); ++i) {
    if (!back[i].is_zero()) top = std::max(top, pp[i].m + back[i].top_index());
  }
  if (top < 0) return std::nullopt;
  std::vector<Laurent> x(back.size(), Laurent(f));
  for (std::size_t i = 0; i < back.size(); ++i) {
    if (!back[i].is_zero() && pp[i].m + back[i].top_index() == top) {
      x[i] = back[i].top();
    }
  }
  const Laurent value = principal_value(pp, x);
  if (!value.is_exact_zero()) return std::nullopt;
  return x;
}

}  // namespace

int64_t NormalizedFamily::degree() const { return ipow(field->p(), nu); }

std::vector<Laurent> NormalizedFamily::leading() const {
  std::vector<Laurent> out;
  out.reserve(members.size());
  for (const FamilyMember& m : members) out.push_back(m.g.coefficient(nu));
  return out;
}

PPoly NormalizedFamily::as_ppoly() const {
  std::vector<Additive> parts;
  for (const FamilyMember& m : members) parts.push_back(m.g);
  return PPoly(field, std::move(parts), /*allow_inexact=*/true);
}

std::vector<Laurent> NormalizedFamily::pull_back(std::span<const Laurent> y) const {
  if (y.size() != members.size()) {
    throw Error(ErrorKind::kArityMismatch, "pull_back: one argument per member");
  }
  std::vector<Laurent> x(source_arity(), Laurent(field));
  for (std::size_t k = 0; k < members.size(); ++k) {
    if (y[k].is_exact_zero()) continue;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (!members[k].back[i].is_zero()) x[i] += members[k].back[i].evaluate(y[k]);
    }
  }
  return x;
}

NormalizedFamily family_of(const FieldPtr& field, std::vector<Additive> members) {
  NormalizedFamily fam;
  fam.field = field;
  fam.nu = members.empty() ? 0 : members.front().top_index();
  const std::size_t r = members.size();
  for (std::size_t i = 0; i < r; ++i) {
    fam.source_principal.push_back({i, members[i].top_index(), members[i].top()});
    fam.members.push_back(
        {members[i], unit_back(field, r, i, Laurent::constant(field, field->one()), 0)});
  }
  return fam;
}

NormalizedFamily equalize_degrees(const PPoly& p) {
  NormalizedFamily fam;
  fam.field = p.field();
  fam.source_principal = principal_part(p);
  for (const PrincipalEntry& e : fam.source_principal) {
    if (e.m == 0) {
      throw Error(ErrorKind::kLinearVariable,
                  "variable T" + std::to_string(e.variable + 1) + " is purely linear");
    }
  }
  fam.nu = p.max_top_index();
  const Laurent one = Laurent::constant(p.field(), p.field()->one());
  for (std::size_t i = 0; i < p.arity(); ++i) {
    FamilyMember base{p.part(i), unit_back(p.field(), p.arity(), i, one, 0)};
    for (FamilyMember& m : split(base, fam.nu, p.field()->p())) {
      fam.members.push_back(std::move(m));
    }
  }
  return fam;
}

EchelonResult valuation_echelonize(NormalizedFamily fam, int64_t max_growth) {
  const FieldPtr f = fam.field;
  const int64_t d = fam.degree();
  int64_t ceiling = 0;
  for (const FamilyMember& m : fam.members) {
    if (m.g.top_index() != fam.nu) {
      throw Error(ErrorKind::kNotEqualDegree, "family members differ in degree");
    }
    ceiling = std::max(ceiling, m.g.top().valuation());
  }
  ceiling += max_growth * d;

  for (int step = 0; step < kMaxEchelonSteps; ++step) {
    std::size_t piv = 0, red = 0;
    bool found = false;
    for (std::size_t i = 0; i < fam.members.size() && !found; ++i) {
      const int64_t vi = fam.members[i].g.top().valuation();
      for (std::size_t j = i + 1; j < fam.members.size(); ++j) {
        const int64_t vj = fam.members[j].g.top().valuation();
        if (mod(vi - vj, d) == 0) {
          piv = vi <= vj ? i : j;
          red = vi <= vj ? j : i;
          found = true;
          break;
        }
      }
    }
    if (!found) return {std::move(fam), std::nullopt};

    FamilyMember& r = fam.members[red];
    const FamilyMember& s = fam.members[piv];
    const Laurent& br = r.g.top();
    const Laurent& bs = s.g.top();
    const int64_t h = (br.valuation() - bs.valuation()) / d;
    const Fq c = f->root(f->div(br.leading(), bs.leading()), fam.nu);
    const Laurent mono = Laurent::monomial(f, c, h);
    r.g = r.g - s.g.compose_monomial(mono, 0);
    for (std::size_t i = 0; i < r.back.size(); ++i) {
      r.back[i] = r.back[i] - s.back[i].compose_monomial(mono, 0);
    }

    if (r.g.is_zero()) {
      std::vector<Additive> back = r.back;
      fam.members.erase(fam.members.begin() + static_cast<long>(red));
      auto witness = witness_from_back(fam.source_principal, back);
      if (!witness) {
        Vanishing v = check_vanishes_nowhere(fam.source_principal);
        if (v.nowhere) {
          throw Error(ErrorKind::kInvalidArgument,
                      "member collapsed without a principal zero");
        }
        witness = std::move(v.witness);
      }
      return {std::move(fam), std::move(witness)};
    }
    if (r.g.top_index() < fam.nu) {
      fam.principal_zero = true;
      std::vector<FamilyMember> parts = split(r, fam.nu, f->p());
      if (r.g.top_index() == 0) {
        // lambda*Y alone already has image k
        fam.members = std::move(parts);
      } else {
        fam.members.erase(fam.members.begin() + static_cast<long>(red));
        for (FamilyMember& m : parts) fam.members.push_back(std::move(m));
      }
      continue;
    }
    if (r.g.top().valuation() > ceiling) {
      throw PrecisionExhausted("leading valuations keep growing during echelonization",
                               2 * max_growth);
    }
  }
  throw PrecisionExhausted("echelonization did not settle", 2 * max_growth);
}

Vanishing check_vanishes_nowhere(const PrincipalPart& pp) {
  if (pp.empty()) return {};
  const FieldPtr f = pp.front().coeff.field();
  int nu = 0;
  for (const PrincipalEntry& e : pp) {
    if (e.m == 0) {
      throw Error(ErrorKind::kLinearVariable,
                  "variable T" + std::to_string(e.variable + 1) + " is purely linear");
    }
    nu = std::max(nu, e.m);
  }
  // x_i = sum_j t^j y_ij^(p^(nu - m_i)) turns P_princ(x) into
  // sum_ij c_i t^(j p^m_i) y_ij^(p^nu).
  std::vector<Laurent> lead;
  std::vector<std::pair<std::size_t, int64_t>> slot;
  for (std::size_t i = 0; i < pp.size(); ++i) {
    const int64_t count = ipow(f->p(), nu - pp[i].m);
    const int64_t pm = ipow(f->p(), pp[i].m);
    for (int64_t j = 0; j < count; ++j) {
      lead.push_back(pp[i].coeff.shifted(j * pm));
      slot.emplace_back(i, j);
    }
  }
  PmIndependence ind = pm_independent(lead, nu);
  if (ind.independent()) return {};
  std::vector<Laurent> x(pp.size(), Laurent(f));
  for (std::size_t k = 0; k < lead.size(); ++k) {
    const auto [i, j] = slot[k];
    x[i] += (*ind.dependence)[k].frobenius(nu - pp[i].m).shifted(j);
  }
  if (!principal_value(pp, x).truncated(Laurent::kInfinity).is_zero()) {
    throw Error(ErrorKind::kInvalidArgument, "dependence witness failed to verify");
  }
  return {false, std::move(x)};
}

}  // namespace addpoly::image
