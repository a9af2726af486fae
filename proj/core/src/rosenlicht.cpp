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

#include "addpoly/rosenlicht.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "addpoly/frobenius.hpp"

namespace addpoly::rosenlicht {

int64_t Signature::dimension() const {
  return std::accumulate(r.begin(), r.end(), int64_t{0}) - 1;
}

int64_t Signature::weight(int p) const {
  int64_t w = 0;
  for (std::size_t i = 0; i < r.size(); ++i) w += ipow(p, static_cast<int>(i)) * r[i];
  return w;
}

std::optional<std::vector<int64_t>> l_vector(int p, const Signature& s) {
  std::vector<int64_t> l;
  int64_t prev = 0;
  for (int64_t ri : s.r) {
    if ((ri + prev) % p != 0 || ri + prev <= 0) return std::nullopt;
    prev = (ri + prev) / p;
    l.push_back(prev);
  }
  return l;
}

Signature from_l_vector(int p, std::span<const int64_t> l) {
  Signature s;
  s.M = static_cast<int>(l.size());
  int64_t prev = 0;
  for (int64_t li : l) {
    s.r.push_back(li * p - prev);
    prev = li;
  }
  return s;
}

Signature signature_of(const PPoly& p) {
  Signature s;
  s.M = p.max_top_index();
  for (std::size_t i = 0; i < p.arity(); ++i) {
    if (p.top_index(i) == 0) {
      throw Error(ErrorKind::kLinearVariable,
                  "T" + std::to_string(i + 1) + " has degree 1");
    }
  }
  s.r.assign(static_cast<std::size_t>(s.M), 0);
  for (std::size_t i = 0; i < p.arity(); ++i) ++s.r[static_cast<std::size_t>(s.M - p.top_index(i))];
  return s;
}

std::string to_string(Reason r) {
  switch (r) {
    case Reason::kNone: return "none";
    case Reason::kNotSeparable: return "not_separable";
    case Reason::kLinearVariable: return "linear_variable";
    case Reason::kVanishesSomewhere: return "vanishes_somewhere";
    case Reason::kWeightMismatch: return "weight_mismatch";
  }
  return "unknown";
}

std::string Verdict::explain() const {
  switch (reason) {
    case Reason::kNone: return "Rosenlicht type";
    case Reason::kNotSeparable: return "no variable has a linear term";
    case Reason::kLinearVariable: return "some variable has degree 1";
    case Reason::kVanishesSomewhere: return "the principal part vanishes at a nonzero point";
    case Reason::kWeightMismatch:
      return "weight " + std::to_string(weight) + " != " + std::to_string(required);
  }
  return "";
}

Verdict is_rosenlicht(const PPoly& p) {
  Verdict v;
  if (!separability_data(p).separable) {
    v.reason = Reason::kNotSeparable;
    return v;
  }
  try {
    v.signature = signature_of(p);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::kLinearVariable) throw;
    v.reason = Reason::kLinearVariable;
    return v;
  }
  const image::Vanishing van = image::check_vanishes_nowhere(principal_part(p));
  if (!van.nowhere) {
    v.reason = Reason::kVanishesSomewhere;
    v.witness = van.witness;
    return v;
  }
  const int pr = p.field()->p();
  v.weight = v.signature->weight(pr);
  v.required = ipow(pr, v.signature->M);
  if (v.weight != v.required) {
    v.reason = Reason::kWeightMismatch;
    return v;
  }
  v.rosenlicht = true;
  return v;
}

namespace {

bool signature_less(const Signature& a, const Signature& b) {
  if (a.M != b.M) return a.M < b.M;
  return a.r < b.r;
}

void compositions(int64_t left, std::vector<int64_t>& cur,
                  std::vector<std::vector<int64_t>>& out) {
  if (left == 1) {
    cur.push_back(1);
    out.push_back(cur);
    cur.pop_back();
  }
  for (int64_t part = 1; part < left; ++part) {
    cur.push_back(part);
    compositions(left - part, cur, out);
    cur.pop_back();
  }
}

void search(int p, int M, int i, int64_t count, int64_t weight, std::vector<int64_t>& r,
            std::vector<Signature>& out) {
  if (i == M) {
    if (count == 0 && weight == 0) out.push_back(Signature{M, r});
    return;
  }
  const int64_t w = ipow(p, i);
  // Positions >= i carry weights p^i .. p^(M-1), and the weight still to
  // place must stay divisible by p^i.
  if (weight % w != 0 || weight < count * w || weight > count * ipow(p, M - 1)) return;
  for (int64_t ri = i == 0 ? 1 : 0; ri <= count && ri * w <= weight; ++ri) {
    r.push_back(ri);
    search(p, M, i + 1, count - ri, weight - ri * w, r, out);
    r.pop_back();
  }
}

void check_prime(int p) {
  if (p < 2 || !is_prime(p)) {
    throw Error(ErrorKind::kInvalidField, std::to_string(p) + " is not prime");
  }
}

}  // namespace

std::vector<Signature> enumerate_signatures(int p, int64_t d) {
  check_prime(p);
  std::vector<Signature> out;
  if (d <= 0 || d % (p - 1) != 0) return out;
  std::vector<std::vector<int64_t>> ls;
  std::vector<int64_t> cur;
  compositions(d / (p - 1), cur, ls);
  for (const auto& l : ls) {
    Signature s = from_l_vector(p, l);
    if (std::all_of(s.r.begin(), s.r.end(), [](int64_t x) { return x >= 0; })) {
      out.push_back(std::move(s));
    }
  }
  std::sort(out.begin(), out.end(), signature_less);
  return out;
}

std::vector<Signature> solve_signatures(int p, int64_t d) {
  check_prime(p);
  std::vector<Signature> out;
  if (d < 0) return out;
  const int64_t limit = std::numeric_limits<int64_t>::max() / (int64_t{p} * (d + 2));
  for (int M = 1; M <= d + 1 && ipow(p, M - 1) <= limit; ++M) {
    std::vector<int64_t> r;
    search(p, M, 0, d + 1, ipow(p, M), r, out);
  }
  std::sort(out.begin(), out.end(), signature_less);
  return out;
}

PPoly oesterle_group(const FieldPtr& field) {
  const int p = field->p();
  std::vector<Additive> parts;
  for (int i = 0; i < p; ++i) parts.push_back(Additive::monomial(Laurent::t_power(field, i), 1));
  parts.back().add_term(0, Laurent::constant(field, field->from_int(-1)));
  return PPoly(field, std::move(parts));
}

PPoly prop13_group(std::span<const Laurent> c) {
  if (c.empty()) throw Error(ErrorKind::kInvalidArgument, "no coefficients");
  const FieldPtr& field = c.front().field();
  const int p = field->p();
  if (static_cast<int>(c.size()) != p) {
    throw Error(ErrorKind::kInvalidArgument,
                "need " + std::to_string(p) + " coefficients, got " + std::to_string(c.size()));
  }
  for (const Laurent& ci : c) {
    if (ci.is_zero()) throw NotABasis(std::vector<Laurent>(c.size(), Laurent(field)));
  }
  PmIndependence ind = pm_independent(c, 1);
  if (!ind.independent()) throw NotABasis(std::move(*ind.dependence));
  std::vector<Additive> parts;
  for (const Laurent& ci : c) parts.push_back(Additive::monomial(ci, 1));
  parts.back().add_term(0, Laurent::t_power(field, 0));
  return PPoly(field, std::move(parts));
}

image::QuotientReport h1_report(const PPoly& p, int64_t precision) {
  return image::quotient(p, precision);
}

}  // namespace addpoly::rosenlicht
