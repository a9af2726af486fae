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

#include "addpoly/oracle.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "addpoly/error.hpp"
#include "addpoly/rational.hpp"

namespace addpoly::oracle {
namespace {

constexpr int64_t kBig = std::numeric_limits<int64_t>::max() / 4;

int64_t floor_div(int64_t a, int64_t b) {
  int64_t q = a / b;
  if (a % b != 0 && (a < 0) != (b < 0)) --q;
  return q;
}

int64_t ceil_div(int64_t a, int64_t b) { return -floor_div(-a, b); }

uint32_t inverse_mod(uint32_t a, uint32_t p) {
  uint64_t r = 1, b = a;
  for (uint32_t e = p - 2; e > 0; e >>= 1) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
  }
  return static_cast<uint32_t>(r);
}

// Fully reduced row echelon form over F_p. Columns are scanned from the
// lowest exponent up, so the pivot of every row is its lowest entry. Each
// row carries the generator combination that produced it.
struct Echelon {
  uint32_t p;
  std::size_t width;
  std::vector<std::vector<uint32_t>> rows;
  std::vector<std::vector<uint32_t>> combos;
  std::vector<std::size_t> pivot;

  void build() {
    const std::size_t n = rows.size();
    combos.assign(n, std::vector<uint32_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i) combos[i][i] = 1;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < width && rank < n; ++col) {
      std::size_t r = rank;
      while (r < n && rows[r][col] == 0) ++r;
      if (r == n) continue;
      std::swap(rows[r], rows[rank]);
      std::swap(combos[r], combos[rank]);
      const uint32_t s = inverse_mod(rows[rank][col], p);
      scale(rank, s);
      for (std::size_t i = 0; i < n; ++i) {
        if (i != rank && rows[i][col] != 0) subtract(i, rank, rows[i][col]);
      }
      pivot.push_back(col);
      ++rank;
    }
    rows.resize(rank);
    combos.resize(rank);
  }

  void scale(std::size_t i, uint32_t s) {
    for (uint32_t& x : rows[i]) x = static_cast<uint32_t>(uint64_t{x} * s % p);
    for (uint32_t& x : combos[i]) x = static_cast<uint32_t>(uint64_t{x} * s % p);
  }

  void subtract(std::size_t i, std::size_t j, uint32_t c) {
    for (std::size_t k = 0; k < width; ++k) {
      rows[i][k] = static_cast<uint32_t>((rows[i][k] + uint64_t{p - c} * rows[j][k]) % p);
    }
    for (std::size_t k = 0; k < combos[i].size(); ++k) {
      combos[i][k] =
          static_cast<uint32_t>((combos[i][k] + uint64_t{p - c} * combos[j][k]) % p);
    }
  }
};

struct Generator {
  std::size_t variable;
  int64_t h;
  Fq omega;
};

struct Built {
  Echelon ech;
  std::vector<Generator> gens;  // non-boundary, in row order before build()
  std::size_t total = 0;
  std::size_t boundary = 0;
};

std::vector<uint32_t> to_vector(const Laurent& a, int64_t lo, int64_t hi, const Field& f) {
  const int e = f.e();
  std::vector<uint32_t> v(static_cast<std::size_t>((hi - lo + 1) * e), 0);
  if (a.is_zero()) return v;
  for (int64_t n = std::max(lo, a.valuation()); n <= std::min(hi, a.degree()); ++n) {
    const Fq c = a.coeff(n);
    for (int i = 0; i < e; ++i) {
      v[static_cast<std::size_t>((n - lo) * e + i)] = static_cast<uint32_t>(f.digit(c, i));
    }
  }
  return v;
}

Built build(const PPoly& p, const Window& w) {
  if (!p.exact()) {
    throw Error(ErrorKind::kInexactCoefficient, "the oracle needs exact coefficients");
  }
  const FieldPtr& f = p.field();
  Built b;
  b.ech.p = static_cast<uint32_t>(f->p());
  b.ech.width = static_cast<std::size_t>(std::max<int64_t>(0, w.out_max - w.out_min + 1) * f->e());
  for (std::size_t i = 0; i < p.arity(); ++i) {
    for (int64_t h = w.h_min; h <= w.h_max; ++h) {
      for (int k = 0; k < f->e(); ++k) {
        std::vector<int> digits(static_cast<std::size_t>(f->e()), 0);
        digits[static_cast<std::size_t>(k)] = 1;
        const Fq omega = f->from_digits(digits);
        std::vector<Laurent> x(p.arity(), Laurent(f));
        x[i] = Laurent::monomial(f, omega, h);
        const Laurent y = evaluate(p, x);
        ++b.total;
        if (y.is_zero()) continue;
        if (y.valuation() < w.out_min) {
          ++b.boundary;
          continue;
        }
        if (y.valuation() > w.out_max) continue;
        b.gens.push_back({i, h, omega});
        b.ech.rows.push_back(to_vector(y, w.out_min, w.out_max, *f));
      }
    }
  }
  b.ech.build();
  return b;
}

// Lowest-term thresholds of the variables themselves; nullopt when some
// residue is never handled, kBig-negative sentinel for -infinity.
std::optional<Rational> own_threshold(const PPoly& p, bool& covered) {
  const int pr = p.field()->p();
  struct Low {
    int s0;
    int64_t l;
    std::optional<Rational> theta;
  };
  std::vector<Low> lows;
  int top = 0;
  for (const Additive& g : p.parts()) {
    Low lw{g.low_index(), g.coefficient(g.low_index()).valuation(), std::nullopt};
    const int64_t ps0 = ipow(pr, lw.s0);
    for (const auto& [sigma, lambda] : g.terms()) {
      if (sigma == lw.s0) continue;
      const Rational t = Rational(lw.l) +
                         Rational(ps0) * Rational(lw.l - lambda.valuation(), ipow(pr, sigma) - ps0);
      if (!lw.theta || t > *lw.theta) lw.theta = t;
    }
    top = std::max(top, lw.s0);
    lows.push_back(lw);
  }
  const int64_t modulus = ipow(pr, top);
  std::optional<Rational> worst;
  covered = true;
  for (int64_t r = 0; r < modulus; ++r) {
    bool any = false;
    bool unbounded = false;
    std::optional<Rational> best;
    for (const Low& lw : lows) {
      const int64_t ps0 = ipow(pr, lw.s0);
      if (((r - lw.l) % ps0 + ps0) % ps0 != 0) continue;
      any = true;
      if (!lw.theta) {
        unbounded = true;
      } else if (!best || *lw.theta < *best) {
        best = lw.theta;
      }
    }
    if (!any) {
      covered = false;
      return std::nullopt;
    }
    if (!unbounded && (!worst || *best > *worst)) worst = best;
  }
  return worst;
}

// Per variable: below h0 the top term strictly dominates f_i(c t^h), and
// every value at h >= h0 has valuation >= e.
struct Bounds {
  int64_t vc;
  int64_t pm;
  int64_t h0 = kBig;
  int64_t e = kBig;
};

std::vector<Bounds> own_bounds(const PPoly& p) {
  const int pr = p.field()->p();
  std::vector<Bounds> out;
  for (const Additive& g : p.parts()) {
    Bounds b{g.top().valuation(), ipow(pr, g.top_index())};
    std::optional<Rational> dmin;
    for (const auto& [sigma, lambda] : g.terms()) {
      if (sigma == g.top_index()) continue;
      const Rational dv(lambda.valuation() - b.vc, b.pm - ipow(pr, sigma));
      if (!dmin || dv < *dmin) dmin = dv;
    }
    if (dmin) {
      b.h0 = dmin->ceil();
      for (const auto& [sigma, lambda] : g.terms()) {
        b.e = std::min(b.e, lambda.valuation() + ipow(pr, sigma) * b.h0);
      }
    }
    out.push_back(b);
  }
  return out;
}

int64_t lowest_needed_h(const Bounds& b, int64_t lambda) {
  return std::min(b.h0, ceil_div(lambda - b.vc, b.pm));
}

// Principal leading valuations, split to a common degree, are distinct.
bool valuation_independent(const PPoly& p) {
  const int pr = p.field()->p();
  const int nu = p.max_top_index();
  const int64_t d = ipow(pr, nu);
  std::vector<bool> used(static_cast<std::size_t>(d), false);
  for (std::size_t i = 0; i < p.arity(); ++i) {
    const int m = p.top_index(i);
    const int64_t pm = ipow(pr, m);
    for (int64_t j = 0; j < ipow(pr, nu - m); ++j) {
      const int64_t v = p.part(i).top().valuation() + j * pm;
      const auto r = static_cast<std::size_t>(((v % d) + d) % d);
      if (used[r]) return false;
      used[r] = true;
    }
  }
  return true;
}

bool reaches(const PPoly& p, int64_t h, int64_t out_max) {
  for (const Additive& g : p.parts()) {
    for (const auto& [sigma, lambda] : g.terms()) {
      if (lambda.valuation() + ipow(p.field()->p(), sigma) * h <= out_max) return true;
    }
  }
  return false;
}

}  // namespace

Span image_span(const PPoly& p, const Window& w) {
  Built b = build(p, w);
  Span s;
  s.e = p.field()->e();
  s.lo = w.interior();
  s.hi = w.out_max;
  s.generators = b.total;
  s.boundary_rows = b.boundary;
  const auto skip = static_cast<std::size_t>((w.interior() - w.out_min) * s.e);
  for (std::size_t r = 0; r < b.ech.rows.size(); ++r) {
    if (b.ech.pivot[r] < skip) continue;
    s.basis.emplace_back(b.ech.rows[r].begin() + static_cast<long>(skip), b.ech.rows[r].end());
  }
  return s;
}

OracleMembership oracle_membership(const Laurent& a, const PPoly& p, const Window& w) {
  if (!a.exact()) {
    throw Error(ErrorKind::kSupportOutsideWindow, "the oracle needs an exact element");
  }
  if (!a.is_zero() && (a.valuation() < w.interior() || a.degree() > w.out_max)) {
    throw Error(ErrorKind::kSupportOutsideWindow,
                "support of a lies outside [" + std::to_string(w.interior()) + ", " +
                    std::to_string(w.out_max) + "]");
  }
  const FieldPtr& f = p.field();
  Built b = build(p, w);
  std::vector<uint32_t> v = to_vector(a, w.out_min, w.out_max, *f);
  std::vector<uint32_t> comb(b.gens.size(), 0);
  const uint32_t pr = b.ech.p;
  for (std::size_t r = 0; r < b.ech.rows.size(); ++r) {
    const uint32_t c = v[b.ech.pivot[r]];
    if (c == 0) continue;
    for (std::size_t k = 0; k < v.size(); ++k) {
      v[k] = static_cast<uint32_t>((v[k] + uint64_t{pr - c} * b.ech.rows[r][k]) % pr);
    }
    for (std::size_t k = 0; k < comb.size(); ++k) {
      comb[k] = static_cast<uint32_t>((comb[k] + uint64_t{c} * b.ech.combos[r][k]) % pr);
    }
  }
  OracleMembership out;
  out.member = std::all_of(v.begin(), v.end(), [](uint32_t x) { return x == 0; });
  if (out.member) {
    out.witness.assign(p.arity(), Laurent(f));
    for (std::size_t g = 0; g < comb.size(); ++g) {
      if (comb[g] == 0) continue;
      const Generator& gen = b.gens[g];
      out.witness[gen.variable] += Laurent::monomial(
          f, f->mul(f->from_int(comb[g]), gen.omega), gen.h);
    }
    out.witness_exact = evaluate(p, out.witness) == a;
    bool covered = false;
    const std::optional<Rational> th = own_threshold(p, covered);
    out.conclusive = out.witness_exact || (covered && (!th || w.out_max >= th->floor()));
    return out;
  }
  if (!valuation_independent(p) || reaches(p, w.h_max + 1, w.out_max)) return out;
  const std::vector<Bounds> bounds = own_bounds(p);
  int64_t lambda = a.valuation();
  for (const Bounds& bd : bounds) lambda = std::min(lambda, bd.e);
  if (w.out_min > lambda) return out;
  out.conclusive = std::all_of(bounds.begin(), bounds.end(), [&](const Bounds& bd) {
    return w.h_min <= lowest_needed_h(bd, lambda);
  });
  return out;
}

int64_t oracle_quotient_dim(const PPoly& p, const Window& w) {
  const Span s = image_span(p, w);
  const int64_t coords = std::max<int64_t>(0, w.out_max - w.interior() + 1) * s.e;
  return coords - static_cast<int64_t>(s.dimension());
}

namespace {

int64_t base_guard(const PPoly& p) {
  int64_t vmin = kBig, vmax = -kBig;
  for (const Additive& g : p.parts()) {
    for (const auto& [sigma, lambda] : g.terms()) {
      vmin = std::min(vmin, lambda.valuation());
      vmax = std::max(vmax, lambda.valuation());
    }
  }
  return ipow(p.field()->p(), p.max_top_index()) + (vmax - vmin);
}

Window window_with_guard(const PPoly& p, int64_t lo, int64_t hi, int64_t guard) {
  const std::vector<Bounds> bounds = own_bounds(p);
  Window w;
  w.interior_min = lo;
  w.out_max = hi;
  w.out_min = lo - guard;
  for (const Bounds& b : bounds) w.out_min = std::min(w.out_min, b.e);
  w.h_min = kBig;
  for (const Bounds& b : bounds) w.h_min = std::min(w.h_min, lowest_needed_h(b, w.out_min));
  w.h_min -= 1;
  w.h_max = w.h_min;
  while (reaches(p, w.h_max + 1, w.out_max)) ++w.h_max;
  return w;
}

constexpr int64_t kMaxGuard = 256;

// Doubles the guard band until the interior span stops growing. Without
// valuation independence, elements near the bottom of the interior may need
// arguments whose values reach far below it before cancelling.
int64_t stable_guard(const PPoly& p, int64_t lo, int64_t hi) {
  int64_t g = base_guard(p);
  std::size_t dim = image_span(p, window_with_guard(p, lo, hi, g)).dimension();
  while (g < kMaxGuard) {
    const std::size_t next = image_span(p, window_with_guard(p, lo, hi, 2 * g)).dimension();
    if (next == dim) break;
    dim = next;
    g *= 2;
  }
  return g;
}

}  // namespace

Window auto_window(const PPoly& p, int64_t lo, int64_t hi) {
  return window_with_guard(p, lo, hi, stable_guard(p, lo, hi));
}

std::vector<Window> growth_windows(const PPoly& p) {
  bool covered = false;
  const std::optional<Rational> th = own_threshold(p, covered);
  int64_t hi0 = 0, lo0 = 0;
  if (covered && th) hi0 = th->floor();
  for (const Bounds& b : own_bounds(p)) {
    if (b.h0 != kBig) lo0 = std::min(lo0, b.vc + b.pm * b.h0);
  }
  const int64_t top = std::max<int64_t>(hi0, 0);
  int64_t w = std::max<int64_t>(6, 2 * (top - lo0));
  // Extra guard needed on a probe window signals cancellation below lo0.
  const int64_t extra = stable_guard(p, top - 2 * w, top) - base_guard(p);
  w = std::max(w, 2 * (top - lo0 + extra));
  std::vector<Window> out;
  for (int64_t k = 1; k <= 3; ++k) out.push_back(auto_window(p, top - k * w, top));
  return out;
}

std::vector<int64_t> growth_dims(const PPoly& p) {
  std::vector<int64_t> out;
  for (const Window& w : growth_windows(p)) out.push_back(oracle_quotient_dim(p, w));
  return out;
}

}  // namespace addpoly::oracle
