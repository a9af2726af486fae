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
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>

#include "addpoly/imagecalc.hpp"
#include "fp_system.hpp"

namespace addpoly::image {
namespace {

constexpr int64_t kNone = std::numeric_limits<int64_t>::min() / 4;
constexpr int64_t kUnbounded = std::numeric_limits<int64_t>::max() / 4;
constexpr uint64_t kMaxListed = 1u << 16;
constexpr std::size_t kMaxExactGenerators = 4000;

int64_t mod(int64_t a, int64_t m) { return ((a % m) + m) % m; }

int64_t ceil_div(int64_t a, int64_t b) {  // b > 0
  int64_t q = a / b;
  if (a % b != 0 && a > 0) ++q;
  return q;
}

uint64_t saturating_pow(uint64_t base, int64_t exp) {
  uint64_t r = 1;
  for (int64_t i = 0; i < exp; ++i) {
    if (r > std::numeric_limits<uint64_t>::max() / base) {
      return std::numeric_limits<uint64_t>::max();
    }
    r *= base;
  }
  return r;
}

struct LowTerm {
  int sigma0 = 0;
  int64_t l = 0;                 // v(lambda_sigma0)
  std::optional<Rational> theta;  // nullopt: -infinity
};

LowTerm low_term(const Additive& g) {
  const int p = g.field()->p();
  LowTerm out;
  out.sigma0 = g.low_index();
  out.l = g.coefficient(out.sigma0).valuation();
  const int64_t ps0 = ipow(p, out.sigma0);
  std::optional<Rational> dmax;
  for (const auto& [sigma, lambda] : g.terms()) {
    if (sigma == out.sigma0) continue;
    const Rational dv(out.l - lambda.valuation(), ipow(p, sigma) - ps0);
    if (!dmax || dv > *dmax) dmax = dv;
  }
  if (dmax) out.theta = Rational(out.l) + Rational(ps0) * *dmax;
  return out;
}

bool theta_less(const std::optional<Rational>& a, const std::optional<Rational>& b) {
  if (!a) return b.has_value();
  if (!b) return false;
  return *a < *b;
}

// Member of the lifting pool: an additive polynomial whose values lie in
// im P together with the way to recover arguments of P.
struct LiftMember {
  Additive g;
  LowTerm low;
  std::optional<std::size_t> family_index;  // else the source variable
  std::size_t variable = 0;
};

// Index of the member used at valuation n, or nullopt.
std::optional<std::size_t> pick(const std::vector<LiftMember>& pool, int64_t n) {
  std::optional<std::size_t> best;
  for (std::size_t k = 0; k < pool.size(); ++k) {
    const LowTerm& lt = pool[k].low;
    const int64_t ps0 = ipow(pool[k].g.field()->p(), lt.sigma0);
    if (mod(n - lt.l, ps0) != 0) continue;
    if (lt.theta && !(Rational(n) > *lt.theta)) continue;
    if (!best || theta_less(lt.theta, pool[*best].low.theta)) best = k;
  }
  return best;
}

std::vector<LiftMember> make_pool(const NormalizedFamily& fam, const PPoly* source) {
  std::vector<LiftMember> pool;
  for (std::size_t k = 0; k < fam.members.size(); ++k) {
    pool.push_back({fam.members[k].g, low_term(fam.members[k].g), k, 0});
  }
  if (source != nullptr) {
    for (std::size_t i = 0; i < source->arity(); ++i) {
      pool.push_back({source->part(i), low_term(source->part(i)), std::nullopt, i});
    }
  }
  return pool;
}

std::optional<Rational> pool_threshold(const std::vector<LowTerm>& lows, int p) {
  int top = 0;
  for (const LowTerm& lt : lows) top = std::max(top, lt.sigma0);
  const int64_t modulus = ipow(p, top);
  std::optional<Rational> worst;
  bool all_unbounded = true;
  for (int64_t r = 0; r < modulus; ++r) {
    bool covered = false;
    std::optional<Rational> best;
    for (const LowTerm& lt : lows) {
      if (mod(r - lt.l, ipow(p, lt.sigma0)) != 0) continue;
      if (!covered || theta_less(lt.theta, best)) best = lt.theta;
      covered = true;
    }
    if (!covered) {
      throw Error(ErrorKind::kResiduesNotCovered,
                  "no member handles valuations congruent to " + std::to_string(r) +
                      " mod " + std::to_string(modulus));
    }
    if (best) {
      all_unbounded = false;
      if (!worst || *best > *worst) worst = best;
    }
  }
  return all_unbounded ? std::nullopt : worst;
}

Witness run_lift(const Laurent& a, const NormalizedFamily& fam, const PPoly* source,
                 const std::vector<LiftMember>& pool, int64_t precision) {
  const FieldPtr& f = fam.field;
  const std::size_t arity =
      source != nullptr ? source->arity() : fam.source_arity();
  Witness w;
  w.args.assign(arity, Laurent(f));
  if (a.is_exact_zero()) {
    w.exact = true;
    return w;
  }
  int64_t cutoff = precision;
  if (!a.is_zero() && a.valuation() >= precision) cutoff = a.valuation() + precision;
  if (!a.exact()) cutoff = std::min(cutoff, a.precision());

  std::vector<Laurent> y(fam.members.size(), Laurent(f));
  std::vector<Laurent> direct(arity, Laurent(f));
  Laurent r = a;
  while (!r.is_zero() && r.valuation() < cutoff) {
    const int64_t n = r.valuation();
    const std::optional<std::size_t> k = pick(pool, n);
    if (!k) {
      throw Error(ErrorKind::kInvalidArgument,
                  "valuation " + std::to_string(n) + " is not above the lift threshold");
    }
    const LiftMember& m = pool[*k];
    const int64_t ps0 = ipow(f->p(), m.low.sigma0);
    const int64_t h = (n - m.low.l) / ps0;
    const Fq c = f->root(f->div(r.leading(), m.g.coefficient(m.low.sigma0).leading()),
                         m.low.sigma0);
    const Laurent step = Laurent::monomial(f, c, h);
    r -= m.g.evaluate_monomial(c, h);
    if (m.family_index) {
      y[*m.family_index] += step;
    } else {
      direct[m.variable] += step;
    }
    if (!r.is_zero() && r.valuation() <= n) {
      throw Error(ErrorKind::kInvalidArgument, "lift step failed to gain valuation");
    }
  }
  std::vector<Laurent> pulled = fam.pull_back(y);
  for (std::size_t i = 0; i < arity; ++i) w.args[i] = pulled[i] + direct[i];
  w.exact = r.is_exact_zero();
  w.verified_to = w.exact ? Laurent::kInfinity : cutoff;
  return w;
}

}  // namespace

std::optional<Rational> lowest_term_threshold(std::span<const Additive> members) {
  if (members.empty()) {
    throw Error(ErrorKind::kResiduesNotCovered, "no members");
  }
  std::vector<LowTerm> lows;
  for (const Additive& g : members) lows.push_back(low_term(g));
  return pool_threshold(lows, members.front().field()->p());
}

std::optional<Rational> convergence_threshold(const NormalizedFamily& fam) {
  std::vector<Additive> gs;
  for (const FamilyMember& m : fam.members) gs.push_back(m.g);
  return lowest_term_threshold(gs);
}

Witness lift_beyond_threshold(const Laurent& a, const NormalizedFamily& fam,
                              const PPoly* source, int64_t precision) {
  std::vector<LiftMember> pool = make_pool(fam, source);
  std::vector<LowTerm> lows;
  for (const LiftMember& m : pool) lows.push_back(m.low);
  const std::optional<Rational> th = pool_threshold(lows, fam.field->p());
  if (!a.is_zero() && th && !(Rational(a.valuation()) > *th)) {
    throw Error(ErrorKind::kInvalidArgument,
                "v(a) = " + std::to_string(a.valuation()) +
                    " is not above the threshold " + th->to_string());
  }
  return run_lift(a, fam, source, pool, precision);
}

Finiteness decide_finiteness(const PPoly& p) {
  if (!separability_data(p).separable) {
    throw Error(ErrorKind::kNotSeparable, "the polynomial has no linear term");
  }
  Vanishing van = check_vanishes_nowhere(principal_part(p));
  if (!van.nowhere) throw VanishesSomewhere(std::move(van.witness));
  Finiteness out;
  out.M = p.max_top_index();
  for (std::size_t i = 0; i < p.arity(); ++i) {
    out.s += ipow(p.field()->p(), out.M - p.top_index(i));
  }
  const int64_t pm = ipow(p.field()->p(), out.M);
  if (out.s > pm) {
    throw Error(ErrorKind::kInvalidArgument, "s exceeds p^M despite a nowhere-vanishing principal part");
  }
  out.finite = out.s == pm;
  return out;
}

// ---------------------------------------------------------------------------

namespace {

struct MemberBounds {
  int64_t vb = 0;          // v(b_k)
  int64_t h0 = kUnbounded;  // top term strictly dominates g(c t^h) for h < h0
  int64_t e = kUnbounded;   // v(g(c t^h)) >= e for h >= h0
};

// Generator g_k(omega_i t^h) of a linear system.
struct GenId {
  std::size_t member;
  int64_t h;
  int digit;
};

struct LinearSystem {
  int64_t lo = 0;  // exponent of coordinate 0
  int64_t hi = 0;  // last exponent (inclusive)
  std::vector<GenId> gens;
  std::unique_ptr<detail::FpSystem> sys;
};

}  // namespace

struct ImageAnalyzer::Impl {
  PPoly p;
  int64_t precision;
  FieldPtr f;
  NormalizedFamily fam;
  std::vector<LiftMember> pool;
  std::optional<Rational> threshold;
  int64_t top = kNone;  // window top B
  std::vector<MemberBounds> bounds;
  int64_t min_e = kUnbounded;
  int64_t n0 = kUnbounded;

  mutable std::mutex mu;
  mutable std::map<int64_t, std::shared_ptr<const LinearSystem>> windows;
  mutable std::map<std::pair<int64_t, int64_t>, std::shared_ptr<const LinearSystem>> exact;

  Impl(PPoly poly, int64_t prec) : p(std::move(poly)), precision(prec), f(p.field()) {}

  int64_t d() const { return fam.degree(); }
  int e() const { return f->e(); }

  int64_t hmin(std::size_t k, int64_t lambda) const {
    const MemberBounds& b = bounds[k];
    return std::min(b.h0, ceil_div(lambda - b.vb, d()));
  }

  // min_sigma v(lambda_sigma) + p^sigma h
  int64_t low_valuation(std::size_t k, int64_t h) const {
    int64_t best = kUnbounded;
    for (const auto& [sigma, lambda] : fam.members[k].g.terms()) {
      best = std::min(best, lambda.valuation() + ipow(f->p(), sigma) * h);
    }
    return best;
  }

  Fq basis(int i) const {
    std::vector<int> digits(static_cast<std::size_t>(e()), 0);
    digits[static_cast<std::size_t>(i)] = 1;
    return f->from_digits(digits);
  }

  std::vector<uint32_t> coords(const Laurent& a, int64_t lo, int64_t hi) const {
    const int64_t n = std::max<int64_t>(0, hi - lo + 1);
    std::vector<uint32_t> v(static_cast<std::size_t>(n * e()), 0);
    if (a.is_zero()) return v;
    for (int64_t x = std::max(lo, a.valuation()); x <= hi && x <= a.degree(); ++x) {
      const Fq c = a.coeff(x);
      if (c.v == 0) continue;
      for (int i = 0; i < e(); ++i) {
        v[static_cast<std::size_t>((x - lo) * e() + i)] =
            static_cast<uint32_t>(f->digit(c, i));
      }
    }
    return v;
  }

  Laurent from_coords(const std::vector<uint32_t>& v, int64_t lo) const {
    Laurent out(f);
    const std::size_t n = v.size() / static_cast<std::size_t>(e());
    for (std::size_t x = 0; x < n; ++x) {
      std::vector<int> digits(static_cast<std::size_t>(e()));
      bool nonzero = false;
      for (int i = 0; i < e(); ++i) {
        digits[static_cast<std::size_t>(i)] =
            static_cast<int>(v[x * static_cast<std::size_t>(e()) + static_cast<std::size_t>(i)]);
        nonzero |= digits[static_cast<std::size_t>(i)] != 0;
      }
      if (nonzero) {
        out += Laurent::monomial(f, f->from_digits(digits), lo + static_cast<int64_t>(x));
      }
    }
    return out;
  }

  std::shared_ptr<const LinearSystem> window(int64_t lambda) const {
    {
      std::lock_guard lock(mu);
      auto it = windows.find(lambda);
      if (it != windows.end()) return it->second;
    }
    auto ls = std::make_shared<LinearSystem>();
    ls->lo = lambda;
    ls->hi = top;
    const int64_t width = std::max<int64_t>(0, top - lambda + 1) * e();
    ls->sys = std::make_unique<detail::FpSystem>(static_cast<uint32_t>(f->p()),
                                                 static_cast<std::size_t>(width));
    if (width > 0) {
      for (std::size_t k = 0; k < fam.members.size(); ++k) {
        for (int64_t h = hmin(k, lambda); low_valuation(k, h) <= top; ++h) {
          for (int i = 0; i < e(); ++i) {
            const Laurent g = fam.members[k].g.evaluate_monomial(basis(i), h);
            if (g.valuation() < lambda) {
              throw Error(ErrorKind::kInvalidArgument,
                          "window generator below the window floor");
            }
            ls->gens.push_back({k, h, i});
            ls->sys->insert(coords(g, lambda, top));
          }
        }
      }
    }
    std::lock_guard lock(mu);
    return windows.emplace(lambda, std::move(ls)).first->second;
  }

  // Generators g_k(omega t^h), h in [hmin_k, h_top], with full support.
  std::shared_ptr<const LinearSystem> exact_system(int64_t lambda, int64_t h_top) const {
    const auto key = std::make_pair(lambda, h_top);
    {
      std::lock_guard lock(mu);
      auto it = exact.find(key);
      if (it != exact.end()) return it->second;
    }
    auto ls = std::make_shared<LinearSystem>();
    std::vector<Laurent> values;
    int64_t hi = lambda;
    for (std::size_t k = 0; k < fam.members.size(); ++k) {
      for (int64_t h = hmin(k, lambda); h <= h_top; ++h) {
        for (int i = 0; i < e(); ++i) {
          Laurent g = fam.members[k].g.evaluate_monomial(basis(i), h);
          if (!g.is_zero()) hi = std::max(hi, g.degree());
          ls->gens.push_back({k, h, i});
          values.push_back(std::move(g));
        }
      }
    }
    ls->lo = lambda;
    ls->hi = hi;
    ls->sys = std::make_unique<detail::FpSystem>(
        static_cast<uint32_t>(f->p()), static_cast<std::size_t>((hi - lambda + 1) * e()));
    for (const Laurent& g : values) ls->sys->insert(coords(g, lambda, hi));
    std::lock_guard lock(mu);
    return exact.emplace(key, std::move(ls)).first->second;
  }

  // Member arguments from a solution vector.
  std::vector<Laurent> arguments(const LinearSystem& ls,
                                 const std::vector<uint32_t>& comb) const {
    std::vector<Laurent> y(fam.members.size(), Laurent(f));
    for (std::size_t g = 0; g < comb.size(); ++g) {
      if (comb[g] == 0) continue;
      const GenId& id = ls.gens[g];
      y[id.member] += Laurent::monomial(
          f, f->mul(f->from_int(comb[g]), basis(id.digit)), id.h);
    }
    return y;
  }

  Laurent family_value(std::span<const Laurent> y) const {
    Laurent sum(f);
    for (std::size_t k = 0; k < y.size(); ++k) {
      if (!y[k].is_exact_zero()) sum += fam.members[k].g.evaluate(y[k]);
    }
    return sum;
  }

  int64_t floor_for(const Laurent& a) const {
    if (a.is_zero()) return min_e == kUnbounded ? 0 : min_e;
    return std::min(a.valuation(), min_e);
  }

  std::optional<Witness> exact_witness(const Laurent& a) const {
    if (!a.exact() || a.is_zero()) return std::nullopt;
    const int64_t lambda = floor_for(a);
    int64_t base = kNone;
    for (std::size_t k = 0; k < fam.members.size(); ++k) {
      base = std::max(base, ceil_div(a.degree() - bounds[k].vb, d()));
    }
    base = std::max<int64_t>(base, 0) + 2;
    for (int64_t h_top : {base, 2 * base + 4, 4 * base + 12}) {
      std::size_t count = 0;
      for (std::size_t k = 0; k < fam.members.size(); ++k) {
        count += static_cast<std::size_t>(std::max<int64_t>(0, h_top - hmin(k, lambda) + 1) * e());
      }
      if (count > kMaxExactGenerators) break;
      auto ls = exact_system(lambda, h_top);
      if (a.degree() > ls->hi) continue;
      auto red = ls->sys->reduce(coords(a, ls->lo, ls->hi));
      if (std::any_of(red.residual.begin(), red.residual.end(),
                      [](uint32_t x) { return x != 0; })) {
        continue;
      }
      const std::vector<Laurent> y = arguments(*ls, red.combination);
      Witness w;
      w.args = fam.pull_back(y);
      if (evaluate(p, w.args) != a) {
        throw Error(ErrorKind::kInvalidArgument, "exact certificate failed to verify");
      }
      w.exact = true;
      return w;
    }
    return std::nullopt;
  }

  MembershipResult decide(const Laurent& a) const {
    MembershipResult out;
    if (a.is_exact_zero()) {
      out.member = true;
      out.witness.args.assign(p.arity(), Laurent(f));
      out.witness.exact = true;
      return out;
    }
    if (!a.exact() && a.precision() <= top) {
      throw PrecisionExhausted("the element is not known up to t^" + std::to_string(top + 1),
                               top + precision);
    }
    const int64_t lambda = floor_for(a);
    auto ls = window(lambda);
    auto red = ls->sys->reduce(coords(a, lambda, top));
    for (std::size_t i = 0; i < red.residual.size(); ++i) {
      if (red.residual[i] != 0) {
        out.achieved_valuation = lambda + static_cast<int64_t>(i) / e();
        return out;
      }
    }
    out.member = true;
    if (std::optional<Witness> w = exact_witness(a)) {
      out.witness = std::move(*w);
      return out;
    }
    const std::vector<Laurent> y = arguments(*ls, red.combination);
    const Laurent rest = a - family_value(y);
    if (!rest.is_zero() && rest.valuation() <= top) {
      throw Error(ErrorKind::kInvalidArgument, "window solution left a low residual");
    }
    Witness lifted = run_lift(rest, fam, &p, pool, precision);
    const std::vector<Laurent> base = fam.pull_back(y);
    for (std::size_t i = 0; i < base.size(); ++i) lifted.args[i] += base[i];
    const Laurent diff = evaluate(p, lifted.args) - a;
    const bool ok = lifted.exact ? diff.is_exact_zero()
                                 : diff.truncated(lifted.verified_to).is_zero();
    if (!ok) throw Error(ErrorKind::kInvalidArgument, "certificate failed to verify");
    out.witness = std::move(lifted);
    return out;
  }
};

ImageAnalyzer::ImageAnalyzer(PPoly poly, int64_t precision)
    : impl_(std::make_unique<Impl>(std::move(poly), precision)) {
  Impl& m = *impl_;
  if (!separability_data(m.p).separable) {
    throw Error(ErrorKind::kNotSeparable, "the polynomial has no linear term");
  }
  Vanishing van = check_vanishes_nowhere(principal_part(m.p));
  if (!van.nowhere) throw VanishesSomewhere(std::move(van.witness));
  NormalizedFamily fam = equalize_degrees(m.p);
  if (static_cast<int64_t>(fam.size()) != fam.degree()) {
    throw Error(ErrorKind::kInfiniteRegime,
                "s = " + std::to_string(fam.size()) + " < p^M = " +
                    std::to_string(fam.degree()));
  }
  EchelonResult ech = valuation_echelonize(std::move(fam), precision);
  if (!ech.echelonized()) throw VanishesSomewhere(std::move(*ech.dependence));
  m.fam = std::move(ech.family);

  m.pool = make_pool(m.fam, &m.p);
  std::vector<LowTerm> lows;
  for (const LiftMember& x : m.pool) lows.push_back(x.low);
  m.threshold = pool_threshold(lows, m.f->p());
  m.top = m.threshold ? m.threshold->floor() : kNone;

  const int64_t d = m.d();
  for (const FamilyMember& mem : m.fam.members) {
    MemberBounds b;
    b.vb = mem.g.top().valuation();
    std::optional<Rational> dk;
    for (const auto& [sigma, lambda] : mem.g.terms()) {
      if (sigma == m.fam.nu) continue;
      const Rational r(lambda.valuation() - b.vb, d - ipow(m.f->p(), sigma));
      if (!dk || r < *dk) dk = r;
    }
    if (dk) {
      b.h0 = dk->ceil();
      b.e = kUnbounded;
      for (const auto& [sigma, lambda] : mem.g.terms()) {
        b.e = std::min(b.e, lambda.valuation() + ipow(m.f->p(), sigma) * b.h0);
      }
      m.n0 = std::min(m.n0, b.vb + d * b.h0);
    }
    m.min_e = std::min(m.min_e, b.e);
    m.bounds.push_back(b);
  }
}

ImageAnalyzer::~ImageAnalyzer() = default;
ImageAnalyzer::ImageAnalyzer(ImageAnalyzer&&) noexcept = default;
ImageAnalyzer& ImageAnalyzer::operator=(ImageAnalyzer&&) noexcept = default;

const PPoly& ImageAnalyzer::polynomial() const { return impl_->p; }
const NormalizedFamily& ImageAnalyzer::family() const { return impl_->fam; }
std::optional<Rational> ImageAnalyzer::lift_threshold() const { return impl_->threshold; }
int64_t ImageAnalyzer::window_top() const { return impl_->top; }
int64_t ImageAnalyzer::cancel_floor() const { return impl_->n0; }

MembershipResult ImageAnalyzer::decide(const Laurent& a) const { return impl_->decide(a); }

Laurent ImageAnalyzer::normal_form(const Laurent& a) const {
  const int64_t lambda = impl_->floor_for(a);
  auto ls = impl_->window(lambda);
  auto red = ls->sys->reduce(impl_->coords(a, lambda, impl_->top));
  return impl_->from_coords(red.residual, lambda);
}

QuotientReport ImageAnalyzer::quotient(std::optional<AlphaBeta> alphabeta) const {
  const Impl& m = *impl_;
  QuotientReport rep;
  rep.finite = true;
  rep.s = static_cast<int64_t>(m.fam.size());
  rep.M = m.fam.nu;
  rep.alphabeta = alphabeta;
  rep.beta_star = m.threshold;
  if (alphabeta) {
    rep.range_lo = alphabeta->alpha.ceil();
    rep.range_hi = alphabeta->beta.floor();
  } else {
    rep.range_lo = m.n0 == kUnbounded ? m.top + 1 : m.n0;
    rep.range_hi = m.top;
  }
  const int64_t u = std::max<int64_t>(0, rep.range_hi - rep.range_lo + 1);
  rep.bound = saturating_pow(m.f->q(), u);
  rep.linear_bound = static_cast<uint64_t>(m.f->q()) * static_cast<uint64_t>(u);

  int64_t lambda = std::min(rep.range_lo, m.min_e);
  if (m.top == kNone) lambda = 0;
  auto ls = m.window(lambda);
  rep.dimension = static_cast<int64_t>(ls->sys->width() - ls->sys->rank());
  const uint64_t count = saturating_pow(static_cast<uint64_t>(m.f->p()), rep.dimension);

  if (u > 0 && rep.bound <= kMaxListed) {
    // Candidates sum_m j_m t^m: zero, then by descending valuation, then
    // lexicographically in (j_v, j_{v+1}, ...).
    std::map<std::vector<uint32_t>, bool> seen;
    auto consider = [&](const Laurent& c) {
      auto red = ls->sys->reduce(m.coords(c, lambda, m.top));
      if (seen.emplace(std::move(red.residual), true).second) {
        rep.representatives.push_back(c);
      }
    };
    consider(Laurent(m.f));
    const uint32_t q = m.f->q();
    for (int64_t v = rep.range_hi; v >= rep.range_lo; --v) {
      const int64_t len = rep.range_hi - v + 1;
      std::vector<uint32_t> digits(static_cast<std::size_t>(len), 0);
      digits[0] = 1;
      for (;;) {
        std::vector<Fq> cs;
        for (uint32_t x : digits) cs.push_back(Fq{x});
        consider(Laurent(m.f, v, std::move(cs), Laurent::kInfinity));
        // next in lexicographic order with digits[0] != 0
        std::size_t pos = digits.size();
        while (pos > 0) {
          --pos;
          if (++digits[pos] < q) break;
          digits[pos] = (pos == 0) ? q : 0;
        }
        if (digits[0] >= q) break;
      }
    }
    if (rep.representatives.size() == count) return rep;
    rep.representatives.clear();
  }

  // Complement of the span: every class has exactly one representative
  // supported on the non-pivot coordinates.
  std::vector<std::size_t> free;
  std::vector<std::size_t> piv = ls->sys->pivots();
  for (std::size_t c = 0, k = 0; c < ls->sys->width(); ++c) {
    if (k < piv.size() && piv[k] == c) {
      ++k;
    } else {
      free.push_back(c);
    }
  }
  const std::size_t width = ls->sys->width();
  if (count <= kMaxListed) {
    std::vector<uint32_t> digits(free.size(), 0);
    for (uint64_t n = 0; n < count; ++n) {
      std::vector<uint32_t> v(width, 0);
      for (std::size_t i = 0; i < free.size(); ++i) v[free[i]] = digits[i];
      rep.representatives.push_back(m.from_coords(v, lambda));
      for (std::size_t i = 0; i < digits.size(); ++i) {
        if (++digits[i] < static_cast<uint32_t>(m.f->p())) break;
        digits[i] = 0;
      }
    }
  } else {
    rep.representatives_are_basis = true;
    for (std::size_t c : free) {
      std::vector<uint32_t> v(width, 0);
      v[c] = 1;
      rep.representatives.push_back(m.from_coords(v, lambda));
    }
  }
  return rep;
}

MembershipResult decide_membership(const Laurent& a, const PPoly& p, int64_t precision) {
  return ImageAnalyzer(p, precision).decide(a);
}

QuotientReport quotient(const PPoly& p, int64_t precision) {
  Finiteness fin = decide_finiteness(p);
  if (!fin.finite) {
    QuotientReport rep;
    rep.s = fin.s;
    rep.M = fin.M;
    return rep;
  }
  std::optional<AlphaBeta> ab;
  try {
    ab = alpha_beta(to_reduced_form(p).q);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::kNoTopLevelLinear) throw;
  }
  return ImageAnalyzer(p, precision).quotient(ab);
}

}  // namespace addpoly::image
