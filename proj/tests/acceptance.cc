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

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on failure.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "addpoly/imagecalc.hpp"
#include "addpoly/oracle.hpp"
#include "addpoly/parse.hpp"
#include "addpoly/rosenlicht.hpp"
#include "cli.hpp"
#include "test_util.hpp"

namespace addpoly {
namespace {

using image::AlphaBeta;
using image::MembershipResult;
using image::QuotientReport;
using rosenlicht::Signature;
using testing::random_laurent;
using testing::random_nonzero_fq;

struct Outcome {
  bool ok = true;
  std::string detail;
};

// Collects the first failure message; later checks still run.
class Checker {
 public:
  void expect(bool cond, const std::string& what) {
    ++checks_;
    if (!cond && ok_) {
      ok_ = false;
      first_ = what;
    }
  }
  Outcome done(const std::string& summary) const {
    return {ok_, ok_ ? summary : first_ + " (" + summary + ")"};
  }
  int checks() const { return checks_; }

 private:
  bool ok_ = true;
  int checks_ = 0;
  std::string first_;
};

// Every r with r_1 >= 1, sum r_i = d + 1 and sum p^(i-1) r_i = p^M, by
// depth-first search with weight bounds.
std::vector<Signature> brute_signatures(int p, int64_t d) {
  std::vector<Signature> out;
  if (d <= 0) return out;
  for (int M = 1; M <= d + 1; ++M) {
    const int64_t target = ipow(p, M);
    if (target > (d + 1) * ipow(p, M - 1)) break;
    std::vector<int64_t> r(static_cast<std::size_t>(M), 0);
    std::function<void(int, int64_t, int64_t)> go = [&](int i, int64_t left, int64_t weight) {
      const int64_t unit = ipow(p, i);
      if (i == M - 1) {
        if (weight + left * unit == target && (M > 1 || left >= 1)) {
          r[static_cast<std::size_t>(i)] = left;
          out.push_back(Signature{M, r});
        }
        return;
      }
      for (int64_t c = i == 0 ? 1 : 0; c <= left; ++c) {
        const int64_t w = weight + c * unit;
        if (w > target) break;
        // Later terms are multiples of p^(i+1), and so is the target.
        if (w % ipow(p, i + 1) != 0) continue;
        // The rest weighs between (left - c) p^(i+1) and (left - c) p^(M-1).
        if (w + (left - c) * ipow(p, i + 1) > target) continue;
        if (w + (left - c) * ipow(p, M - 1) < target) continue;
        r[static_cast<std::size_t>(i)] = c;
        go(i + 1, left - c, w);
      }
    };
    go(0, d + 1, 0);
  }
  std::sort(out.begin(), out.end(), [](const Signature& a, const Signature& b) {
    return a.M != b.M ? a.M < b.M : a.r < b.r;
  });
  return out;
}

Signature sig(int M, std::vector<int64_t> r) { return Signature{M, std::move(r)}; }

Outcome signature_tables() {
  Checker c;
  for (int p : {2, 3, 5}) {
    c.expect(rosenlicht::enumerate_signatures(p, p - 1) == std::vector<Signature>{sig(1, {p})},
             "k=1 table for p=" + std::to_string(p));
    c.expect(rosenlicht::enumerate_signatures(p, 2 * (p - 1)) ==
                 std::vector<Signature>{sig(2, {p, p - 1})},
             "k=2 table for p=" + std::to_string(p));
    for (int64_t k = 1; k <= 6; ++k) {
      const int64_t d = k * (p - 1);
      const auto e = rosenlicht::enumerate_signatures(p, d);
      c.expect(e == brute_signatures(p, d),
               "brute-force mismatch at p=" + std::to_string(p) + " k=" + std::to_string(k));
    }
  }
  c.expect(rosenlicht::enumerate_signatures(3, 6) ==
               std::vector<Signature>{sig(2, {6, 1}), sig(3, {3, 2, 2})},
           "k=3 table for p=3");
  return c.done(std::to_string(c.checks()) + " checks, counts k<=6 match brute force");
}

// Degrees p^m_i packed from low to high, with residues of the leading
// valuations chosen so that no principal cancellation is possible.
struct CosetFamily {
  PPoly poly;
  int M = 0;
  int64_t s = 0;
};

// Picks disjoint residue cosets a + p^m Z inside Z / p^M and gives one
// variable c t^v T^(p^m) to each, v in the coset. Full coverage iff s = p^M.
std::optional<CosetFamily> coset_family(const FieldPtr& f, std::mt19937_64& rng, int M,
                                        bool full, bool linear) {
  const int p = f->p();
  const int64_t n = ipow(p, M);
  std::vector<bool> covered(static_cast<std::size_t>(n), false);
  std::vector<Additive> parts;
  int64_t s = 0;
  int top = 0;
  for (int attempt = 0; attempt < 200 && s < n; ++attempt) {
    if (!full && !parts.empty() && rng() % 3 == 0) break;
    const int m = 1 + static_cast<int>(rng() % static_cast<uint64_t>(M));
    const int64_t step = ipow(p, m);
    const int64_t a = static_cast<int64_t>(rng() % static_cast<uint64_t>(step));
    bool free = true;
    for (int64_t x = a; x < n; x += step) free = free && !covered[static_cast<std::size_t>(x)];
    if (!free) continue;
    for (int64_t x = a; x < n; x += step) covered[static_cast<std::size_t>(x)] = true;
    const int64_t v = a + step * (static_cast<int64_t>(rng() % 2) - 1);
    Laurent coeff = Laurent::monomial(f, random_nonzero_fq(*f, rng), v) + random_laurent(f, rng, v + 1, v + 2);
    parts.push_back(Additive::monomial(coeff, m));
    top = std::max(top, m);
  }
  if (parts.empty() || (full && std::count(covered.begin(), covered.end(), false) > 0)) return std::nullopt;
  for (const Additive& g : parts) s += ipow(p, top - g.top_index());
  if (linear) {
    const std::size_t i = rng() % parts.size();
    parts[i].add_term(0, Laurent::monomial(f, random_nonzero_fq(*f, rng), static_cast<int64_t>(rng() % 3) - 1));
  }
  std::shuffle(parts.begin(), parts.end(), rng);
  return CosetFamily{PPoly(f, std::move(parts)), top, s};
}

Outcome dimension_divisibility() {
  Checker c;
  for (int p : {2, 3, 5}) {
    for (int64_t d = 1; d <= 20; ++d) {
      if (d % (p - 1) == 0) continue;
      c.expect(rosenlicht::enumerate_signatures(p, d).empty(),
               "nonempty table at p=" + std::to_string(p) + " d=" + std::to_string(d));
    }
  }
  std::mt19937_64 rng(7);
  int cases = 0;
  int weight_checked = 0;
  while (cases < 50) {
    const int p = cases % 2 ? 5 : 3;
    FieldPtr f = Field::make(p);
    const int r = 2 + static_cast<int>(rng() % 6);
    if ((r - 1) % (p - 1) == 0) continue;
    std::vector<Additive> parts;
    for (int i = 0; i < r; ++i) {
      const int m = 1 + static_cast<int>(rng() % 2);
      const int64_t v = static_cast<int64_t>(rng() % 7) - 3;
      Additive g = Additive::monomial(Laurent::monomial(f, random_nonzero_fq(*f, rng), v), m);
      if (i == 0) g.add_term(0, Laurent::t_power(f, 0));
      parts.push_back(std::move(g));
    }
    const rosenlicht::Verdict v = rosenlicht::is_rosenlicht(PPoly(f, std::move(parts)));
    c.expect(!v.rosenlicht, "accepted dimension " + std::to_string(r - 1) + " at p=" + std::to_string(p));
    if (v.reason == rosenlicht::Reason::kWeightMismatch) ++weight_checked;
    ++cases;
  }
  return c.done("50 random polynomials rejected, " + std::to_string(weight_checked) +
                " reached the weight test");
}

Outcome count_bound_and_finiteness() {
  Checker c;
  std::mt19937_64 rng(41);
  int families = 0;
  while (families < 200) {
    const int p = families % 3 == 0 ? 3 : 2;
    FieldPtr f = Field::make(p);
    const auto fam = coset_family(f, rng, p == 2 ? 1 + static_cast<int>(rng() % 3) : 1 + static_cast<int>(rng() % 2),
                                  rng() % 2, false);
    if (!fam) continue;
    const PrincipalPart pp = principal_part(fam->poly);
    const image::Vanishing res = image::check_vanishes_nowhere(pp);
    c.expect(res.nowhere, "coset family vanishes: " + fam->poly.to_string());
    const image::NormalizedFamily norm = image::equalize_degrees(fam->poly);
    c.expect(static_cast<int64_t>(norm.size()) == fam->s, "member count != s");
    c.expect(fam->s <= ipow(p, fam->M), "s > p^M for " + fam->poly.to_string());
    ++families;
  }
  int sampled = 0;
  int finite = 0;
  while (sampled < 20) {
    const int p = sampled % 4 == 3 ? 3 : 2;
    FieldPtr f = Field::make(p);
    const auto fam = coset_family(f, rng, p == 2 ? 1 + static_cast<int>(rng() % 2) : 1, sampled % 2 == 0, true);
    if (!fam) continue;
    const image::Finiteness verdict = image::decide_finiteness(fam->poly);
    const std::vector<int64_t> d = oracle::growth_dims(fam->poly);
    const bool stable = d[0] == d[1] && d[1] == d[2];
    const bool growing = d[0] < d[1] && d[1] < d[2];
    c.expect(verdict.finite ? stable : growing, "oracle disagrees on " + fam->poly.to_string());
    if (verdict.finite) ++finite;
    ++sampled;
  }
  return c.done("200 families satisfy s <= p^M; 20 verdicts (" + std::to_string(finite) +
                " finite) agree with window growth");
}

Outcome oesterle_finite() {
  Checker c;
  std::string counts;
  for (int p : {2, 3}) {
    FieldPtr f = Field::make(p);
    const PPoly g = rosenlicht::oesterle_group(f);
    const QuotientReport q = rosenlicht::h1_report(g);
    c.expect(q.finite, "p=" + std::to_string(p) + " not finite");
    const std::vector<int64_t> d = oracle::growth_dims(g);
    c.expect(d[0] == d[1] && d[1] == d[2], "oracle windows not stable at p=" + std::to_string(p));
    const int64_t expected = ipow(p, static_cast<int>(d.back()));
    c.expect(static_cast<int64_t>(q.representatives.size()) == expected,
             "representative count at p=" + std::to_string(p));
    counts += (counts.empty() ? "" : ", ") + std::string("p=") + std::to_string(p) + ": " +
              std::to_string(q.representatives.size());
  }
  return c.done("representative counts " + counts + " match the oracle");
}

Outcome infinite_case() {
  Checker c;
  FieldPtr f = Field::make(3);
  const PPoly g = parse_ppoly("T1^3 + t*T2^3 + T2", f);
  const QuotientReport q = image::quotient(g);
  c.expect(!q.finite && q.s == 2 && q.M == 1, "quotient report not Infinite with s=2, M=1");
  const std::vector<oracle::Window> ws = oracle::growth_windows(g);
  for (std::size_t k = 0; k < ws.size(); ++k) {
    c.expect(ws[k].out_max - ws[k].interior() == 6 * static_cast<int64_t>(k + 1), "window width");
  }
  const std::vector<int64_t> d = oracle::growth_dims(g);
  c.expect(d[0] < d[1] && d[1] < d[2], "dims not strictly increasing");
  return c.done("dims " + std::to_string(d[0]) + " < " + std::to_string(d[1]) + " < " + std::to_string(d[2]));
}

bool certifies(const PPoly& p, const image::Witness& w, const Laurent& a) {
  return w.exact && (evaluate(p, w.args) - a).is_exact_zero();
}

Outcome valuation_bracket() {
  Checker c;
  FieldPtr f = Field::make(2);
  const PPoly g = rosenlicht::oesterle_group(f);
  const AlphaBeta ab = image::alpha_beta(image::to_reduced_form(g).q);
  c.expect(ab.alpha == Rational(-1) && ab.beta == Rational(-1), "alpha, beta != -1");
  std::mt19937_64 rng(61);
  int non_members = 0, above = 0;
  for (int k = 0; k < 100; ++k) {
    const int64_t lo = k % 2 ? 0 : -6;
    const Laurent a = testing::random_nonzero_laurent(f, rng, lo, 6);
    const MembershipResult r = image::decide_membership(a, g);
    if (!r.member) {
      ++non_members;
      c.expect(r.achieved_valuation >= ab.alpha.ceil() && r.achieved_valuation <= ab.beta.floor(),
               "achieved valuation outside the bracket for " + a.to_string());
    }
    if (Rational(a.valuation()) > ab.beta) {
      ++above;
      c.expect(r.member && certifies(g, r.witness, a), "no verified witness for " + a.to_string());
    }
  }
  return c.done(std::to_string(non_members) + " non-members in bracket, " + std::to_string(above) +
                " elements above beta certified");
}

// A finite-case polynomial: all residues mod p^M covered, plus a linear term.
PPoly random_finite(std::mt19937_64& rng, int p, int M) {
  FieldPtr f = Field::make(p);
  for (;;) {
    if (auto fam = coset_family(f, rng, M, true, true)) return fam->poly;
  }
}

Outcome soundness() {
  Checker c;
  std::mt19937_64 rng(71);
  int certificates = 0;
  while (certificates < 1000) {
    const int p = certificates % 200 < 100 ? 2 : 3;
    const PPoly g = random_finite(rng, p, p == 2 ? 1 + static_cast<int>(rng() % 2) : 1);
    const image::ImageAnalyzer an(g);
    for (int k = 0; k < 20; ++k) {
      std::vector<Laurent> x;
      for (std::size_t i = 0; i < g.arity(); ++i) x.push_back(random_laurent(g.field(), rng, -4, 4));
      const Laurent a = evaluate(g, x);
      const MembershipResult r = an.decide(a);
      c.expect(r.member && certifies(g, r.witness, a), "certificate failed for " + a.to_string() +
                                                           " under " + g.to_string());
      ++certificates;
    }
  }
  int compared = 0, disagreements = 0;
  for (int trial = 0; compared < 100; ++trial) {
    const int p = trial % 2 ? 3 : 2;
    const PPoly g = random_finite(rng, p, 1);
    const image::ImageAnalyzer an(g);
    const int64_t hi = std::max<int64_t>(3, an.window_top());
    const oracle::Window w = oracle::auto_window(g, -6, hi);
    for (int k = 0; k < 5 && compared < 100; ++k) {
      const Laurent a = random_laurent(g.field(), rng, -6, hi);
      const oracle::OracleMembership o = oracle::oracle_membership(a, g, w);
      if (!o.conclusive) continue;
      ++compared;
      if (an.decide(a).member != o.member) ++disagreements;
    }
  }
  c.expect(disagreements == 0, std::to_string(disagreements) + " oracle disagreements");
  return c.done("1000 certificates exact, " + std::to_string(compared) + " oracle comparisons");
}

// x_i := x_i + u x_j, which fixes the image.
std::optional<PPoly> shear(const PPoly& g, std::size_t i, std::size_t j, const Laurent& u) {
  std::vector<Additive> parts = g.parts();
  Additive moved(g.field());
  for (const auto& [k, coeff] : g.part(i).terms()) moved.add_term(k, coeff * u.frobenius(k));
  parts[j] = parts[j] + moved;
  if (parts[j].is_zero()) return std::nullopt;
  return PPoly(g.field(), std::move(parts));
}

Outcome image_preservation() {
  Checker c;
  std::mt19937_64 rng(81);
  int cases = 0, sheared = 0;
  while (cases < 50) {
    const int p = cases % 2 ? 3 : 2;
    PPoly g = random_finite(rng, p, p == 2 ? 1 + static_cast<int>(rng() % 2) : 1);
    if (g.arity() > 1 && rng() % 2) {
      const std::size_t i = rng() % g.arity();
      const std::size_t j = (i + 1 + rng() % (g.arity() - 1)) % g.arity();
      const Laurent u = Laurent::monomial(g.field(), random_nonzero_fq(*g.field(), rng),
                                          static_cast<int64_t>(rng() % 3) - 1);
      auto h = shear(g, i, j, u);
      if (!h) continue;
      g = *h;
      ++sheared;
    }
    const image::NormalizedFamily fam = image::equalize_degrees(g);
    const image::EchelonResult ech = image::valuation_echelonize(fam);
    if (!ech.echelonized()) continue;
    const PPoly fp = fam.as_ppoly();
    const PPoly ep = ech.family.as_ppoly();
    const auto pivot = pivot_by_valuation(ep);
    if (!pivot) continue;
    std::vector<Laurent> a;
    for (std::size_t k = 0; k < ep.arity(); ++k) a.push_back(ep.part(k).coefficient(0));
    const PPoly lq = linear_change(ep, a, *pivot).q;
    oracle::Window w = oracle::auto_window(g, -6, 6);
    for (const PPoly* q : {&fp, &ep, &lq}) {
      const oracle::Window v = oracle::auto_window(*q, -6, 6);
      w.out_min = std::min(w.out_min, v.out_min);
      w.h_min = std::min(w.h_min, v.h_min);
      w.h_max = std::max(w.h_max, v.h_max);
    }
    const oracle::Span base = oracle::image_span(g, w);
    c.expect(oracle::image_span(fp, w) == base, "equalize_degrees changed the span of " + g.to_string());
    c.expect(oracle::image_span(ep, w) == base, "valuation_echelonize changed the span of " + g.to_string());
    c.expect(oracle::image_span(lq, w) == base, "linear_change changed the span of " + g.to_string());
    ++cases;
  }
  return c.done("50 polynomials (" + std::to_string(sheared) + " sheared), spans identical");
}

Outcome additivity() {
  Checker c;
  std::mt19937_64 rng(91);
  for (int i = 0; i < 1000; ++i) {
    FieldPtr f = Field::make(i % 3 == 0 ? 2 : (i % 3 == 1 ? 3 : 5));
    const std::size_t r = 1 + rng() % 3;
    const PPoly g = testing::random_ppoly(f, rng, r, 2, -3, 3);
    std::vector<Laurent> x, y, s, lx;
    const Fq lambda = f->from_int(static_cast<int64_t>(rng() % static_cast<uint64_t>(f->p())));
    for (std::size_t k = 0; k < r; ++k) {
      x.push_back(random_laurent(f, rng, -4, 4));
      y.push_back(random_laurent(f, rng, -4, 4));
      s.push_back(x.back() + y.back());
      lx.push_back(x.back().scaled(lambda));
    }
    c.expect(evaluate(g, s) == evaluate(g, x) + evaluate(g, y), "additivity fails for " + g.to_string());
    c.expect(evaluate(g, lx) == evaluate(g, x).scaled(lambda), "linearity fails for " + g.to_string());
  }
  return c.done("1000 additivity and 1000 linearity cases");
}

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

Outcome cli_goldens() {
  Checker c;
  const std::vector<std::pair<std::vector<std::string>, std::string>> runs = {
      {{"--p", "2", "analyze", "T1^2 + t*T2^2 + T2"}, "analyze_oesterle_p2.json"},
      {{"--p", "3", "signatures", "--dim", "6"}, "signatures_p3_d6.json"},
      {{"--p", "3", "quotient", "T1^3 + t*T2^3 + T2"}, "quotient_p3_infinite.json"},
  };
  for (const auto& [args, golden] : runs) {
    std::istringstream in;
    std::ostringstream out, err;
    const int code = cli::run_command(args, in, out, err);
    c.expect(code == cli::kExitOk, golden + ": exit " + std::to_string(code));
    c.expect(out.str() == read_file(std::string(ADDPOLY_GOLDEN_DIR) + "/" + golden), golden + " differs");
  }
  return c.done("3 outputs byte-identical");
}

}  // namespace
}  // namespace addpoly

int main() {
  using Criterion = std::pair<const char*, addpoly::Outcome (*)()>;
  const std::vector<Criterion> criteria = {
      {"signature tables", addpoly::signature_tables},
      {"dimension divisibility", addpoly::dimension_divisibility},
      {"count bound and finiteness", addpoly::count_bound_and_finiteness},
      {"Oesterle groups finite", addpoly::oesterle_finite},
      {"infinite case", addpoly::infinite_case},
      {"valuation bracket", addpoly::valuation_bracket},
      {"membership soundness", addpoly::soundness},
      {"image preservation", addpoly::image_preservation},
      {"additivity and linearity", addpoly::additivity},
      {"CLI goldens", addpoly::cli_goldens},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    addpoly::Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] %zu %s: %s (%.1fs)\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].first,
                o.detail.c_str(), secs);
    std::fflush(stdout);
    if (!o.ok) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
