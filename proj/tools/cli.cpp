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

#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <istream>
#include <iterator>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "addpoly/error.hpp"
#include "addpoly/imagecalc.hpp"
#include "addpoly/oracle.hpp"
#include "addpoly/parse.hpp"
#include "addpoly/rosenlicht.hpp"

namespace addpoly::cli {
namespace {

using Json = nlohmann::ordered_json;

constexpr int kSchema = 1;

struct Options {
  int p = 0;
  int e = 1;
  std::string modulus;
  int64_t prec = Laurent::kDefaultPrecision;
  std::string window;
  bool pretty = false;

  std::string polynomial;
  std::string element;
  int64_t dim = 0;
  std::string kind;
  std::string coeffs;
};

// Reported to the user as invalid input (exit 2).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

int64_t to_int(const std::string& s, const char* what) {
  try {
    std::size_t used = 0;
    const int64_t v = std::stoll(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw UsageError(std::string("bad ") + what + ": '" + s + "'");
}

FieldPtr make_field(const Options& o) {
  std::vector<int> modulus;
  if (!o.modulus.empty()) {
    for (const std::string& c : split(o.modulus, ',')) {
      modulus.push_back(static_cast<int>(to_int(c, "modulus coefficient")));
    }
  } else if (o.e > 1) {
    throw UsageError("--modulus is required when --e > 1");
  }
  return Field::make(o.p, o.e, std::move(modulus));
}

std::string read_polynomial(const std::string& arg, std::istream& in) {
  if (arg != "-") return arg;
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.pop_back();
  return text;
}

std::optional<std::pair<int64_t, int64_t>> parse_window(const std::string& w) {
  if (w.empty()) return std::nullopt;
  const std::vector<std::string> parts = split(w, ',');
  if (parts.size() != 2) throw UsageError("--window takes lo,hi");
  const int64_t lo = to_int(parts[0], "window bound");
  const int64_t hi = to_int(parts[1], "window bound");
  if (lo > hi) throw UsageError("--window needs lo <= hi");
  return std::make_pair(lo, hi);
}

Json field_json(const FieldPtr& f) {
  Json j;
  j["p"] = f->p();
  j["e"] = f->e();
  if (f->e() > 1) j["modulus"] = f->modulus();
  return j;
}

Json laurents(const std::vector<Laurent>& xs) {
  Json j = Json::array();
  for (const Laurent& x : xs) j.push_back(x.to_string());
  return j;
}

Json rational(const std::optional<Rational>& r) {
  return r ? Json(r->to_string()) : Json(nullptr);
}

Json signature_json(int p, const rosenlicht::Signature& s) {
  Json j;
  j["M"] = s.M;
  j["r"] = s.r;
  j["d"] = s.dimension();
  const auto l = rosenlicht::l_vector(p, s);
  j["l"] = l ? Json(*l) : Json(nullptr);
  return j;
}

Json window_json(const oracle::Window& w) {
  Json j;
  j["interior"] = {w.interior(), w.out_max};
  j["out"] = {w.out_min, w.out_max};
  j["h"] = {w.h_min, w.h_max};
  return j;
}

uint64_t saturating_pow(uint64_t base, int64_t exp) {
  uint64_t r = 1;
  for (int64_t i = 0; i < exp; ++i) {
    if (r > UINT64_MAX / base) return UINT64_MAX;
    r *= base;
  }
  return r;
}

void quotient_fields(Json& j, const image::QuotientReport& q, const FieldPtr& f) {
  if (q.alphabeta) {
    j["alpha"] = q.alphabeta->alpha.to_string();
    j["beta"] = q.alphabeta->beta.to_string();
  } else {
    j["alpha"] = nullptr;
    j["beta"] = nullptr;
  }
  j["beta_star"] = rational(q.beta_star);
  j["range"] = {q.range_lo, q.range_hi};
  j["bound"] = q.bound;
  j["linear_bound"] = q.linear_bound;
  j["dimension"] = q.dimension;
  const uint64_t size = saturating_pow(static_cast<uint64_t>(f->p()), q.dimension);
  j["quotient_size"] = size == UINT64_MAX ? Json(nullptr) : Json(size);
  j["representatives_are_basis"] = q.representatives_are_basis;
  j["representatives"] = laurents(q.representatives);
}

struct OracleRun {
  std::vector<oracle::Window> windows;
  std::vector<int64_t> dims;
  bool stable = false;
};

OracleRun growth(const PPoly& p) {
  OracleRun r;
  r.windows = oracle::growth_windows(p);
  for (const oracle::Window& w : r.windows) r.dims.push_back(oracle::oracle_quotient_dim(p, w));
  r.stable = r.dims.size() == 3 && r.dims[0] == r.dims[1] && r.dims[1] == r.dims[2];
  return r;
}

Json growth_json(const OracleRun& r) {
  Json j;
  j["windows"] = Json::array();
  for (const oracle::Window& w : r.windows) j["windows"].push_back(window_json(w));
  j["dims"] = r.dims;
  j["stable"] = r.stable;
  return j;
}

Json cmd_analyze(const Options& o, const PPoly& p, const std::string& input) {
  const FieldPtr& f = p.field();
  Json j;
  j["schema"] = kSchema;
  j["input"] = input;
  j["field"] = field_json(f);
  j["polynomial"] = p.to_string();
  j["separable"] = separability_data(p).separable;

  Json pp = Json::array();
  bool linear_variable = false;
  for (const PrincipalEntry& e : principal_part(p)) {
    Json t;
    t["variable"] = e.variable + 1;
    t["degree"] = ipow(f->p(), e.m);
    t["coeff"] = e.coeff.to_string();
    pp.push_back(t);
    linear_variable |= e.m == 0;
  }
  j["principal_part"] = pp;

  bool nowhere = false;
  if (linear_variable) {
    j["vanishes_nowhere"] = nullptr;
    j["vanishing_witness"] = nullptr;
    j["signature"] = nullptr;
  } else {
    const image::Vanishing v = image::check_vanishes_nowhere(principal_part(p));
    nowhere = v.nowhere;
    j["vanishes_nowhere"] = v.nowhere;
    j["vanishing_witness"] = v.nowhere ? Json(nullptr) : laurents(v.witness);
    j["signature"] = signature_json(f->p(), rosenlicht::signature_of(p));
  }

  const rosenlicht::Verdict verdict = rosenlicht::is_rosenlicht(p);
  j["rosenlicht"] = verdict.rosenlicht;
  j["rosenlicht_reason"] = verdict.rosenlicht ? Json(nullptr) : Json(verdict.explain());

  std::optional<image::QuotientReport> q;
  if (j["separable"].get<bool>() && nowhere) q = image::quotient(p, o.prec);
  if (q) {
    j["finite"] = q->finite;
    j["s"] = q->s;
    j["M"] = q->M;
  } else {
    j["finite"] = nullptr;
    j["s"] = nullptr;
    j["M"] = nullptr;
  }
  if (q && q->finite) {
    quotient_fields(j, *q, f);
  } else {
    j["alpha"] = nullptr;
    j["beta"] = nullptr;
    j["quotient_size"] = nullptr;
    j["representatives"] = Json::array();
  }
  j["consistent"] = !q || q->finite == verdict.rosenlicht;

  if (q) {
    const OracleRun run = growth(p);
    Json oj = growth_json(run);
    bool agree = run.stable == q->finite;
    if (q->finite) agree = agree && run.dims.back() == q->dimension;
    oj["agreement"] = agree;
    j["oracle"] = oj;
  } else {
    j["oracle"] = nullptr;
  }
  return j;
}

Json cmd_reduce(const Options& o, const PPoly& p) {
  const FieldPtr& f = p.field();
  const Laurent a = parse_laurent(o.element, f);
  const image::ImageAnalyzer an(p, o.prec);
  const Laurent rep = an.normal_form(a);
  const image::MembershipResult diff = an.decide(a - rep);
  if (!diff.member) {
    throw PrecisionExhausted("could not certify the representative", 2 * o.prec);
  }
  Json j;
  j["schema"] = kSchema;
  j["polynomial"] = p.to_string();
  j["element"] = a.to_string();
  j["member"] = rep.is_zero();
  j["representative"] = rep.to_string();
  j["witness"] = laurents(diff.witness.args);
  j["witness_exact"] = diff.witness.exact;
  j["verified_to"] = diff.witness.exact ? Json(nullptr) : Json(diff.witness.verified_to);
  if (rep.is_zero()) {
    j["achieved_valuation"] = nullptr;
  } else {
    j["achieved_valuation"] = an.decide(a).achieved_valuation;
  }
  return j;
}

Json cmd_quotient(const Options& o, const PPoly& p) {
  const image::QuotientReport q = image::quotient(p, o.prec);
  Json j;
  j["schema"] = kSchema;
  j["finite"] = q.finite;
  j["s"] = q.s;
  j["M"] = q.M;
  if (q.finite) quotient_fields(j, q, p.field());
  return j;
}

Json cmd_signatures(const Options& o) {
  if (o.dim < 0) throw UsageError("--dim must be nonnegative");
  Json j;
  j["schema"] = kSchema;
  j["p"] = o.p;
  j["d"] = o.dim;
  j["signatures"] = Json::array();
  for (const rosenlicht::Signature& s : rosenlicht::enumerate_signatures(o.p, o.dim)) {
    j["signatures"].push_back(signature_json(o.p, s));
  }
  return j;
}

Json cmd_generate(const Options& o) {
  const FieldPtr f = make_field(o);
  PPoly p = [&] {
    if (o.kind == "oesterle") return rosenlicht::oesterle_group(f);
    if (o.kind == "prop13") {
      if (o.coeffs.empty()) throw UsageError("prop13 needs --coeffs");
      std::vector<Laurent> c;
      for (const std::string& s : split(o.coeffs, ',')) c.push_back(parse_laurent(s, f));
      return rosenlicht::prop13_group(c);
    }
    throw UsageError("unknown group '" + o.kind + "' (expected oesterle or prop13)");
  }();
  Json j;
  j["schema"] = kSchema;
  j["kind"] = o.kind;
  j["field"] = field_json(f);
  j["polynomial"] = p.to_string();
  j["signature"] = signature_json(f->p(), rosenlicht::signature_of(p));
  return j;
}

Json cmd_oracle_check(const Options& o, const PPoly& p, bool& ok) {
  const FieldPtr& f = p.field();
  const image::QuotientReport q = image::quotient(p, o.prec);
  const OracleRun run = growth(p);
  Json j;
  j["schema"] = kSchema;
  j["polynomial"] = p.to_string();
  j["finite"] = q.finite;
  j["growth"] = growth_json(run);
  bool agree = run.stable == q.finite;
  if (q.finite) agree = agree && run.dims.back() == q.dimension;
  j["growth"]["agreement"] = agree;

  Json m;
  int64_t checked = 0, conclusive = 0, disagreements = 0;
  if (q.finite) {
    const image::ImageAnalyzer an(p, o.prec);
    const int64_t top = std::max<int64_t>(an.window_top(), 0);
    const auto [lo, hi] = parse_window(o.window).value_or(std::make_pair(top - 12, top + 4));
    const oracle::Window w = oracle::auto_window(p, lo, hi);
    m["window"] = window_json(w);
    std::mt19937_64 rng(0x5eed);
    for (int k = 0; k < 40; ++k) {
      std::vector<Fq> c;
      for (int64_t n = lo; n <= hi; ++n) {
        c.push_back(rng() % 3 == 0 ? Fq{static_cast<uint32_t>(rng() % f->q())} : f->zero());
      }
      const Laurent a(f, lo, std::move(c), Laurent::kInfinity);
      const oracle::OracleMembership om = oracle::oracle_membership(a, p, w);
      ++checked;
      if (!om.conclusive) continue;
      ++conclusive;
      if (an.decide(a).member != om.member) ++disagreements;
    }
  }
  m["checked"] = checked;
  m["conclusive"] = conclusive;
  m["disagreements"] = disagreements;
  j["membership"] = m;
  ok = agree && disagreements == 0;
  j["agreement"] = ok;
  return j;
}

Json error_json(const std::string& kind, const std::string& message) {
  Json j;
  j["schema"] = kSchema;
  j["error"] = {{"kind", kind}, {"message", message}};
  return j;
}

void emit(std::ostream& out, const Json& j, bool pretty) {
  out << (pretty ? j.dump(2) : j.dump()) << '\n';
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
                std::ostream& err) {
  Options o;
  CLI::App app{"Images of additive polynomials over F_q((t))", "addpoly"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--p", o.p, "Characteristic")->required()->check(CLI::PositiveNumber);
  app.add_option("--e", o.e, "Residue field degree, q = p^e")->check(CLI::PositiveNumber);
  app.add_option("--modulus", o.modulus,
                 "Primitive modulus, low-to-high coefficients \"c0,...,ce\" (needed when e > 1)");
  app.add_option("--prec", o.prec, "Working t-adic precision")->check(CLI::PositiveNumber);
  app.add_option("--window", o.window, "Oracle window \"lo,hi\" for membership sampling");
  app.add_flag("--json", "Compact JSON output (default)");
  app.add_flag("--pretty", o.pretty, "Indented JSON output");

  auto* analyze = app.add_subcommand("analyze", "Full report for a polynomial");
  analyze->add_option("polynomial", o.polynomial, "Polynomial, or - for standard input")->required();
  auto* reduce = app.add_subcommand("reduce", "Coset representative of an element modulo im P");
  reduce->add_option("--element", o.element, "Laurent polynomial in t")->required();
  reduce->add_option("polynomial", o.polynomial, "Polynomial, or - for standard input")->required();
  auto* quot = app.add_subcommand("quotient", "The group k / im P");
  quot->add_option("polynomial", o.polynomial, "Polynomial, or - for standard input")->required();
  auto* sigs = app.add_subcommand("signatures", "Rosenlicht signatures of a given dimension");
  sigs->add_option("--dim", o.dim, "Dimension d")->required();
  auto* gen = app.add_subcommand(
      "generate",
      "Example groups. oesterle: x_0^p + t x_1^p + ... + t^(p-1) x_(p-1)^p = x_(p-1) with x_i "
      "renamed T_(i+1). prop13: c_1 T_1^p + ... + c_p T_p^p + T_p for a k^p-basis c.");
  gen->add_option("kind", o.kind, "oesterle or prop13")->required();
  gen->add_option("--coeffs", o.coeffs, "Comma-separated c_1,...,c_p for prop13");
  auto* check = app.add_subcommand("oracle-check", "Compare the decision procedure with the oracle");
  check->add_option("polynomial", o.polynomial, "Polynomial, or - for standard input")->required();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "addpoly: " << e.what() << '\n';
    emit(out, error_json("UsageError", e.what()), o.pretty);
    return kExitInvalidInput;
  }

  try {
    Json result;
    int code = kExitOk;
    if (*sigs) {
      result = cmd_signatures(o);
    } else if (*gen) {
      result = cmd_generate(o);
    } else {
      const FieldPtr f = make_field(o);
      const std::string src = read_polynomial(o.polynomial, in);
      const PPoly p = parse_ppoly(src, f);
      if (*analyze) {
        result = cmd_analyze(o, p, src);
      } else if (*reduce) {
        result = cmd_reduce(o, p);
      } else if (*quot) {
        result = cmd_quotient(o, p);
      } else {
        bool ok = true;
        result = cmd_oracle_check(o, p, ok);
        if (!ok) {
          err << "addpoly: oracle disagreement\n";
          code = kExitCheckFailed;
        }
      }
    }
    emit(out, result, o.pretty);
    return code;
  } catch (const PrecisionExhausted& e) {
    err << "addpoly: " << e.what() << "; retry with --prec " << e.suggested_precision() << '\n';
    Json j = error_json(to_string(e.kind()), e.what());
    j["error"]["suggested_precision"] = e.suggested_precision();
    emit(out, j, o.pretty);
    return kExitPrecision;
  } catch (const ParseError& e) {
    err << "addpoly: " << e.what() << '\n';
    Json j = error_json(to_string(e.kind()), e.what());
    j["error"]["position"] = e.position();
    emit(out, j, o.pretty);
    return kExitInvalidInput;
  } catch (const rosenlicht::NotABasis& e) {
    err << "addpoly: " << e.what() << '\n';
    Json j = error_json(to_string(e.kind()), e.what());
    j["error"]["witness"] = laurents(e.witness());
    emit(out, j, o.pretty);
    return kExitInvalidInput;
  } catch (const image::VanishesSomewhere& e) {
    err << "addpoly: " << e.what() << '\n';
    Json j = error_json(to_string(e.kind()), e.what());
    j["error"]["witness"] = laurents(e.witness());
    emit(out, j, o.pretty);
    return kExitInvalidInput;
  } catch (const Error& e) {
    err << "addpoly: " << e.what() << '\n';
    emit(out, error_json(to_string(e.kind()), e.what()), o.pretty);
    return kExitInvalidInput;
  } catch (const UsageError& e) {
    err << "addpoly: " << e.what() << '\n';
    emit(out, error_json("UsageError", e.what()), o.pretty);
    return kExitInvalidInput;
  }
}

}  // namespace addpoly::cli
