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

#ifndef ADDPOLY_IMAGECALC_HPP_
#define ADDPOLY_IMAGECALC_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "addpoly/error.hpp"
#include "addpoly/laurent.hpp"
#include "addpoly/ppoly.hpp"
#include "addpoly/rational.hpp"

namespace addpoly::image {

// g = P o back, where back[i] is the argument fed to variable i of the
// source polynomial P. Hence g(y) lies in im P for every y.
struct FamilyMember {
  Additive g;
  std::vector<Additive> back;
};

// One-variable additive polynomials g_1..g_s of common degree p^nu whose
// images sum to im P.
struct NormalizedFamily {
  FieldPtr field;
  int nu = 0;
  std::vector<FamilyMember> members;
  PrincipalPart source_principal;
  // Set once echelonization cancelled a whole top-degree term, which proves
  // that the principal part of the source has a nontrivial zero.
  bool principal_zero = false;

  int64_t degree() const;                 // p^nu
  std::size_t size() const { return members.size(); }
  std::size_t source_arity() const { return source_principal.size(); }
  std::vector<Laurent> leading() const;   // b_1..b_s
  // The members as the variables of one polynomial.
  PPoly as_ppoly() const;
  // Arguments for the source from member arguments: sum_k back_k(y_k).
  std::vector<Laurent> pull_back(std::span<const Laurent> y) const;
};

// Treats members as the variables of their own source (identity back maps).
NormalizedFamily family_of(const FieldPtr& field, std::vector<Additive> members);

// Splits every variable of degree p^m into p^(nu - m) members
// f_i(t^j Y^(p^(nu - m))), nu = max m_i. Throws LinearVariable when some
// variable has degree 1.
NormalizedFamily equalize_degrees(const PPoly& p);

struct EchelonResult {
  NormalizedFamily family;
  // A nonzero x with P_princ(x) = 0, set when a member collapsed to 0.
  std::optional<std::vector<Laurent>> dependence;

  bool echelonized() const { return !dependence.has_value(); }
};

// Cancels leading terms until the leading valuations are distinct modulo
// p^nu. A member whose degree drops is split again; a purely linear member
// makes the image all of k. Throws PrecisionExhausted when leading
// valuations grow past max_growth * p^nu without settling.
EchelonResult valuation_echelonize(NormalizedFamily fam,
                                   int64_t max_growth = Laurent::kDefaultPrecision);

struct Vanishing {
  bool nowhere = true;
  std::vector<Laurent> witness;  // x != 0 with P_princ(x) = 0 otherwise
};

// Decides whether sum_i c_i x_i^(p^(m_i)) has a nontrivial zero in k^r.
// Throws LinearVariable when some m_i = 0.
Vanishing check_vanishes_nowhere(const PrincipalPart& pp);

// Thrown by the finite-regime pipelines when the principal part has a zero.
class VanishesSomewhere : public Error {
 public:
  explicit VanishesSomewhere(std::vector<Laurent> witness)
      : Error(ErrorKind::kVanishesSomewhere,
              "the principal part vanishes at a nonzero point"),
        witness_(std::move(witness)) {}

  const std::vector<Laurent>& witness() const { return witness_; }

 private:
  std::vector<Laurent> witness_;
};

struct AlphaBeta {
  Rational alpha;
  Rational beta;
};

struct ReducedForm {
  PPoly q;                   // linear part exactly X_1
  NormalizedFamily family;   // echelonized family the change was applied to
  LinearChange change;       // maps between family and q arguments
};

// Equalize, echelonize, then change variables so that the linear part is
// exactly X_1. Throws NotSeparable, NotFiniteCase (s != p^M),
// NoTopLevelLinear (no member of top degree has a linear term) or
// VanishesSomewhere.
ReducedForm to_reduced_form(const PPoly& p);

// Bracket constants of a polynomial of shape
// sum_i c_i X_i^(p^m) + (lower terms) + X_1. Throws NotReducedForm.
AlphaBeta alpha_beta(const PPoly& q);

// Valuation beyond which cancelling the lowest term of a member always gains.
// Member g with lowest term l_0 Y^(p^s0) handles n = v(l_0) + p^s0 h whenever
// the lowest term strictly dominates g(c t^h); the result is the maximum over
// residues of the best such bound. nullopt stands for -infinity. Throws
// ResiduesNotCovered when some residue class is never handled.
std::optional<Rational> convergence_threshold(const NormalizedFamily& fam);
std::optional<Rational> lowest_term_threshold(std::span<const Additive> members);

struct Witness {
  std::vector<Laurent> args;  // arguments for the source polynomial
  bool exact = false;         // evaluate(P, args) == a exactly
  int64_t verified_to = Laurent::kInfinity;  // otherwise agreement mod t^this
};

// Cancels the lowest term of a repeatedly with members of fam and, when
// given, the variables of source. Each step strictly raises the valuation of
// the residual. Stops at an exact zero or at t^cutoff (cutoff defaults to
// N, raised to v(a) + N when v(a) >= N). Throws PrecisionExhausted when a
// residual cannot be handled.
Witness lift_beyond_threshold(const Laurent& a, const NormalizedFamily& fam,
                              const PPoly* source = nullptr,
                              int64_t precision = Laurent::kDefaultPrecision);

struct MembershipResult {
  bool member = false;
  Witness witness;                                // when member
  int64_t achieved_valuation = Laurent::kInfinity;  // max v(a - y) otherwise
};

struct Finiteness {
  bool finite = false;
  int64_t s = 0;
  int M = 0;
};

// Degree count s = sum_i p^(M - m_i) against p^M. Throws NotSeparable,
// LinearVariable or VanishesSomewhere.
Finiteness decide_finiteness(const PPoly& p);

struct QuotientReport {
  bool finite = false;
  int64_t s = 0;
  int M = 0;
  std::optional<AlphaBeta> alphabeta;
  std::optional<Rational> beta_star;  // nullopt: -infinity
  int64_t range_lo = 0;               // candidate exponents
  int64_t range_hi = -1;
  uint64_t bound = 0;        // q^u, saturating
  uint64_t linear_bound = 0;  // q * u
  int64_t dimension = 0;     // F_p-dimension of k / im P
  // Coset representatives in candidate order (0 first). When p^dimension is
  // too large to list, a basis of a complement of im P instead.
  std::vector<Laurent> representatives;
  bool representatives_are_basis = false;
};

// Decision procedure for a fixed polynomial in the finite regime. Window
// systems are cached, so one analyzer serves many queries.
class ImageAnalyzer {
 public:
  // Throws NotSeparable, LinearVariable, VanishesSomewhere or InfiniteRegime.
  explicit ImageAnalyzer(PPoly p, int64_t precision = Laurent::kDefaultPrecision);
  ~ImageAnalyzer();
  ImageAnalyzer(ImageAnalyzer&&) noexcept;
  ImageAnalyzer& operator=(ImageAnalyzer&&) noexcept;

  const PPoly& polynomial() const;
  const NormalizedFamily& family() const;
  // Threshold over the family and the source variables together.
  std::optional<Rational> lift_threshold() const;
  // Window top: floor of the lift threshold.
  int64_t window_top() const;
  // Exponent below which every term can be cancelled.
  int64_t cancel_floor() const;

  MembershipResult decide(const Laurent& a) const;
  // Canonical representative of a + im P supported in [lo, window_top()],
  // where lo <= min(v(a), cancel_floor()).
  Laurent normal_form(const Laurent& a) const;
  QuotientReport quotient(std::optional<AlphaBeta> alphabeta) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// Complete decision with a verified witness. Throws InfiniteRegime when
// s < p^M, plus the ImageAnalyzer errors.
MembershipResult decide_membership(const Laurent& a, const PPoly& p,
                                   int64_t precision = Laurent::kDefaultPrecision);

// Full quotient report; finite == false (and no representatives) when
// s < p^M.
QuotientReport quotient(const PPoly& p,
                        int64_t precision = Laurent::kDefaultPrecision);

}  // namespace addpoly::image

#endif  // ADDPOLY_IMAGECALC_HPP_
