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

#include <gtest/gtest.h>

#include <optional>
#include <random>

#include "addpoly/error.hpp"
#include "addpoly/parse.hpp"
#include "test_util.hpp"

namespace addpoly {
namespace {

using testing::poly;
using testing::random_laurent;
using testing::random_ppoly;
using testing::tp;

TEST(PPolyTest, Evaluate) {
  FieldPtr f2 = Field::make(2);
  const PPoly p = parse_ppoly("T1^2 + t*T2^2 + T2", f2);
  std::vector<Laurent> x{tp(f2, 1), tp(f2, 0)};
  EXPECT_EQ(evaluate(p, x), poly(f2, {{2, 1}, {1, 1}, {0, 1}}));
  std::vector<Laurent> zero(2, Laurent(f2));
  EXPECT_TRUE(evaluate(p, zero).is_exact_zero());

  FieldPtr f3 = Field::make(3);
  const PPoly q = parse_ppoly("T1^3 + t*T2^3 + t^2*T3^3 - T3", f3);
  std::vector<Laurent> y{Laurent(f3), Laurent(f3), tp(f3, 0)};
  EXPECT_EQ(evaluate(q, y), poly(f3, {{2, 1}, {0, -1}}));

  std::vector<Laurent> wrong{tp(f3, 0)};
  try {
    evaluate(q, wrong);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kArityMismatch);
  }
}

TEST(PPolyTest, PrincipalPart) {
  FieldPtr f = Field::make(2);
  PrincipalPart a = principal_part(parse_ppoly("T1^2 + t*T2^2 + T2", f));
  ASSERT_EQ(a.size(), 2u);
  EXPECT_EQ(a[0].variable, 0u);
  EXPECT_EQ(a[0].m, 1);
  EXPECT_EQ(a[0].coeff, tp(f, 0));
  EXPECT_EQ(a[1].variable, 1u);
  EXPECT_EQ(a[1].m, 1);
  EXPECT_EQ(a[1].coeff, tp(f, 1));

  PrincipalPart b = principal_part(parse_ppoly("T1^4 + T1 + t*T2^2", f));
  EXPECT_EQ(b[0].m, 2);
  EXPECT_EQ(b[0].coeff, tp(f, 0));
  EXPECT_EQ(b[1].m, 1);
  EXPECT_EQ(b[1].coeff, tp(f, 1));

  PrincipalPart c = principal_part(parse_ppoly("T1", f));
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c[0].m, 0);
}

TEST(PPolyTest, Separability) {
  FieldPtr f = Field::make(2);
  SeparabilityData a = separability_data(parse_ppoly("T1^2 + T2", f));
  EXPECT_TRUE(a.separable);
  ASSERT_EQ(a.linear_coeffs.size(), 1u);
  EXPECT_EQ(a.linear_coeffs.at(1), tp(f, 0));

  EXPECT_FALSE(separability_data(parse_ppoly("T1^2 + t*T2^2", f)).separable);

  for (int p : {2, 3, 5}) {
    FieldPtr fp = Field::make(p);
    std::string src;
    for (int i = 0; i < p; ++i) {
      src += "t^" + std::to_string(i) + "*T" + std::to_string(i + 1) + "^" +
             std::to_string(p) + " + ";
    }
    src += "(-1)*T" + std::to_string(p);
    SeparabilityData d = separability_data(parse_ppoly(src, fp));
    EXPECT_TRUE(d.separable);
    ASSERT_EQ(d.linear_coeffs.size(), 1u);
    EXPECT_EQ(d.linear_coeffs.at(static_cast<std::size_t>(p - 1)),
              Laurent::constant(fp, fp->from_int(-1)));
  }
}

TEST(PPolyTest, SubstituteMonomial) {
  FieldPtr f = Field::make(2);
  const Additive sq = Additive::monomial(tp(f, 0), 1);
  const Additive g = substitute_monomial(sq, 1, 1);
  EXPECT_EQ(g, Additive::monomial(tp(f, 2), 2));

  Additive h = sq;
  h.add_term(0, tp(f, 0));
  EXPECT_EQ(substitute_monomial(h, 0, 0), h);

  Additive expected(f);
  expected.add_term(2, tp(f, 2));
  expected.add_term(1, tp(f, 1));
  EXPECT_EQ(substitute_monomial(h, 1, 1), expected);
}

TEST(PPolyTest, SubstituteMonomialImageContainment) {
  std::mt19937_64 rng(8);
  for (int p : {2, 3}) {
    FieldPtr f = Field::make(p);
    for (int i = 0; i < 100; ++i) {
      const Additive a = random_ppoly(f, rng, 1, 2, -2, 2).part(0);
      const int64_t j = static_cast<int64_t>(rng() % 5) - 2;
      const int h = static_cast<int>(rng() % 3);
      const Laurent y = random_laurent(f, rng, -3, 3);
      const Laurent inner = tp(f, j) * y.frobenius(h);
      EXPECT_EQ(substitute_monomial(a, j, h).evaluate(y), a.evaluate(inner));
    }
  }
}

TEST(PPolyTest, LinearChangeExample) {
  FieldPtr f = Field::make(2);
  const PPoly p = parse_ppoly("t*T1^2 + T2^2 + T2", f);
  const auto a = separability_data(p);
  std::vector<Laurent> coeffs{Laurent(f), a.linear_coeffs.at(1)};
  const LinearChange lc = linear_change(p, coeffs, 1);
  EXPECT_EQ(lc.q, parse_ppoly("T1^2 + T1 + t*T2^2", f));
  EXPECT_EQ(lc.q.to_string(), "T1^2 + T1 + t*T2^2");
}

TEST(PPolyTest, LinearChangeIdentityOnReducedShape) {
  FieldPtr f = Field::make(2);
  const PPoly p = parse_ppoly("T1^2 + T1 + t*T2^2", f);
  std::vector<Laurent> coeffs{tp(f, 0), Laurent(f)};
  EXPECT_EQ(linear_change(p, coeffs, 0).q, p);
}

TEST(PPolyTest, LinearChangeErrors) {
  FieldPtr f = Field::make(2);
  const PPoly p = parse_ppoly("T1^4 + T1 + t*T2^2", f);
  std::vector<Laurent> coeffs{tp(f, 0), Laurent(f)};
  try {
    linear_change(p, coeffs, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kNotEqualDegree);
  }
  const PPoly q = parse_ppoly("T1^2 + T1 + t*T2^2", f);
  try {
    linear_change(q, coeffs, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kZeroPivot);
  }
}

TEST(PPolyTest, PivotByValuation) {
  FieldPtr f = Field::make(2);
  EXPECT_EQ(pivot_by_valuation(parse_ppoly("t*T1^2 + T2^2 + T1 + T2", f)), 0u);
  EXPECT_EQ(pivot_by_valuation(parse_ppoly("t*T1^2 + T2^2 + T2", f)), 1u);
  EXPECT_EQ(pivot_by_valuation(parse_ppoly("t*T1^2 + T2^2", f)), std::nullopt);
}

TEST(PPolyTest, LinearChangePreservesValues) {
  std::mt19937_64 rng(31);
  for (int p : {2, 3}) {
    FieldPtr f = Field::make(p);
    int checked = 0;
    while (checked < 100) {
      const std::size_t r = 1 + rng() % 3;
      std::vector<Additive> parts;
      for (std::size_t i = 0; i < r; ++i) {
        Additive a(f);
        a.add_term(1, testing::random_nonzero_laurent(f, rng, -2, 2));
        if (rng() % 2) a.add_term(0, random_laurent(f, rng, -2, 2));
        parts.push_back(a);
      }
      const PPoly pp(f, parts);
      const auto i0 = pivot_by_valuation(pp);
      if (!i0) continue;
      std::vector<Laurent> coeffs;
      for (std::size_t i = 0; i < r; ++i) coeffs.push_back(pp.part(i).coefficient(0));
      std::optional<LinearChange> change;
      try {
        change = linear_change(pp, coeffs, *i0);
      } catch (const Error& e) {
        // A variable can cancel completely; nothing to compare then.
        ASSERT_EQ(e.kind(), ErrorKind::kNotEqualDegree);
        continue;
      }
      const LinearChange& lc = *change;
      std::vector<Laurent> t;
      for (std::size_t i = 0; i < r; ++i) t.push_back(random_laurent(f, rng, -3, 3));
      const std::vector<Laurent> x = lc.forward(t);
      const Laurent lhs = evaluate(pp, t);
      const Laurent rhs = evaluate(lc.q, x);
      const int64_t prec = std::min(lhs.precision(), rhs.precision());
      EXPECT_TRUE((lhs - rhs).truncated(prec).is_zero());
      EXPECT_GE(prec, 20);
      const std::vector<Laurent> back = lc.backward(x);
      for (std::size_t i = 0; i < r; ++i) {
        const int64_t bp = back[i].precision();
        EXPECT_TRUE((back[i] - t[i]).truncated(bp).is_zero());
      }
      ++checked;
    }
  }
}

TEST(PPolyTest, Additivity) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 1000; ++i) {
    const int p = (i % 3 == 0) ? 2 : (i % 3 == 1 ? 3 : 5);
    FieldPtr f = Field::make(p);
    const std::size_t r = 1 + rng() % 3;
    const PPoly pp = random_ppoly(f, rng, r, 2, -3, 3);
    std::vector<Laurent> x, y, s;
    for (std::size_t k = 0; k < r; ++k) {
      x.push_back(random_laurent(f, rng, -4, 4));
      y.push_back(random_laurent(f, rng, -4, 4));
      s.push_back(x.back() + y.back());
    }
    EXPECT_EQ(evaluate(pp, s), evaluate(pp, x) + evaluate(pp, y));
  }
}

TEST(PPolyTest, FpLinearity) {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 1000; ++i) {
    const int p = (i % 3 == 0) ? 2 : (i % 3 == 1 ? 3 : 5);
    FieldPtr f = Field::make(p);
    const std::size_t r = 1 + rng() % 3;
    const PPoly pp = random_ppoly(f, rng, r, 2, -3, 3);
    const Fq lambda = f->from_int(static_cast<int64_t>(rng() % static_cast<uint64_t>(p)));
    std::vector<Laurent> x, lx;
    for (std::size_t k = 0; k < r; ++k) {
      x.push_back(random_laurent(f, rng, -4, 4));
      lx.push_back(x.back().scaled(lambda));
    }
    EXPECT_EQ(evaluate(pp, lx), evaluate(pp, x).scaled(lambda));
  }
}

TEST(PPolyTest, RejectsInexactAndEmpty) {
  FieldPtr f = Field::make(2);
  std::vector<Additive> parts{Additive::monomial(tp(f, 0).truncated(5), 1)};
  try {
    PPoly(f, parts);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kInexactCoefficient);
  }
  std::vector<Additive> empty{Additive(f)};
  EXPECT_THROW(PPoly(f, empty), Error);
}

}  // namespace
}  // namespace addpoly
