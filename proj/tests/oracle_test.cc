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

#include <gtest/gtest.h>

#include <random>

#include "addpoly/error.hpp"
#include "addpoly/imagecalc.hpp"
#include "addpoly/parse.hpp"
#include "test_util.hpp"

namespace addpoly::oracle {
namespace {

using addpoly::testing::random_laurent;
using addpoly::testing::tp;

std::vector<uint32_t> unit(std::size_t width, std::size_t at) {
  std::vector<uint32_t> v(width, 0);
  v[at] = 1;
  return v;
}

TEST(OracleTest, SquaresSpan) {
  FieldPtr f = Field::make(2);
  const PPoly p = parse_ppoly("T1^2", f);
  const Span s = image_span(p, Window{-1, 1, -2, 3, std::nullopt});
  ASSERT_EQ(s.dimension(), 3u);
  EXPECT_EQ(s.lo, -2);
  EXPECT_EQ(s.hi, 3);
  EXPECT_EQ(s.basis[0], unit(6, 0));
  EXPECT_EQ(s.basis[1], unit(6, 2));
  EXPECT_EQ(s.basis[2], unit(6, 4));
  EXPECT_EQ(s.boundary_rows, 0u);
}

TEST(OracleTest, BoundaryRowsAreDropped) {
  FieldPtr f = Field::make(2);
  const PPoly p = parse_ppoly("T1^2 + T1", f);
  // X^2 + X at X = t^-1 has support down to -2, below the window.
  const Span s = image_span(p, Window{-1, 2, -1, 4, std::nullopt});
  EXPECT_EQ(s.boundary_rows, 1u);
  const Span wide = image_span(p, Window{-1, 2, -2, 4, std::nullopt});
  EXPECT_EQ(wide.boundary_rows, 0u);
}

TEST(OracleTest, MembershipExamples) {
  FieldPtr f = Field::make(2);
  const PPoly p = parse_ppoly("T1^2", f);
  const Window w{-4, 4, -8, 8, std::nullopt};
  const OracleMembership in = oracle_membership(tp(f, 2), p, w);
  EXPECT_TRUE(in.member);
  EXPECT_TRUE(in.witness_exact);
  EXPECT_TRUE(in.conclusive);
  ASSERT_EQ(in.witness.size(), 1u);
  EXPECT_EQ(in.witness[0], tp(f, 1));

  const OracleMembership out = oracle_membership(tp(f, 1), p, w);
  EXPECT_FALSE(out.member);
  EXPECT_TRUE(out.conclusive);

  try {
    oracle_membership(tp(f, 9), p, w);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kSupportOutsideWindow);
  }
}

TEST(OracleTest, ConstructedElementsAreMembers) {
  std::mt19937_64 rng(11);
  for (int p : {2, 3, 5}) {
    FieldPtr f = Field::make(p);
    const PPoly poly = parse_ppoly(p == 2   ? "T1^2 + t*T2^2 + T2"
                                   : p == 3 ? "T1^3 + t*T2^3 + t^2*T3^3 - T3"
                                            : "T1^5 + t^3*T2^5 + T2",
                                   f);
    const Window w = auto_window(poly, -14, 14);
    for (int trial = 0; trial < 30; ++trial) {
      std::vector<Laurent> x;
      for (std::size_t i = 0; i < poly.arity(); ++i) x.push_back(random_laurent(f, rng, -2, 2));
      const Laurent a = evaluate(poly, x);
      const OracleMembership m = oracle_membership(a, poly, w);
      ASSERT_TRUE(m.member) << a.to_string();
      EXPECT_TRUE(m.witness_exact);
      EXPECT_EQ(evaluate(poly, m.witness), a);
    }
  }
}

TEST(OracleTest, EnlargingWindowNeverShrinksSpan) {
  std::mt19937_64 rng(12);
  FieldPtr f = Field::make(3);
  for (int trial = 0; trial < 20; ++trial) {
    const PPoly p = addpoly::testing::random_ppoly(f, rng, 2, 1, -1, 2);
    Window w{-2, 2, -4, 4, -2};
    std::size_t last = image_span(p, w).dimension();
    for (int step = 0; step < 3; ++step) {
      --w.h_min;
      ++w.h_max;
      --w.out_min;
      w.out_max += 2;
      const std::size_t now = image_span(p, w).dimension();
      EXPECT_GE(now, last);
      last = now;
    }
  }
}

TEST(OracleTest, FamilySpanMatchesPolynomial) {
  std::mt19937_64 rng(13);
  int compared = 0;
  for (int p : {2, 3}) {
    FieldPtr f = Field::make(p);
    for (int trial = 0; trial < 40 && compared < 30; ++trial) {
      const PPoly poly = addpoly::testing::random_ppoly(f, rng, 2, 2, -1, 1);
      bool separable_ok = true;
      for (std::size_t i = 0; i < poly.arity(); ++i) separable_ok &= poly.top_index(i) >= 1;
      if (!separable_ok) continue;
      const PPoly fam = image::equalize_degrees(poly).as_ppoly();
      Window a = auto_window(poly, -6, 6);
      const Window b = auto_window(fam, -6, 6);
      a.out_min = std::min(a.out_min, b.out_min);
      a.h_min = std::min(a.h_min, b.h_min) - 2;
      a.h_max = std::max(a.h_max, b.h_max);
      EXPECT_EQ(image_span(poly, a), image_span(fam, a)) << poly.to_string();
      ++compared;
    }
  }
  EXPECT_GE(compared, 20);
}

TEST(OracleTest, QuotientDimensions) {
  FieldPtr f2 = Field::make(2);
  const PPoly finite = parse_ppoly("T1^2 + t*T2^2 + T2", f2);
  const std::vector<int64_t> d = growth_dims(finite);
  ASSERT_EQ(d.size(), 3u);
  EXPECT_EQ(d[0], d[1]);
  EXPECT_EQ(d[1], d[2]);
  EXPECT_EQ(d[0], 1);

  FieldPtr f3 = Field::make(3);
  const PPoly infinite = parse_ppoly("T1^3 + t*T2^3 + T2", f3);
  const std::vector<Window> ws = growth_windows(infinite);
  for (std::size_t k = 0; k < ws.size(); ++k) {
    EXPECT_EQ(ws[k].out_max - ws[k].interior(), 6 * static_cast<int64_t>(k + 1));
  }
  const std::vector<int64_t> g = growth_dims(infinite);
  EXPECT_LT(g[0], g[1]);
  EXPECT_LT(g[1], g[2]);

  const PPoly onto = parse_ppoly("T1^2 + T1 + T2", f2);
  EXPECT_EQ(oracle_quotient_dim(onto, auto_window(onto, -6, 6)), 0);
}

}  // namespace
}  // namespace addpoly::oracle
