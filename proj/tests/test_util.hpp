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

#ifndef ADDPOLY_TESTS_TEST_UTIL_HPP_
#define ADDPOLY_TESTS_TEST_UTIL_HPP_

#include <cstdint>
#include <initializer_list>
#include <random>
#include <utility>
#include <vector>

#include "addpoly/field.hpp"
#include "addpoly/laurent.hpp"
#include "addpoly/ppoly.hpp"

namespace addpoly::testing {

// sum of c * t^n over the given (n, c) pairs, c reduced mod p.
inline Laurent poly(const FieldPtr& f,
                    std::initializer_list<std::pair<int64_t, int64_t>> terms) {
  Laurent out(f);
  for (auto [n, c] : terms) out += Laurent::monomial(f, f->from_int(c), n);
  return out;
}

inline Laurent tp(const FieldPtr& f, int64_t n) { return Laurent::t_power(f, n); }

inline Fq random_fq(const Field& f, std::mt19937_64& rng) {
  return Fq{static_cast<uint32_t>(rng() % f.q())};
}

inline Fq random_nonzero_fq(const Field& f, std::mt19937_64& rng) {
  return Fq{static_cast<uint32_t>(1 + rng() % (f.q() - 1))};
}

// Exact Laurent polynomial with support in [lo, hi]; each coefficient is
// nonzero with probability 1/2.
inline Laurent random_laurent(const FieldPtr& f, std::mt19937_64& rng,
                              int64_t lo, int64_t hi) {
  std::vector<Fq> c;
  for (int64_t n = lo; n <= hi; ++n) {
    c.push_back(rng() % 2 ? random_fq(*f, rng) : f->zero());
  }
  return Laurent(f, lo, std::move(c), Laurent::kInfinity);
}

inline Laurent random_nonzero_laurent(const FieldPtr& f, std::mt19937_64& rng,
                                      int64_t lo, int64_t hi) {
  for (;;) {
    Laurent a = random_laurent(f, rng, lo, hi);
    if (!a.is_zero()) return a;
  }
}

inline Additive random_additive(const FieldPtr& f, std::mt19937_64& rng,
                                int max_j, int64_t lo, int64_t hi) {
  Additive a(f);
  while (a.is_zero()) {
    for (int j = 0; j <= max_j; ++j) {
      if (rng() % 2) a.add_term(j, random_laurent(f, rng, lo, hi));
    }
  }
  return a;
}

inline PPoly random_ppoly(const FieldPtr& f, std::mt19937_64& rng,
                          std::size_t arity, int max_j, int64_t lo, int64_t hi) {
  std::vector<Additive> parts;
  for (std::size_t i = 0; i < arity; ++i) {
    parts.push_back(random_additive(f, rng, max_j, lo, hi));
  }
  return PPoly(f, std::move(parts));
}

}  // namespace addpoly::testing

#endif  // ADDPOLY_TESTS_TEST_UTIL_HPP_
