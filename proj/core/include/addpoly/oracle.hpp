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

#ifndef ADDPOLY_ORACLE_HPP_
#define ADDPOLY_ORACLE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "addpoly/laurent.hpp"
#include "addpoly/ppoly.hpp"

namespace addpoly::oracle {

// Arguments c*t^h with h in [h_min, h_max] for every variable; outputs
// observed on exponents [out_min, out_max]. Generators with support below
// out_min are boundary rows and are dropped. Exponents in
// [out_min, interior_min) form a guard band: they take part in the
// elimination but conclusions are drawn on [interior_min, out_max] only.
struct Window {
  int64_t h_min = 0;
  int64_t h_max = 0;
  int64_t out_min = 0;
  int64_t out_max = 0;
  std::optional<int64_t> interior_min;

  int64_t interior() const { return interior_min.value_or(out_min); }
};

// Row-reduced basis of the window image restricted to the interior. Each row
// lists coefficients over exponents [lo, hi], e digits per exponent.
struct Span {
  int64_t lo = 0;
  int64_t hi = 0;
  int e = 1;
  std::vector<std::vector<uint32_t>> basis;
  std::size_t generators = 0;
  std::size_t boundary_rows = 0;

  std::size_t dimension() const { return basis.size(); }
  friend bool operator==(const Span& a, const Span& b) {
    return a.lo == b.lo && a.hi == b.hi && a.basis == b.basis;
  }
};

// Needs exact coefficients.
Span image_span(const PPoly& p, const Window& w);

struct OracleMembership {
  bool member = false;
  std::vector<Laurent> witness;  // P(witness) agrees with a on the window
  bool witness_exact = false;    // P(witness) == a
  // Member: a is in im P. NotInWindow: a is not in im P.
  bool conclusive = false;
};

// Throws SupportOutsideWindow when a is inexact or has support outside
// [interior, out_max].
OracleMembership oracle_membership(const Laurent& a, const PPoly& p, const Window& w);

// F_p-dimension of the interior coordinate space modulo the window image.
int64_t oracle_quotient_dim(const PPoly& p, const Window& w);

// Window whose interior is [lo, hi], with a guard band below and argument
// range wide enough that omitted arguments cannot reach the interior.
Window auto_window(const PPoly& p, int64_t lo, int64_t hi);

// Three nested windows with interiors [top - k w, top], k = 1, 2, 3. The top
// sits at or above the lift threshold and w >= 6 covers the cancellation
// floor twice.
std::vector<Window> growth_windows(const PPoly& p);

// Quotient dimensions over growth_windows(p).
std::vector<int64_t> growth_dims(const PPoly& p);

}  // namespace addpoly::oracle

#endif  // ADDPOLY_ORACLE_HPP_
