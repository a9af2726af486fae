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

#ifndef ADDPOLY_FROBENIUS_HPP_
#define ADDPOLY_FROBENIUS_HPP_

#include <optional>
#include <span>
#include <vector>

#include "addpoly/laurent.hpp"

namespace addpoly {

// (u_0, ..., u_{p^m - 1}) with a = sum_j u_j^(p^m) t^j, the decomposition of
// k along the basis 1, t, ..., t^(p^m - 1) over k^(p^m).
std::vector<Laurent> frobenius_components(const Laurent& a, int m);

// Recomposes sum_j u_j^(p^m) t^j.
Laurent frobenius_recompose(std::span<const Laurent> components, int m);

struct PmIndependence {
  // Empty when the family is k^(p^m)-linearly independent; otherwise
  // (a_1, ..., a_r), not all zero, with sum_i c_i a_i^(p^m) = 0.
  std::optional<std::vector<Laurent>> dependence;

  bool independent() const { return !dependence.has_value(); }
};

// Decides k^(p^m)-linear independence of nonzero c_1..c_r by fraction-free
// (Bareiss) elimination of their Frobenius component matrix over k. Exact
// for exact inputs; with inexact inputs throws PrecisionExhausted when a
// pivot cannot be certified nonzero.
PmIndependence pm_independent(std::span<const Laurent> c, int m);

// sum_i c_i a_i^(p^m).
Laurent pm_combination(std::span<const Laurent> c, std::span<const Laurent> a,
                       int m);

}  // namespace addpoly

#endif  // ADDPOLY_FROBENIUS_HPP_
