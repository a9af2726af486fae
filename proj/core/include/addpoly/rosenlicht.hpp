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

#ifndef ADDPOLY_ROSENLICHT_HPP_
#define ADDPOLY_ROSENLICHT_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "addpoly/error.hpp"
#include "addpoly/imagecalc.hpp"
#include "addpoly/laurent.hpp"
#include "addpoly/ppoly.hpp"

namespace addpoly::rosenlicht {

// Degree counts of a presentation: r[j - 1] variables of degree p^(M - j + 1),
// zeros kept for absent degrees.
struct Signature {
  int M = 0;
  std::vector<int64_t> r;

  int64_t dimension() const;           // sum r_i - 1
  int64_t weight(int p) const;         // r_1 + p r_2 + ... + p^(M-1) r_M
  bool operator==(const Signature&) const = default;
};

// l with r_1 = l_1 p and r_i = l_i p - l_(i-1); nullopt when r does not
// come from such a vector.
std::optional<std::vector<int64_t>> l_vector(int p, const Signature& s);
Signature from_l_vector(int p, std::span<const int64_t> l);

// Throws LinearVariable when some variable has degree 1.
Signature signature_of(const PPoly& p);

enum class Reason {
  kNone,
  kNotSeparable,
  kLinearVariable,
  kVanishesSomewhere,
  kWeightMismatch,
};

std::string to_string(Reason r);

struct Verdict {
  bool rosenlicht = false;
  Reason reason = Reason::kNone;
  std::optional<Signature> signature;
  std::vector<Laurent> witness;  // zero of the principal part
  int64_t weight = 0;            // achieved and required weight
  int64_t required = 0;

  std::string explain() const;
};

Verdict is_rosenlicht(const PPoly& p);

// Signatures of dimension d from compositions (l_1..l_M) of d / (p - 1)
// with l_M = 1, keeping those with every r_i >= 0. Ordered by M, then r.
std::vector<Signature> enumerate_signatures(int p, int64_t d);

// All (M, r) with r_1 >= 1, r_i >= 0, sum r_i = d + 1 and weight p^M, by
// direct search. Same order as enumerate_signatures.
std::vector<Signature> solve_signatures(int p, int64_t d);

// sum_(i=0)^(p-1) t^i T_(i+1)^p - T_p.
PPoly oesterle_group(const FieldPtr& field);

class NotABasis : public Error {
 public:
  explicit NotABasis(std::vector<Laurent> witness)
      : Error(ErrorKind::kNotABasis, "coefficients are not a k^p-basis of k"),
        witness_(std::move(witness)) {}

  const std::vector<Laurent>& witness() const { return witness_; }

 private:
  std::vector<Laurent> witness_;
};

// sum_i c_i T_i^p + T_p. Throws NotABasis unless c is a k^p-basis of k
// (p elements, k^p-independent), InvalidArgument for other lengths.
PPoly prop13_group(std::span<const Laurent> c);

// k / im P, the first cohomology of the kernel of P.
image::QuotientReport h1_report(const PPoly& p,
                                int64_t precision = Laurent::kDefaultPrecision);

}  // namespace addpoly::rosenlicht

#endif  // ADDPOLY_ROSENLICHT_HPP_
