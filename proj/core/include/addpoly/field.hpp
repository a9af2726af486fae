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

#ifndef ADDPOLY_FIELD_HPP_
#define ADDPOLY_FIELD_HPP_

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace addpoly {

// Element of F_q, stored as the integer sum_i d_i p^i where d_i is the
// coordinate of g^i and g is the residue class of x modulo the modulus.
struct Fq {
  uint32_t v = 0;

  friend bool operator==(Fq, Fq) = default;
  friend auto operator<=>(Fq, Fq) = default;
};

class Field;
using FieldPtr = std::shared_ptr<const Field>;

// The residue field F_q = F_p[x]/(modulus). For e > 1 the modulus must be
// primitive so that every nonzero element has a "g^k" text form. Tables are
// built once; instances are immutable and shared between all values.
class Field {
 public:
  // Throws Error(kInvalidField) when p is not prime, e < 1, the modulus has
  // the wrong degree, is reducible, or is not primitive.
  static FieldPtr make(int p, int e = 1, std::vector<int> modulus = {});

  int p() const { return p_; }
  int e() const { return e_; }
  uint32_t q() const { return q_; }
  // Low-to-high coefficients; {0, 1} for prime fields.
  const std::vector<int>& modulus() const { return modulus_; }

  Fq zero() const { return Fq{0}; }
  Fq one() const { return Fq{1}; }
  Fq from_int(int64_t n) const;
  Fq from_digits(std::span<const int> digits) const;
  std::vector<int> digits(Fq a) const;
  int digit(Fq a, int i) const;

  // Multiplicative generator: g itself when e > 1, the least primitive root
  // when e = 1.
  Fq generator() const { return exp_[1 % (q_ - 1)]; }
  uint32_t log(Fq a) const;  // a != 0
  Fq exp(int64_t k) const;

  Fq add(Fq a, Fq b) const;
  Fq sub(Fq a, Fq b) const;
  Fq neg(Fq a) const;
  Fq mul(Fq a, Fq b) const;
  Fq inv(Fq a) const;
  Fq div(Fq a, Fq b) const { return mul(a, inv(b)); }
  Fq pow(Fq a, int64_t k) const;
  Fq frobenius(Fq a, int k = 1) const;  // a^(p^k)
  Fq root(Fq a, int k = 1) const;       // unique b with b^(p^k) = a

  // Integer literal when e = 1, "g^k" (or "0") otherwise.
  std::string to_string(Fq a) const;
  // Accepts an integer literal (reduced mod p), or "g", "g^k" when e > 1.
  Fq parse(std::string_view text) const;

  bool operator==(const Field& other) const {
    return p_ == other.p_ && e_ == other.e_ && modulus_ == other.modulus_;
  }

 private:
  Field(int p, int e, std::vector<int> modulus);

  int p_;
  int e_;
  uint32_t q_;
  std::vector<int> modulus_;
  std::vector<Fq> exp_;       // exp_[k] = g^k, k in [0, q-1)
  std::vector<uint32_t> log_;  // log_[a] for a != 0
  std::vector<uint32_t> add_;  // q*q table when q is small, else empty
};

bool is_prime(int64_t n);

}  // namespace addpoly

#endif  // ADDPOLY_FIELD_HPP_
