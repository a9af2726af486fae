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

#include "addpoly/field.hpp"

#include <charconv>
#include <sstream>

#include "addpoly/error.hpp"

namespace addpoly {

bool is_prime(int64_t n) {
  if (n < 2) return false;
  for (int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

namespace {

constexpr uint32_t kMaxOrder = 1u << 16;
constexpr uint32_t kMaxAddTable = 256;

using Poly = std::vector<int>;  // low-to-high over F_p

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo b over F_p (b monic or not).
Poly poly_mod(Poly a, const Poly& b, int p) {
  trim(a);
  const int db = static_cast<int>(b.size()) - 1;
  int lead_inv = 1;
  for (int k = 1; k < p; ++k) {
    if ((b.back() * k) % p == 1) lead_inv = k;
  }
  while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
    const int shift = static_cast<int>(a.size()) - 1 - db;
    const int factor = (a.back() * lead_inv) % p;
    for (int i = 0; i <= db; ++i) {
      a[shift + i] = ((a[shift + i] - factor * b[i]) % p + p) % p;
    }
    trim(a);
  }
  return a;
}

bool is_irreducible(const Poly& f, int p) {
  const int deg = static_cast<int>(f.size()) - 1;
  // Trial division by every monic polynomial of degree 1..deg/2.
  for (int d = 1; 2 * d <= deg; ++d) {
    int64_t count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (int64_t code = 0; code < count; ++code) {
      Poly g(d + 1, 0);
      int64_t c = code;
      for (int i = 0; i < d; ++i) {
        g[i] = static_cast<int>(c % p);
        c /= p;
      }
      g[d] = 1;
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

FieldPtr Field::make(int p, int e, std::vector<int> modulus) {
  if (!is_prime(p)) {
    throw Error(ErrorKind::kInvalidField, std::to_string(p) + " is not prime");
  }
  if (e < 1) {
    throw Error(ErrorKind::kInvalidField, "extension degree must be >= 1");
  }
  uint64_t q = 1;
  for (int i = 0; i < e; ++i) {
    q *= static_cast<uint64_t>(p);
    if (q > kMaxOrder) {
      throw Error(ErrorKind::kInvalidField, "field order exceeds 65536");
    }
  }
  if (e == 1) {
    if (!modulus.empty() && modulus != std::vector<int>{0, 1}) {
      throw Error(ErrorKind::kInvalidField,
                  "prime fields use the modulus [0, 1]");
    }
    modulus = {0, 1};
  } else {
    if (static_cast<int>(modulus.size()) != e + 1) {
      throw Error(ErrorKind::kInvalidField,
                  "modulus must have e+1 coefficients (low-to-high)");
    }
    for (int& c : modulus) c = ((c % p) + p) % p;
    if (modulus.back() != 1) {
      throw Error(ErrorKind::kInvalidField, "modulus must be monic");
    }
    if (!is_irreducible(modulus, p)) {
      throw Error(ErrorKind::kInvalidField, "modulus is reducible over F_p");
    }
  }
  return FieldPtr(new Field(p, e, std::move(modulus)));
}

Field::Field(int p, int e, std::vector<int> modulus)
    : p_(p), e_(e), modulus_(std::move(modulus)) {
  q_ = 1;
  for (int i = 0; i < e_; ++i) q_ *= static_cast<uint32_t>(p_);
  if (q_ <= kMaxAddTable) {
    add_.resize(static_cast<std::size_t>(q_) * q_);
    for (uint32_t a = 0; a < q_; ++a) {
      for (uint32_t b = 0; b < q_; ++b) {
        uint32_t r = 0;
        uint32_t base = 1;
        uint32_t x = a;
        uint32_t y = b;
        for (int i = 0; i < e_; ++i) {
          r += ((x % p_ + y % p_) % p_) * base;
          x /= p_;
          y /= p_;
          base *= p_;
        }
        add_[a * q_ + b] = r;
      }
    }
  }
  // Multiplicative structure through the generator's powers.
  exp_.resize(q_ - 1);
  log_.assign(q_, 0);
  auto times_g = [&](std::vector<int> d) {
    // multiply a coordinate vector by x and reduce modulo the modulus
    std::vector<int> r(e_, 0);
    const int carry = d[e_ - 1];
    for (int i = e_ - 1; i > 0; --i) r[i] = d[i - 1];
    r[0] = 0;
    for (int i = 0; i < e_; ++i) {
      r[i] = ((r[i] - carry * modulus_[i]) % p_ + p_) % p_;
    }
    return r;
  };
  if (e_ == 1) {
    for (int g = 1; g < p_; ++g) {
      uint32_t x = 1;
      bool primitive = true;
      for (uint32_t k = 0; k + 1 < q_; ++k) {
        exp_[k] = Fq{x};
        x = static_cast<uint32_t>((static_cast<uint64_t>(x) * g) % p_);
        if (x == 1 && k + 2 < q_) {
          primitive = false;
          break;
        }
      }
      if (primitive) break;
    }
  } else {
    std::vector<int> d(e_, 0);
    d[0] = 1;
    std::vector<bool> seen(q_, false);
    for (uint32_t k = 0; k + 1 < q_; ++k) {
      const Fq a = from_digits(d);
      if (seen[a.v]) {
        throw Error(ErrorKind::kInvalidField,
                    "modulus is not primitive: its root does not generate "
                    "the multiplicative group");
      }
      seen[a.v] = true;
      exp_[k] = a;
      d = times_g(d);
    }
  }
  for (uint32_t k = 0; k + 1 < q_; ++k) log_[exp_[k].v] = k;
}

Fq Field::from_int(int64_t n) const {
  return Fq{static_cast<uint32_t>(((n % p_) + p_) % p_)};
}

Fq Field::from_digits(std::span<const int> digits) const {
  uint32_t r = 0;
  uint32_t base = 1;
  for (int i = 0; i < e_; ++i) {
    const int d = i < static_cast<int>(digits.size()) ? digits[i] : 0;
    r += static_cast<uint32_t>(((d % p_) + p_) % p_) * base;
    base *= p_;
  }
  return Fq{r};
}

std::vector<int> Field::digits(Fq a) const {
  std::vector<int> d(e_);
  uint32_t x = a.v;
  for (int i = 0; i < e_; ++i) {
    d[i] = static_cast<int>(x % p_);
    x /= p_;
  }
  return d;
}

int Field::digit(Fq a, int i) const {
  uint32_t x = a.v;
  for (int k = 0; k < i; ++k) x /= p_;
  return static_cast<int>(x % p_);
}

uint32_t Field::log(Fq a) const {
  if (a.v == 0) throw Error(ErrorKind::kDivisionByZero, "log of zero");
  return log_[a.v];
}

Fq Field::exp(int64_t k) const {
  const int64_t order = q_ - 1;
  return exp_[static_cast<std::size_t>(((k % order) + order) % order)];
}

Fq Field::add(Fq a, Fq b) const {
  if (e_ == 1) return Fq{(a.v + b.v) % q_};
  if (!add_.empty()) return Fq{add_[a.v * q_ + b.v]};
  uint32_t r = 0;
  uint32_t base = 1;
  for (int i = 0; i < e_; ++i) {
    r += ((a.v % p_ + b.v % p_) % p_) * base;
    a.v /= p_;
    b.v /= p_;
    base *= p_;
  }
  return Fq{r};
}

Fq Field::neg(Fq a) const {
  if (e_ == 1) return Fq{(q_ - a.v) % q_};
  uint32_t r = 0;
  uint32_t base = 1;
  for (int i = 0; i < e_; ++i) {
    r += ((p_ - a.v % p_) % p_) * base;
    a.v /= p_;
    base *= p_;
  }
  return Fq{r};
}

Fq Field::sub(Fq a, Fq b) const { return add(a, neg(b)); }

Fq Field::mul(Fq a, Fq b) const {
  if (a.v == 0 || b.v == 0) return Fq{0};
  if (e_ == 1) {
    return Fq{static_cast<uint32_t>((static_cast<uint64_t>(a.v) * b.v) % q_)};
  }
  const uint32_t k = log_[a.v] + log_[b.v];
  return exp_[k % (q_ - 1)];
}

Fq Field::inv(Fq a) const {
  if (a.v == 0) throw Error(ErrorKind::kDivisionByZero, "inverse of zero in F_q");
  return exp_[(q_ - 1 - log_[a.v]) % (q_ - 1)];
}

Fq Field::pow(Fq a, int64_t k) const {
  if (a.v == 0) {
    if (k == 0) return one();
    if (k < 0) throw Error(ErrorKind::kDivisionByZero, "negative power of zero");
    return a;
  }
  const int64_t order = q_ - 1;
  const int64_t l = static_cast<int64_t>(log_[a.v]);
  const int64_t km = ((k % order) + order) % order;
  return exp_[static_cast<std::size_t>((l * km) % order)];
}

Fq Field::frobenius(Fq a, int k) const {
  if (a.v == 0 || e_ == 1) return a;
  int64_t pk = 1;
  for (int i = 0; i < k % e_; ++i) pk *= p_;
  return pow(a, pk);
}

Fq Field::root(Fq a, int k) const {
  if (a.v == 0 || e_ == 1) return a;
  // x -> x^(p^(e - k mod e)) inverts the k-fold Frobenius.
  const int r = ((e_ - k % e_) % e_);
  return frobenius(a, r);
}

std::string Field::to_string(Fq a) const {
  if (e_ == 1) return std::to_string(a.v);
  if (a.v == 0) return "0";
  return "g^" + std::to_string(log_[a.v]);
}

Fq Field::parse(std::string_view text) const {
  auto bad = [&]() {
    return Error(ErrorKind::kParseError,
                 "invalid F_q literal '" + std::string(text) + "'");
  };
  if (text.empty()) throw bad();
  if (text[0] == 'g') {
    if (e_ == 1) throw bad();
    if (text.size() == 1) return generator();
    if (text[1] != '^') throw bad();
    int64_t k = 0;
    auto [ptr, ec] =
        std::from_chars(text.data() + 2, text.data() + text.size(), k);
    if (ec != std::errc() || ptr != text.data() + text.size()) throw bad();
    return exp(k);
  }
  int64_t n = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), n);
  if (ec != std::errc() || ptr != text.data() + text.size()) throw bad();
  return from_int(n);
}

}  // namespace addpoly
