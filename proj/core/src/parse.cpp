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

#include "addpoly/parse.hpp"

#include <cctype>
#include <cstdint>
#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "addpoly/error.hpp"

namespace addpoly {
namespace {

constexpr int64_t kMaxExponent = 1'000'000;
constexpr int64_t kMaxIndex = 100'000;

struct Variable {
  std::size_t index;  // 0-based
  int j;
  std::size_t at;     // offset of the 'T'
};

// coefficient * T_index^(p^j), or a bare coefficient when var is empty.
struct Term {
  Laurent coeff;
  std::optional<Variable> var;
  std::size_t at = 0;  // offset of the first factor
};

class Parser {
 public:
  Parser(std::string_view src, const FieldPtr& field, bool allow_variables)
      : src_(src), field_(field), allow_variables_(allow_variables) {}

  std::vector<Term> parse_all() {
    std::vector<Term> terms = expression();
    skip_space();
    if (pos_ != src_.size()) fail("unexpected '" + std::string(1, src_[pos_]) + "'");
    return terms;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(ErrorKind::kParseError, pos_, msg);
  }

  void skip_space() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) {
      ++pos_;
    }
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  int64_t integer(int64_t limit) {
    skip_space();
    const std::size_t start = pos_;
    int64_t n = 0;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
      n = n * 10 + (src_[pos_] - '0');
      if (n > limit) {
        pos_ = start;
        fail("number too large");
      }
      ++pos_;
    }
    if (pos_ == start) fail("expected a number");
    return n;
  }

  int64_t signed_integer(int64_t limit) {
    if (accept('(')) {
      const bool neg = accept('-');
      const int64_t n = integer(limit);
      expect(')');
      return neg ? -n : n;
    }
    const bool neg = accept('-');
    const int64_t n = integer(limit);
    return neg ? -n : n;
  }

  std::vector<Term> expression() {
    std::vector<Term> out;
    bool negate = false;
    skip_space();
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    for (;;) {
      Term t = term();
      if (negate) t.coeff = -t.coeff;
      out.push_back(std::move(t));
      if (accept('+')) {
        negate = false;
      } else if (accept('-')) {
        negate = true;
      } else {
        break;
      }
    }
    return out;
  }

  Term term() {
    skip_space();
    Term t{Laurent::constant(field_, field_->one()), std::nullopt, pos_};
    do {
      skip_space();
      const std::size_t at = pos_;
      Term f = factor();
      if (f.var) {
        if (t.var) {
          pos_ = at;
          fail("a term may contain only one variable");
        }
        t.var = f.var;
      }
      t.coeff = t.coeff * f.coeff;
    } while (accept('*'));
    return t;
  }

  Term factor() {
    skip_space();
    if (pos_ >= src_.size()) fail("unexpected end of input");
    const char c = src_[pos_];
    const Laurent one = Laurent::constant(field_, field_->one());
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const int64_t n = integer(INT64_MAX / 10);
      return {Laurent::constant(field_, field_->from_int(n)), std::nullopt};
    }
    if (c == 'g') {
      if (field_->e() == 1) fail("'g' is only defined for extension fields");
      ++pos_;
      int64_t k = 1;
      if (accept('^')) k = integer(INT64_MAX / 10);
      return {Laurent::constant(field_, field_->pow(field_->generator(), k)),
              std::nullopt};
    }
    if (c == 't') {
      ++pos_;
      int64_t n = 1;
      if (accept('^')) n = signed_integer(kMaxExponent);
      return {Laurent::t_power(field_, n), std::nullopt};
    }
    if (c == '(') {
      ++pos_;
      const std::size_t inner = pos_;
      std::vector<Term> terms = expression();
      expect(')');
      Laurent sum(field_);
      for (const Term& t : terms) {
        if (t.var) {
          pos_ = inner;
          fail("variables are not allowed inside parentheses");
        }
        sum += t.coeff;
      }
      return {sum, std::nullopt};
    }
    if (c == 'T') {
      if (!allow_variables_) fail("variables are not allowed here");
      const std::size_t var_at = pos_;
      ++pos_;
      if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        fail("expected a variable index after 'T'");
      }
      const int64_t idx = integer(kMaxIndex);
      if (idx < 1) {
        throw ParseError(ErrorKind::kUnknownVariableGap, var_at, "variable indices start at T1");
      }
      int j = 0;
      skip_space();
      if (pos_ < src_.size() && src_[pos_] == '^') {
        const std::size_t caret = pos_;
        ++pos_;
        const int64_t e = integer(INT64_MAX / 10);
        int64_t pk = 1;
        while (pk < e) {
          pk *= field_->p();
          ++j;
        }
        if (e < 1 || pk != e) {
          throw ParseError(ErrorKind::kNotAPPower, caret,
                           "exponent " + std::to_string(e) + " is not a power of " +
                               std::to_string(field_->p()));
        }
      }
      return {one, Variable{static_cast<std::size_t>(idx - 1), j, var_at}};
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view src_;
  FieldPtr field_;
  bool allow_variables_;
  std::size_t pos_ = 0;
};

}  // namespace

PPoly parse_ppoly(std::string_view src, const FieldPtr& field) {
  std::vector<Term> terms = Parser(src, field, true).parse_all();
  std::map<std::size_t, Additive> parts;
  std::map<std::size_t, std::size_t> first_seen;
  for (const Term& t : terms) {
    if (!t.var) {
      throw ParseError(ErrorKind::kParseError, t.at,
                       "constant terms are not additive (every term needs a variable)");
    }
    first_seen.try_emplace(t.var->index, t.var->at);
    auto it = parts.try_emplace(t.var->index, field).first;
    it->second.add_term(t.var->j, t.coeff);
  }
  std::vector<Additive> ordered;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    auto it = parts.find(i);
    if (it == parts.end() || it->second.is_zero()) {
      // Report the first variable that sits past the gap, or the missing
      // variable itself when its terms cancelled.
      std::size_t at = it == parts.end() ? 0 : first_seen[i];
      if (it == parts.end()) {
        at = src.size();
        for (const auto& [idx, off] : first_seen) {
          if (idx > i) at = std::min(at, off);
        }
      }
      throw ParseError(ErrorKind::kUnknownVariableGap, at,
                       "variable T" + std::to_string(i + 1) +
                           " is missing; indices must be contiguous from T1");
    }
    ordered.push_back(std::move(it->second));
  }
  if (ordered.empty()) {
    throw ParseError(ErrorKind::kParseError, 0, "empty polynomial");
  }
  return PPoly(field, std::move(ordered));
}

Laurent parse_laurent(std::string_view src, const FieldPtr& field) {
  Laurent sum(field);
  for (const Term& t : Parser(src, field, false).parse_all()) sum += t.coeff;
  return sum;
}

}  // namespace addpoly
