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

#ifndef ADDPOLY_PARSE_HPP_
#define ADDPOLY_PARSE_HPP_

#include <string_view>

#include "addpoly/laurent.hpp"
#include "addpoly/ppoly.hpp"

namespace addpoly {

// Grammar (whitespace is ignored):
//
//   expr   := ['+' | '-'] term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := INT | 'g' ['^' INT] | 't' ['^' SINT] | '(' expr ')'
//           | 'T' INT ['^' INT]
//   SINT   := ['-'] INT | '(' ['-'] INT ')'
//
// Every term of a polynomial holds exactly one variable factor and its
// exponent must be a power of p. Variables are T1..Tr with no gaps. 'g' is
// the field generator and is only accepted when e > 1. Like terms combine.
//
// Errors are ParseError with kind kParseError, kNotAPPower (position of the
// '^') or kUnknownVariableGap; positions are 0-based byte offsets.
PPoly parse_ppoly(std::string_view src, const FieldPtr& field);

// A Laurent polynomial: the same grammar without variables.
Laurent parse_laurent(std::string_view src, const FieldPtr& field);

}  // namespace addpoly

#endif  // ADDPOLY_PARSE_HPP_
