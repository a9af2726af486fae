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

#ifndef ADDPOLY_ERROR_HPP_
#define ADDPOLY_ERROR_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace addpoly {

enum class ErrorKind {
  kInvalidField,
  kDivisionByZero,
  kPrecisionExhausted,
  kNotAPthPower,
  kArityMismatch,
  kNotEqualDegree,
  kZeroPivot,
  kInexactCoefficient,
  kNotSeparable,
  kLinearVariable,
  kNoTopLevelLinear,
  kNotFiniteCase,
  kNotReducedForm,
  kResiduesNotCovered,
  kInfiniteRegime,
  kVanishesSomewhere,
  kNotABasis,
  kParseError,
  kNotAPPower,
  kUnknownVariableGap,
  kSupportOutsideWindow,
  kInvalidArgument,
};

const char* to_string(ErrorKind kind);

// Base of every error thrown by the library. The kind is stable and is what
// the CLI maps onto exit codes; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class PrecisionExhausted : public Error {
 public:
  PrecisionExhausted(const std::string& message, int64_t suggested_precision)
      : Error(ErrorKind::kPrecisionExhausted, message),
        suggested_precision_(suggested_precision) {}

  int64_t suggested_precision() const noexcept { return suggested_precision_; }

 private:
  int64_t suggested_precision_;
};

class ParseError : public Error {
 public:
  ParseError(ErrorKind kind, std::size_t position, const std::string& message)
      : Error(kind, "at position " + std::to_string(position) + ": " + message),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace addpoly

#endif  // ADDPOLY_ERROR_HPP_
