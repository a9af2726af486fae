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

#include "addpoly/error.hpp"

namespace addpoly {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidField: return "InvalidField";
    case ErrorKind::kDivisionByZero: return "DivisionByZero";
    case ErrorKind::kPrecisionExhausted: return "PrecisionExhausted";
    case ErrorKind::kNotAPthPower: return "NotAPthPower";
    case ErrorKind::kArityMismatch: return "ArityMismatch";
    case ErrorKind::kNotEqualDegree: return "NotEqualDegree";
    case ErrorKind::kZeroPivot: return "ZeroPivot";
    case ErrorKind::kInexactCoefficient: return "InexactCoefficient";
    case ErrorKind::kNotSeparable: return "NotSeparable";
    case ErrorKind::kLinearVariable: return "LinearVariable";
    case ErrorKind::kNoTopLevelLinear: return "NoTopLevelLinear";
    case ErrorKind::kNotFiniteCase: return "NotFiniteCase";
    case ErrorKind::kNotReducedForm: return "NotReducedForm";
    case ErrorKind::kResiduesNotCovered: return "ResiduesNotCovered";
    case ErrorKind::kInfiniteRegime: return "InfiniteRegime";
    case ErrorKind::kVanishesSomewhere: return "VanishesSomewhere";
    case ErrorKind::kNotABasis: return "NotABasis";
    case ErrorKind::kParseError: return "ParseError";
    case ErrorKind::kNotAPPower: return "NotAPPower";
    case ErrorKind::kUnknownVariableGap: return "UnknownVariableGap";
    case ErrorKind::kSupportOutsideWindow: return "SupportOutsideWindow";
    case ErrorKind::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace addpoly
