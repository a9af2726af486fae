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

#ifndef ADDPOLY_SRC_FP_SYSTEM_HPP_
#define ADDPOLY_SRC_FP_SYSTEM_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

namespace addpoly::detail {

// Incremental echelon basis of a subspace of F_p^n. The pivot of a row is its
// lowest nonzero coordinate and is normalized to 1. Every row remembers the
// combination of inserted generators it came from.
class FpSystem {
 public:
  FpSystem(uint32_t p, std::size_t width) : p_(p), width_(width) {}

  std::size_t width() const { return width_; }
  std::size_t generator_count() const { return generators_; }
  std::size_t rank() const { return rows_.size(); }

  // Registers generator number generator_count() and returns true when it
  // enlarged the span.
  bool insert(std::vector<uint32_t> v);

  struct Reduction {
    std::vector<uint32_t> residual;  // zero on every pivot coordinate
    // v = residual + sum_g combination[g] * generator_g
    std::vector<uint32_t> combination;
  };
  Reduction reduce(std::vector<uint32_t> v) const;

  // Pivot coordinates in ascending order.
  std::vector<std::size_t> pivots() const;

 private:
  struct Row {
    std::vector<uint32_t> v;
    std::vector<uint32_t> comb;  // may be shorter than generator_count()
  };

  uint32_t mul(uint32_t a, uint32_t b) const {
    return static_cast<uint32_t>(static_cast<uint64_t>(a) * b % p_);
  }
  uint32_t inv(uint32_t a) const;
  // x -= c * y on the common prefix; x grows to y's length.
  void axpy(std::vector<uint32_t>& x, uint32_t c,
            const std::vector<uint32_t>& y) const;

  uint32_t p_;
  std::size_t width_;
  std::size_t generators_ = 0;
  std::map<std::size_t, Row> rows_;  // keyed by pivot
};

}  // namespace addpoly::detail

#endif  // ADDPOLY_SRC_FP_SYSTEM_HPP_
