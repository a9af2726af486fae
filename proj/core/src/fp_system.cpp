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

#include "fp_system.hpp"

#include <stdexcept>

namespace addpoly::detail {

uint32_t FpSystem::inv(uint32_t a) const {
  // a^(p-2)
  uint64_t result = 1, base = a, e = p_ - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p_;
    base = base * base % p_;
    e >>= 1;
  }
  return static_cast<uint32_t>(result);
}

void FpSystem::axpy(std::vector<uint32_t>& x, uint32_t c,
                    const std::vector<uint32_t>& y) const {
  if (x.size() < y.size()) x.resize(y.size(), 0);
  const uint32_t neg = (p_ - c) % p_;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (y[i] != 0) x[i] = static_cast<uint32_t>((x[i] + static_cast<uint64_t>(neg) * y[i]) % p_);
  }
}

bool FpSystem::insert(std::vector<uint32_t> v) {
  if (v.size() != width_) throw std::invalid_argument("FpSystem: wrong width");
  const std::size_t id = generators_++;
  std::vector<uint32_t> comb(id + 1, 0);
  comb[id] = 1;
  for (const auto& [pivot, row] : rows_) {
    const uint32_t c = v[pivot];
    if (c == 0) continue;
    axpy(v, c, row.v);
    axpy(comb, c, row.comb);
  }
  std::size_t pivot = 0;
  while (pivot < width_ && v[pivot] == 0) ++pivot;
  if (pivot == width_) return false;
  const uint32_t s = inv(v[pivot]);
  for (uint32_t& x : v) x = mul(x, s);
  for (uint32_t& x : comb) x = mul(x, s);
  rows_.emplace(pivot, Row{std::move(v), std::move(comb)});
  return true;
}

FpSystem::Reduction FpSystem::reduce(std::vector<uint32_t> v) const {
  if (v.size() != width_) throw std::invalid_argument("FpSystem: wrong width");
  std::vector<uint32_t> comb(generators_, 0);
  for (const auto& [pivot, row] : rows_) {
    const uint32_t c = v[pivot];
    if (c == 0) continue;
    axpy(v, c, row.v);
    // comb accumulates +c * row.comb
    axpy(comb, (p_ - c) % p_, row.comb);
  }
  return {std::move(v), std::move(comb)};
}

std::vector<std::size_t> FpSystem::pivots() const {
  std::vector<std::size_t> out;
  for (const auto& [pivot, row] : rows_) out.push_back(pivot);
  return out;
}

}  // namespace addpoly::detail
