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

#include "addpoly/frobenius.hpp"

#include <algorithm>

#include "addpoly/error.hpp"

namespace addpoly {

namespace {

int64_t floor_div(int64_t a, int64_t b) {
  int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

std::vector<Laurent> frobenius_components(const Laurent& a, int m) {
  const FieldPtr& f = a.field();
  const int64_t pm = ipow(f->p(), m);
  std::vector<std::vector<Fq>> coeffs(static_cast<std::size_t>(pm));
  std::vector<int64_t> starts(static_cast<std::size_t>(pm), 0);
  if (!a.is_zero()) {
    const int64_t v = a.valuation();
    for (int64_t j = 0; j < pm; ++j) {
      // first exponent >= v congruent to j
      const int64_t first = v + (((j - v) % pm) + pm) % pm;
      starts[static_cast<std::size_t>(j)] = floor_div(first, pm);
    }
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
      const int64_t n = v + static_cast<int64_t>(i);
      const int64_t j = ((n % pm) + pm) % pm;
      auto& cj = coeffs[static_cast<std::size_t>(j)];
      const int64_t slot = floor_div(n, pm) - starts[static_cast<std::size_t>(j)];
      if (static_cast<int64_t>(cj.size()) <= slot) {
        cj.resize(static_cast<std::size_t>(slot) + 1, f->zero());
      }
      cj[static_cast<std::size_t>(slot)] = f->root(a.coeffs()[i], m);
    }
  }
  std::vector<Laurent> out;
  out.reserve(static_cast<std::size_t>(pm));
  for (int64_t j = 0; j < pm; ++j) {
    int64_t prec = Laurent::kInfinity;
    if (!a.exact()) {
      prec = -floor_div(-(a.precision() - j), pm);  // ceil((N - j) / p^m)
    }
    out.emplace_back(f, starts[static_cast<std::size_t>(j)],
                     std::move(coeffs[static_cast<std::size_t>(j)]), prec);
  }
  return out;
}

Laurent frobenius_recompose(std::span<const Laurent> components, int m) {
  if (components.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "no components");
  }
  Laurent sum(components.front().field());
  for (std::size_t j = 0; j < components.size(); ++j) {
    sum += components[j].frobenius(m).shifted(static_cast<int64_t>(j));
  }
  return sum;
}

Laurent pm_combination(std::span<const Laurent> c, std::span<const Laurent> a,
                       int m) {
  if (c.size() != a.size() || c.empty()) {
    throw Error(ErrorKind::kArityMismatch, "pm_combination length mismatch");
  }
  Laurent sum(c.front().field());
  for (std::size_t i = 0; i < c.size(); ++i) sum += c[i] * a[i].frobenius(m);
  return sum;
}

PmIndependence pm_independent(std::span<const Laurent> c, int m) {
  if (c.empty()) return {};
  const FieldPtr& f = c.front().field();
  for (const Laurent& x : c) {
    if (x.is_exact_zero()) {
      throw Error(ErrorKind::kInvalidArgument,
                  "pm_independent requires nonzero elements");
    }
  }
  const std::size_t rows = c.size();
  const auto cols = static_cast<std::size_t>(ipow(f->p(), m));
  const std::size_t width = cols + rows;

  // [U | I]: row i holds the components of c_i followed by e_i. A row whose
  // U-part is eliminated carries a left-kernel vector in its I-part.
  std::vector<std::vector<Laurent>> mat;
  mat.reserve(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    std::vector<Laurent> row = frobenius_components(c[i], m);
    for (std::size_t k = 0; k < rows; ++k) {
      row.push_back(k == i ? Laurent::constant(f, f->one()) : Laurent(f));
    }
    mat.push_back(std::move(row));
  }

  Laurent prev = Laurent::constant(f, f->one());
  std::vector<bool> used(cols, false);
  std::size_t rank = 0;
  for (; rank < rows; ++rank) {
    // valuation pivoting over the remaining rows and unused columns
    std::size_t pr = rows;
    std::size_t pc = cols;
    int64_t best = Laurent::kInfinity;
    bool uncertain = false;
    for (std::size_t i = rank; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) {
        if (used[j]) continue;
        const Laurent& x = mat[i][j];
        if (x.is_zero()) {
          if (!x.exact()) uncertain = true;
          continue;
        }
        if (x.valuation() < best) {
          best = x.valuation();
          pr = i;
          pc = j;
        }
      }
    }
    if (pr == rows) {
      if (uncertain) {
        throw PrecisionExhausted(
            "cannot certify a nonzero pivot in the component matrix",
            2 * Laurent::kDefaultPrecision);
      }
      break;
    }
    std::swap(mat[rank], mat[pr]);
    used[pc] = true;
    const Laurent piv = mat[rank][pc];
    for (std::size_t i = rank + 1; i < rows; ++i) {
      const Laurent factor = mat[i][pc];
      for (std::size_t j = 0; j < width; ++j) {
        Laurent num = piv * mat[i][j] - factor * mat[rank][j];
        mat[i][j] = exact_quotient(num, prev);
      }
    }
    prev = piv;
  }
  if (rank == rows) return {};

  std::vector<Laurent> witness(mat[rank].begin() + static_cast<long>(cols),
                               mat[rank].end());
  return PmIndependence{std::move(witness)};
}

}  // namespace addpoly
