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

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "addpoly/imagecalc.hpp"
#include "addpoly/oracle.hpp"
#include "addpoly/parse.hpp"
#include "addpoly/rosenlicht.hpp"

namespace addpoly {
namespace {

Laurent random_laurent(const FieldPtr& f, std::mt19937_64& rng, int64_t lo, int64_t hi) {
  std::vector<Fq> c;
  for (int64_t n = lo; n <= hi; ++n) c.push_back(Fq{static_cast<uint32_t>(rng() % f->q())});
  return Laurent(f, lo, std::move(c), Laurent::kInfinity);
}

void BM_FieldMul(benchmark::State& state) {
  const FieldPtr f = Field::make(3, 4, {2, 0, 0, 2, 1});
  Fq a = f->from_int(2), b = Fq{7};
  for (auto _ : state) {
    a = f->mul(a, b);
    benchmark::DoNotOptimize(a);
  }
}
BENCHMARK(BM_FieldMul);

void BM_LaurentMul(benchmark::State& state) {
  const FieldPtr f = Field::make(3);
  std::mt19937_64 rng(1);
  const Laurent a = random_laurent(f, rng, -8, state.range(0));
  const Laurent b = random_laurent(f, rng, -8, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_LaurentMul)->Arg(16)->Arg(64);

void BM_Evaluate(benchmark::State& state) {
  const FieldPtr f = Field::make(2);
  const PPoly p = parse_ppoly("t*T1^4 + t^3*T2^4 + T3^2 + T3", f);
  std::mt19937_64 rng(2);
  std::vector<Laurent> x;
  for (int i = 0; i < 3; ++i) x.push_back(random_laurent(f, rng, -6, 6));
  for (auto _ : state) benchmark::DoNotOptimize(evaluate(p, x));
}
BENCHMARK(BM_Evaluate);

void BM_ReducedForm(benchmark::State& state) {
  const PPoly p = rosenlicht::oesterle_group(Field::make(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(image::to_reduced_form(p));
}
BENCHMARK(BM_ReducedForm)->Arg(2)->Arg(3)->Arg(5);

void BM_Membership(benchmark::State& state) {
  const FieldPtr f = Field::make(3);
  const image::ImageAnalyzer an(rosenlicht::oesterle_group(f));
  std::mt19937_64 rng(3);
  std::vector<Laurent> elems;
  for (int i = 0; i < 64; ++i) elems.push_back(random_laurent(f, rng, -10, 10));
  std::size_t k = 0;
  for (auto _ : state) benchmark::DoNotOptimize(an.decide(elems[k++ % elems.size()]));
}
BENCHMARK(BM_Membership);

void BM_Quotient(benchmark::State& state) {
  const PPoly p = parse_ppoly("t*T1^4 + t^3*T2^4 + T3^2 + T3", Field::make(2));
  for (auto _ : state) benchmark::DoNotOptimize(image::quotient(p));
}
BENCHMARK(BM_Quotient);

void BM_OracleGrowth(benchmark::State& state) {
  const PPoly p = parse_ppoly("T1^3 + t*T2^3 + T2", Field::make(3));
  for (auto _ : state) benchmark::DoNotOptimize(oracle::growth_dims(p));
}
BENCHMARK(BM_OracleGrowth);

void BM_Signatures(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(rosenlicht::enumerate_signatures(2, state.range(0)));
}
BENCHMARK(BM_Signatures)->Arg(8)->Arg(16);

}  // namespace
}  // namespace addpoly

BENCHMARK_MAIN();
