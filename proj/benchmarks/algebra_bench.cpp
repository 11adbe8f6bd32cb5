// Copyright 2026 The artin Authors
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

#include "artin/gorenstein.hpp"
#include "artin/ideal.hpp"
#include "artin/lefschetz.hpp"

namespace artin {
namespace {

const std::vector<std::string> kXYZ = {"x", "y", "z"};

GradedIdeal exceptional(const Field& f) {
  std::vector<Polynomial> g;
  for (const char* s : {"x^2*y", "x^2*z", "y^3", "z^3", "x^4+y^2*z^2"})
    g.push_back(parse_polynomial(s, f, kXYZ));
  return GradedIdeal(f, 3, g);
}

void BM_FieldMul(benchmark::State& state) {
  const Field f = state.range(0) == 0 ? Field::prime(31991) : Field::extension(3, 4);
  Rng rng(1);
  FieldElement a = f.random_nonzero(rng), b = f.random_nonzero(rng);
  for (auto _ : state) {
    a = f.mul(a, b);
    benchmark::DoNotOptimize(a);
  }
}
BENCHMARK(BM_FieldMul)->Arg(0)->Arg(1);

void BM_HilbertFunction(benchmark::State& state) {
  const Field f = Field::prime(31991);
  for (auto _ : state) {
    const GradedIdeal ideal = exceptional(f);
    benchmark::DoNotOptimize(hilbert_function(ideal, 8));
  }
}
BENCHMARK(BM_HilbertFunction)->Unit(benchmark::kMicrosecond);

void BM_WlpExhaustiveGF3(benchmark::State& state) {
  const Field f = Field::prime(3);
  LefschetzOptions o;
  o.exhaustive = true;
  for (auto _ : state) {
    const GradedIdeal ideal = exceptional(f);
    benchmark::DoNotOptimize(wlp_check(ideal, o));
  }
}
BENCHMARK(BM_WlpExhaustiveGF3)->Unit(benchmark::kMicrosecond);

void BM_JordanGeneralGF3(benchmark::State& state) {
  const Field f = Field::prime(3);
  LefschetzOptions o;
  o.exhaustive = true;
  const GradedIdeal ideal = exceptional(f);
  for (auto _ : state) benchmark::DoNotOptimize(jordan_general(ideal, o));
}
BENCHMARK(BM_JordanGeneralGF3)->Unit(benchmark::kMicrosecond);

void BM_CompressedCertify(benchmark::State& state) {
  const Field f = Field::prime(31991);
  std::uint64_t i = 0;
  for (auto _ : state) {
    const auto s = compressed_random(static_cast<int>(state.range(0)), f, derive_seed(7, i++));
    benchmark::DoNotOptimize(certify_gorenstein(s.ideal));
  }
}
BENCHMARK(BM_CompressedCertify)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_PfaffianIdeal(benchmark::State& state) {
  const Field f = Field::prime(31991);
  Rng rng(3);
  for (auto _ : state) {
    const auto m = SkewPolyMatrix::random_be(f, rng);
    benchmark::DoNotOptimize(pfaffian_ideal(m));
  }
}
BENCHMARK(BM_PfaffianIdeal)->Unit(benchmark::kMicrosecond);

}  // namespace
}  // namespace artin
