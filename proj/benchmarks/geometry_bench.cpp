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

#include "artin/planegeom.hpp"

namespace artin {
namespace {

const std::vector<std::string> kXYZ = {"x", "y", "z"};

void BM_BaseLocusFermatPencil(benchmark::State& state) {
  const Field f = Field::prime(static_cast<std::uint32_t>(state.range(0)));
  const Polynomial g1 = parse_polynomial("x^3+y^3+z^3", f, kXYZ);
  const Polynomial g2 = parse_polynomial("x*y*z", f, kXYZ);
  for (auto _ : state) benchmark::DoNotOptimize(base_locus(g1, g2));
}
BENCHMARK(BM_BaseLocusFermatPencil)->Arg(7)->Arg(31)->Unit(benchmark::kMillisecond);

void BM_HesseCheck(benchmark::State& state) {
  const Field f = Field::prime(7);
  const auto b = base_locus(parse_polynomial("x^3+y^3+z^3", f, kXYZ),
                            parse_polynomial("x*y*z", f, kXYZ));
  for (auto _ : state) benchmark::DoNotOptimize(is_hesse_configuration(b));
}
BENCHMARK(BM_HesseCheck)->Unit(benchmark::kMicrosecond);

void BM_HbAnalysisSevenPoints(benchmark::State& state) {
  const Field f = Field::prime(101);
  Rng rng(11);
  std::vector<ProjPoint> pts;
  while (pts.size() < 7) {
    auto p = ProjPoint::normalized(f, {f.random(rng), f.random(rng), f.one()});
    if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
  }
  const GradedIdeal ideal = points_ideal(pts, f);
  for (auto _ : state) benchmark::DoNotOptimize(hb_analysis(ideal, 5));
}
BENCHMARK(BM_HbAnalysisSevenPoints)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace artin
