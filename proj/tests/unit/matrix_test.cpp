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

#include <gtest/gtest.h>

#include "artin/matrix.hpp"
#include "artin/random.hpp"

namespace artin {
namespace {

TEST(MatrixTest, Basics) {
  const Field q = Field::rationals();
  EXPECT_EQ(rank(ExactMatrix::identity(q, 3)), 3u);
  EXPECT_EQ(kernel_basis(ExactMatrix(q, 2, 3)).size(), 3u);
  const Field f2 = Field::prime(2);
  const auto k = kernel_basis(ExactMatrix::from_ints(f2, {{1, 1}}));
  ASSERT_EQ(k.size(), 1u);
  EXPECT_EQ(k[0], (Vector{f2.one(), f2.one()}));
}

TEST(MatrixTest, Intersections) {
  const Field q = Field::rationals();
  auto a = ExactMatrix::from_ints(q, {{1, 0, 0}, {0, 1, 0}});
  auto b = ExactMatrix::from_ints(q, {{0, 1, 0}, {0, 0, 1}});
  EXPECT_EQ(row_space_intersection(a, b), ExactMatrix::from_ints(q, {{0, 1, 0}}));
  EXPECT_EQ(row_space_intersection(a, a).rows(), 2u);
  auto c = ExactMatrix::from_ints(q, {{0, 0, 1}});
  EXPECT_EQ(row_space_intersection(a, c).rows(), 0u);
}

class RandomMatrices : public ::testing::TestWithParam<const char*> {};

TEST_P(RandomMatrices, RankKernelAndRrefProperties) {
  const Field f = Field::parse(GetParam());
  Rng rng(1234);
  for (int t = 0; t < 30; ++t) {
    const std::size_t r = 1 + rng.below(7);
    const std::size_t c = 1 + rng.below(7);
    // Low-rank products exercise dependent rows.
    const std::size_t inner = 1 + rng.below(5);
    auto m = ExactMatrix::random(f, r, inner, rng) * ExactMatrix::random(f, inner, c, rng);
    const std::size_t rk = rank(m);
    EXPECT_EQ(rk, rank(m.transpose()));
    EXPECT_LE(rk, inner);
    const auto ker = kernel_basis(m);
    EXPECT_EQ(ker.size(), c - rk);
    for (const auto& v : ker) {
      for (const auto& x : m.apply(v)) EXPECT_TRUE(f.is_zero(x));
    }
    auto rr = rref(m);
    EXPECT_EQ(rref(rr.reduced).reduced, rr.reduced);
    auto n = ExactMatrix::random(f, r, c, rng);
    EXPECT_LE(rank(m + n), rk + rank(n));
  }
}

INSTANTIATE_TEST_SUITE_P(Kinds, RandomMatrices,
                         ::testing::Values("Q", "GF(2)", "GF(3)", "GF(31991)", "GF(3^2)"));

TEST(MatrixTest, DeterminantMatchesRank) {
  const Field f = Field::prime(7);
  auto m = ExactMatrix::from_ints(f, {{1, 2}, {3, 4}});
  EXPECT_EQ(determinant(m), f.from_int(-2));
  auto s = ExactMatrix::from_ints(f, {{1, 2}, {2, 4}});
  EXPECT_TRUE(f.is_zero(determinant(s)));
}

}  // namespace
}  // namespace artin
