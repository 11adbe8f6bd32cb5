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

#include <numeric>

#include "artin/error.hpp"
#include "artin/lefschetz.hpp"

namespace artin {
namespace {

const std::vector<std::string> kXYZ = {"x", "y", "z"};

GradedIdeal make(const Field& f, std::initializer_list<const char*> gens) {
  std::vector<Polynomial> g;
  for (const char* s : gens) g.push_back(parse_polynomial(s, f, kXYZ));
  return GradedIdeal(f, 3, std::move(g));
}

GradedIdeal exceptional(const Field& f) {
  return make(f, {"x^2*y", "x^2*z", "y^3", "z^3", "x^4+y^2*z^2"});
}

LinearForm form(const Field& f, std::initializer_list<int> c) {
  Vector v;
  for (int a : c) v.push_back(f.from_int(a));
  return LinearForm::normalized(f, v);
}

TEST(LinearFormTest, EnumerationCountsPoints) {
  EXPECT_EQ(all_linear_forms(Field::prime(3), 3).size(), 13u);
  EXPECT_EQ(all_linear_forms(Field::prime(7), 3).size(), 57u);
  EXPECT_EQ(all_linear_forms(Field::parse("GF(2^2)"), 3).size(), 21u);
  const auto f = Field::prime(5);
  EXPECT_EQ(form(f, {0, 2, 4}), form(f, {0, 1, 2}));
}

TEST(MultRankTest, ExceptionalMiddleMap) {
  const Field f = Field::prime(3);
  auto I = exceptional(f);
  // The partition (6,2,...,2) of x leaves room for only 1 + 3 strings across A_2 -> A_3.
  auto r = mult_map_rank(I, form(f, {1, 0, 0}), 2);
  EXPECT_EQ(r.rank, 4u);
  EXPECT_EQ(r.rows, 6u);
  EXPECT_EQ(r.cols, 6u);
  EXPECT_EQ(mult_map_rank(I, form(f, {1, 1, 1}), 6).rank, 0u);
  EXPECT_EQ(mult_map_rank(I, form(f, {1, 1, 2}), 2).rank, 5u);
}

TEST(WlpTest, ExceptionalIdealFailsOnlyInCharacteristicThree) {
  LefschetzOptions ex;
  ex.exhaustive = true;
  auto rep = wlp_check(exceptional(Field::prime(3)), ex);
  EXPECT_EQ(rep.verdict, Verdict::Fails);
  EXPECT_EQ(rep.scan.size(), 13u);
  std::size_t five = 0;
  for (const auto& s : rep.scan) {
    EXPECT_LE(s.ranks[2].rank, 5u);
    five += s.ranks[2].rank == 5 ? 1 : 0;
  }
  EXPECT_EQ(five, 8u);
  for (const char* name : {"GF(2)", "GF(5)", "GF(7)"}) {
    EXPECT_EQ(wlp_check(exceptional(Field::parse(name)), ex).verdict, Verdict::Holds) << name;
  }
  EXPECT_EQ(wlp_check(exceptional(Field::prime(101))).verdict, Verdict::Holds);
  EXPECT_EQ(wlp_check(exceptional(Field::rationals())).verdict, Verdict::Holds);
}

TEST(WlpTest, CompleteIntersectionFailsOnlyInCharacteristicThree) {
  LefschetzOptions ex;
  ex.exhaustive = true;
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    auto rep = wlp_check(make(Field::prime(p), {"x^2", "y^3", "z^3"}), ex);
    EXPECT_EQ(rep.verdict, p == 3 ? Verdict::Fails : Verdict::Holds) << p;
  }
  LefschetzOptions rnd;
  rnd.trials = 20;
  EXPECT_EQ(wlp_check(make(Field::prime(5), {"x^2", "y^3", "z^3"}), rnd).verdict, Verdict::Holds);
}

TEST(WlpTest, UndeterminedOverQ) {
  const Field q = Field::rationals();
  EXPECT_EQ(wlp_check(make(q, {"x", "y", "z"})).verdict, Verdict::Holds);
  // x L : A_2 -> A_3 is never injective here, in any characteristic.
  LefschetzOptions opt;
  opt.trials = 5;
  try {
    wlp_check(make(q, {"x^3", "y^3", "z^3", "x*y*z"}), opt);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UndeterminedOverQ);
  }
  auto rep = wlp_check(make(Field::prime(101), {"x^3", "y^3", "z^3", "x*y*z"}), opt);
  EXPECT_EQ(rep.verdict, Verdict::Undetermined);
  EXPECT_EQ(rep.trials, 5);
}

TEST(SlpTest, Examples) {
  LefschetzOptions ex;
  ex.exhaustive = true;
  EXPECT_EQ(slp_check(exceptional(Field::prime(3)), ex).verdict, Verdict::Fails);
  EXPECT_EQ(slp_check(make(Field::rationals(), {"x", "y", "z"})).verdict, Verdict::Holds);
  auto rep = slp_check(make(Field::prime(31991), {"x^3", "y^3", "z^3"}));
  EXPECT_EQ(rep.verdict, Verdict::Holds);
  EXPECT_EQ(rep.ranks.size(), 21u);  // pairs i < j in 0..6
}

TEST(JordanTest, ExceptionalPartitions) {
  const Field f = Field::prime(3);
  auto I = exceptional(f);
  EXPECT_EQ(jordan_partition(I, form(f, {1, 0, 0})), (Partition{6, 2, 2, 2, 2, 2, 2, 2}));
  EXPECT_EQ(jordan_partition(I, form(f, {0, 1, 2})), (Partition{3, 3, 3, 3, 3, 3, 1, 1}));
  LefschetzOptions ex;
  ex.exhaustive = true;
  auto survey = jordan_general(I, ex);
  EXPECT_EQ(survey.majority, (Partition{6, 3, 3, 3, 3, 1, 1}));
  for (const auto& [l, p] : survey.table) {
    EXPECT_EQ(std::accumulate(p.begin(), p.end(), std::size_t{0}), 20u);
  }
}

TEST(JordanTest, WitnessHasOnePartPerRowOfTheDiagram) {
  const Field f = Field::prime(101);
  auto I = exceptional(f);
  Rng rng(4);
  auto p = jordan_partition(I, LinearForm::random(f, 3, rng));
  // WLP holds, so parts = max h_i = 6 ... the number of strings equals max h.
  EXPECT_EQ(p.size(), 6u);
  EXPECT_EQ(p, (Partition{6, 4, 4, 2, 2, 2}));
}

TEST(GreenTest, Examples) {
  const Field f = Field::prime(101);
  GradedIdeal zero(f, 3, {});
  EXPECT_EQ(green_restriction_dim(zero, form(f, {1, 2, 3}), 3), 4u);
  const Field f3 = Field::prime(3);
  Rng rng(2);
  EXPECT_EQ(green_restriction_dim(exceptional(f3), form(f3, {1, 1, 1}), 3), 1u);
}

TEST(InheritanceTest, IntersectionOfCompleteIntersections) {
  const Field f = Field::prime(31991);
  std::vector<GradedIdeal> cis = {make(f, {"x^2", "y^2", "z^3"}), make(f, {"x^3", "y^2", "z^2"}),
                                  make(f, {"x^2", "y^3", "z^2"})};
  Rng rng(12);
  const auto l = LinearForm::random(f, 3, rng);
  EXPECT_TRUE(injectivity_inheritance_check(cis, l, 1));
  std::vector<GradedIdeal> one = {cis[0]};
  EXPECT_TRUE(injectivity_inheritance_check(one, l, 1));
  // Injectivity fails from A_2 for (x^2,y^2,z^3): h=(1,3,4,3,1).
  try {
    injectivity_inheritance_check(one, l, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::PreconditionFailed);
  }
}

TEST(RankSymmetryTest, GorensteinPairing) {
  const Field f = Field::prime(3);
  auto I = exceptional(f);
  for (const auto& l : all_linear_forms(f, 3)) {
    for (int i = 0; i < 5; ++i) {
      EXPECT_EQ(mult_map_rank(I, l, i).rank, mult_map_rank(I, l, 4 - i).rank);
    }
  }
}

TEST(RankTest, PowersAreMonotone) {
  const Field f = Field::prime(7);
  auto I = make(f, {"x^3", "y^3", "z^3"});
  Rng rng(5);
  const auto l = LinearForm::random(f, 3, rng);
  for (int i = 0; i < 6; ++i) {
    for (int m = 1; i + m + 1 <= 6; ++m) {
      EXPECT_GE(mult_map_rank(I, l, i, m).rank, mult_map_rank(I, l, i, m + 1).rank);
    }
  }
}

TEST(WlpTest, RandomAndExhaustiveAgree) {
  Rng rng(77);
  for (std::uint32_t p : {2u, 3u}) {
    const Field f = Field::prime(p);
    for (int t = 0; t < 25; ++t) {
      std::vector<Polynomial> gens = {parse_polynomial("x^3", f, kXYZ),
                                      parse_polynomial("y^3", f, kXYZ),
                                      parse_polynomial("z^3", f, kXYZ)};
      gens.push_back(Polynomial::random_form(f, 3, 2 + static_cast<int>(rng.below(2)), rng));
      GradedIdeal I(f, 3, gens);
      LefschetzOptions ex;
      ex.exhaustive = true;
      LefschetzOptions rnd;
      rnd.trials = 200;
      rnd.seed = t;
      const auto a = wlp_check(I, ex).verdict;
      const auto b = wlp_check(I, rnd).verdict;
      if (a == Verdict::Holds) {
        EXPECT_EQ(b, Verdict::Holds);
      } else {
        EXPECT_EQ(b, Verdict::Undetermined);
      }
    }
  }
}

}  // namespace
}  // namespace artin
