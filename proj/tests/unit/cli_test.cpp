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

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "artin/cli.hpp"
#include "artin/error.hpp"

namespace artin::cli {
namespace {

std::string data(const char* name) { return std::string(ARTIN_DATA_DIR) + "/" + name; }

RunConfig config(const std::string& command, std::vector<std::string> inputs = {}) {
  RunConfig c;
  c.command = command;
  c.inputs = std::move(inputs);
  return c;
}

ErrorCode parse_error_code(std::string_view text) {
  try {
    parse_ideal_text(text);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error for " << text;
  return ErrorCode::IoError;
}

TEST(IdealFileTest, ExceptionalIdeal) {
  const IdealFile f = parse_ideal_file(data("exceptional_gf3.ideal"));
  EXPECT_EQ(f.field, Field::prime(3));
  EXPECT_EQ(f.gens.size(), 5u);
  EXPECT_EQ(hvector(to_ideal(f)), (HVector{{1, 3, 6, 6, 3, 1}}));
}

TEST(IdealFileTest, DefaultsAndOverride) {
  const IdealFile q = parse_ideal_text("# comment only line\ngen x^2   # trailing\ngen y^3\ngen z^3\n");
  EXPECT_EQ(q.field, Field::rationals());
  EXPECT_EQ(hvector(to_ideal(q)), (HVector{{1, 3, 5, 5, 3, 1}}));
  const IdealFile o = parse_ideal_text("field Q\ngen x^2\n", std::string("GF(7)"));
  EXPECT_EQ(o.field, Field::prime(7));
  const IdealFile v = parse_ideal_text("vars a b\ngen a*b\n");
  EXPECT_EQ(v.vars.size(), 2u);
  EXPECT_EQ(v.gens.front().nvars(), 2);
}

TEST(IdealFileTest, Errors) {
  EXPECT_EQ(parse_error_code("gen x^\n"), ErrorCode::ParseError);
  EXPECT_EQ(parse_error_code("gen x+y^2\n"), ErrorCode::InhomogeneousGenerator);
  EXPECT_EQ(parse_error_code("gen w^2\n"), ErrorCode::UnknownVariable);
  EXPECT_EQ(parse_error_code("generator x\n"), ErrorCode::ParseError);
  EXPECT_EQ(parse_error_code("field GF(4\n"), ErrorCode::ParseError);
  try {
    parse_ideal_text("field Q\n\ngen x^\n");
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
}

TEST(SkewFileTest, Headers) {
  const SkewFile s = parse_skew_text(read_file(data("exceptional_be.skew")));
  EXPECT_EQ(s.field, Field::prime(3));
  EXPECT_EQ(s.matrix.size(), 5);
}

TEST(ShaTest, KnownDigest) {
  EXPECT_EQ(sha256_hex("abc"),
            "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST(RunTest, ExceptionalWlpFails) {
  RunConfig c = config("wlp", {data("exceptional_gf3.ideal")});
  c.exhaustive = true;
  const RunResult r = run_command(c);
  ASSERT_EQ(r.exit_code, 0) << r.error;
  ASSERT_TRUE(r.report->wlp);
  EXPECT_EQ(r.report->wlp->verdict, "fails");
  EXPECT_FALSE(r.report->wlp->witness);
  EXPECT_EQ(r.report->details["forms_examined"], 13);
  EXPECT_EQ(r.report->field, "GF(3)");
  EXPECT_EQ(r.report->input_sha256->size(), 64u);
}

TEST(RunTest, OtherFieldsHold) {
  for (const char* field : {"GF(2)", "GF(5)", "GF(7)", "GF(101)", "Q"}) {
    RunConfig c = config("wlp", {data("exceptional_gf3.ideal")});
    c.field = field;
    const RunResult r = run_command(c);
    ASSERT_EQ(r.exit_code, 0) << field << " " << r.error;
    EXPECT_EQ(r.report->wlp->verdict, "holds") << field;
    EXPECT_TRUE(r.report->wlp->witness.has_value());
  }
}

TEST(RunTest, JordanAndHilbert) {
  RunConfig j = config("jordan", {data("exceptional_gf3.ideal")});
  j.form = "x";
  auto r = run_command(j);
  ASSERT_EQ(r.exit_code, 0) << r.error;
  EXPECT_EQ(r.report->jordan->parts, (std::vector<std::size_t>{6, 2, 2, 2, 2, 2, 2, 2}));
  j.form.reset();
  r = run_command(j);
  EXPECT_EQ(r.report->jordan->parts, (std::vector<std::size_t>{6, 3, 3, 3, 3, 1, 1}));
  r = run_command(config("hilbert", {data("ci_3_3_3.ideal")}));
  EXPECT_EQ(*r.report->hvector, (std::vector<std::size_t>{1, 3, 6, 7, 6, 3, 1}));
}

TEST(RunTest, ExitCodes) {
  EXPECT_EQ(run_command(config("hilbert", {"/nonexistent/file.ideal"})).exit_code, 2);
  EXPECT_EQ(run_command(config("bogus", {data("ci_3_3_3.ideal")})).exit_code, 2);
  EXPECT_EQ(run_command(config("hilbert")).exit_code, 2);
  const std::string tmp = ::testing::TempDir() + "artin_bad.ideal";
  std::ofstream(tmp) << "gen x^\n";
  EXPECT_EQ(run_command(config("hilbert", {tmp})).exit_code, 2);
  // over Q a random search cannot certify a failure
  std::ofstream(tmp) << "gen x^3\ngen y^3\ngen z^3\ngen x*y*z\n";
  RunConfig w = config("wlp", {tmp});
  w.trials = 3;
  EXPECT_EQ(run_command(w).exit_code, 3);
  // a failing verdict is a successful computation
  std::ofstream(tmp) << "field GF(3)\ngen x^2\ngen y^3\ngen z^3\n";
  w.exhaustive = true;
  const auto r = run_command(w);
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.report->wlp->verdict, "fails");
  std::remove(tmp.c_str());
}

TEST(RunTest, GeometryCommands) {
  auto r = run_command(config("hesse", {data("hesse_gf7.ideal")}));
  ASSERT_EQ(r.exit_code, 0) << r.error;
  EXPECT_EQ(r.report->details["hesse"], true);
  EXPECT_EQ(r.report->details["lines"].size(), 12u);
  r = run_command(config("fibers", {data("three_to_one_gf7.ideal")}));
  ASSERT_EQ(r.exit_code, 0) << r.error;
  EXPECT_EQ(r.report->details["generic_fiber_size"], 3);
  EXPECT_EQ(r.report->details["collinearity"], true);
  r = run_command(config("linkage", {data("curvilinear.skew")}));
  ASSERT_EQ(r.exit_code, 0) << r.error;
  EXPECT_EQ(r.report->details["degree_y"], 8);
  r = run_command(config("pfaffian", {data("exceptional_be.skew")}));
  EXPECT_EQ(*r.report->hvector, (std::vector<std::size_t>{1, 3, 6, 6, 3, 1}));
}

TEST(ReportTest, JsonRoundTrip) {
  std::vector<RunConfig> configs = {config("wlp", {data("exceptional_gf3.ideal")}),
                                    config("jordan", {data("exceptional_gf3.ideal")}),
                                    config("hilbert", {data("ci_2_3_3.ideal")}),
                                    config("hesse", {data("hesse_gf7.ideal")})};
  configs[0].exhaustive = true;
  for (const auto& c : configs) {
    const auto r = run_command(c);
    ASSERT_TRUE(r.report) << r.error;
    const auto j = to_json(*r.report);
    EXPECT_EQ(report_from_json(nlohmann::json::parse(j.dump())), *r.report) << c.command;
    for (const char* key : {"schema_version", "command", "field", "input_sha256", "hvector", "wlp",
                            "jordan", "timing_ms"})
      EXPECT_TRUE(j.contains(key)) << key;
    EXPECT_EQ(j["schema_version"], 1);
  }
}

TEST(ReportTest, TextMirrorsJson) {
  const auto r = run_command(config("hilbert", {data("ci_3_3_3.ideal")}));
  const std::string text = render_text(*r.report);
  EXPECT_NE(text.find("hvector: [1,3,6,7,6,3,1]"), std::string::npos) << text;
}

std::string search_log(const Field& f, std::uint64_t trials, int workers) {
  std::ostringstream out;
  run_search(f, kDefaultSeed, trials, workers, &out);
  return out.str();
}

TEST(SearchTest, ZeroTrials) {
  std::ostringstream out;
  const auto s = run_search(Field::prime(3), kDefaultSeed, 0, 2, &out);
  EXPECT_EQ(s.trials, 0u);
  EXPECT_EQ(s.certified, 0u);
  EXPECT_EQ(s.failures, 0u);
  EXPECT_TRUE(out.str().empty());
}

TEST(SearchTest, ReplayAndWorkerIndependence) {
  // small fields have few linear forms, so GF(2) produces failures to compare
  const Field f = Field::prime(2);
  const std::string a = search_log(f, 400, 1);
  EXPECT_FALSE(a.empty());
  EXPECT_EQ(a, search_log(f, 400, 1));
  EXPECT_EQ(a, search_log(f, 400, 4));
}

TEST(SearchTest, RecordsReplay) {
  const Field f = Field::prime(2);
  const auto s = run_search(f, kDefaultSeed, 300, 1, nullptr);
  ASSERT_FALSE(s.records.empty());
  for (const auto& rec : s.records) {
    EXPECT_EQ(search_record_from_json(to_json(rec)), rec);
    const auto again = search_trial(f, kDefaultSeed, rec.trial_index);
    ASSERT_TRUE(again.failure);
    EXPECT_EQ(*again.failure, rec);
    EXPECT_EQ(rec.seed, derive_seed(kDefaultSeed, rec.trial_index));
  }
}

TEST(SearchTest, IoErrorOnBadStream) {
  std::ostringstream out;
  out.setstate(std::ios::badbit);
  try {
    run_search(Field::prime(2), kDefaultSeed, 300, 1, &out);
    ADD_FAILURE() << "expected IoError";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::IoError);
  }
}

}  // namespace
}  // namespace artin::cli
