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

// Acceptance gate: one PASS/FAIL line per criterion. A criterion whose
// statement contradicts the mathematics is listed in kExpectedFailures with
// the reason; it still runs in full and prints FAIL, and the gate exits
// nonzero only for unexpected results.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "artin/cli.hpp"
#include "artin/error.hpp"
#include "artin/planegeom.hpp"

namespace artin {
namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  const char* title;
  double limit_s;
  std::function<Outcome()> run;
};

const std::map<int, const char*> kExpectedFailures = {
    {1, "x, y, z, y+z, y+2z have middle rank 4, forced by the Jordan partitions of criterion 2"},
    {9, "the curvilinear scheme (x^2z-y^3, yz^2, z^3) has linear column (y, z, 0), which has rank 2"},
};

const std::vector<std::string> kXYZ = {"x", "y", "z"};

Polynomial P(const Field& f, const std::string& s) { return parse_polynomial(s, f, kXYZ); }

GradedIdeal make(const Field& f, const std::vector<std::string>& gens) {
  std::vector<Polynomial> g;
  for (const auto& s : gens) g.push_back(P(f, s));
  return GradedIdeal(f, 3, std::move(g));
}

const std::vector<std::string> kExceptional = {"x^2*y", "x^2*z", "y^3", "z^3", "x^4+y^2*z^2"};

std::string join(const std::vector<std::size_t>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

LinearForm form_of(const Field& f, const std::string& text) {
  const Polynomial p = P(f, text);
  Vector c;
  for (int i = 0; i < 3; ++i) c.push_back(p.coefficient(Monomial::variable(3, i)));
  return LinearForm::normalized(f, c);
}

ProjPoint random_point(const Field& f, Rng& rng) {
  while (true) {
    Vector v{f.random(rng), f.random(rng), f.random(rng)};
    if (!std::all_of(v.begin(), v.end(), [&](const auto& e) { return f.is_zero(e); }))
      return ProjPoint::normalized(f, v);
  }
}

std::vector<ProjPoint> distinct_points(const Field& f, std::size_t n, Rng& rng) {
  std::vector<ProjPoint> out;
  while (out.size() < n) {
    ProjPoint p = random_point(f, rng);
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
  }
  return out;
}

// ---------------------------------------------------------------------------

Outcome criterion1() {
  std::ostringstream d;
  bool ok = true;
  cli::RunConfig cfg;
  cfg.command = "wlp";
  cfg.inputs = {std::string(ARTIN_DATA_DIR) + "/exceptional_gf3.ideal"};
  cfg.exhaustive = true;
  const auto r = cli::run_command(cfg);
  if (!r.report || !r.report->wlp) return {false, "wlp run failed: " + r.error};
  const auto& scan = r.report->details["scan"];
  std::map<std::size_t, std::vector<std::string>> by_rank;
  for (const auto& s : scan)
    for (const auto& m : s["ranks"])
      if (m["i"] == 2) by_rank[m["rank"].get<std::size_t>()].push_back(s["form"]);
  ok = ok && r.report->wlp->verdict == "fails" && scan.size() == 13;
  d << "GF(3) verdict " << r.report->wlp->verdict << " over " << scan.size() << " forms; middle ranks:";
  for (const auto& [rank, forms] : by_rank) {
    d << " " << forms.size() << " at rank " << rank;
    if (rank != 5) {
      d << " [";
      for (std::size_t i = 0; i < forms.size(); ++i) d << (i ? " " : "") << forms[i];
      d << "]";
    }
  }
  const bool all_five = by_rank.size() == 1 && by_rank.count(5);
  ok = ok && all_five;
  d << "; other fields:";
  for (const char* field : {"GF(2)", "GF(5)", "GF(7)", "GF(101)", "Q"}) {
    cli::RunConfig c = cfg;
    c.exhaustive = false;
    c.field = field;
    const auto o = cli::run_command(c);
    const std::string v = o.report ? o.report->wlp->verdict : "error";
    d << " " << field << "=" << v;
    ok = ok && v == "holds";
  }
  return {ok, d.str()};
}

Outcome criterion2() {
  const Field f = Field::prime(3);
  const GradedIdeal ideal = make(f, kExceptional);
  LefschetzOptions o;
  o.exhaustive = true;
  const JordanSurvey survey = jordan_general(ideal, o);
  const Partition x = jordan_partition(ideal, form_of(f, "x"));
  const Partition y2z = jordan_partition(ideal, form_of(f, "y+2*z"));
  bool sums = true;
  for (const auto& [form, parts] : survey.table)
    sums = sums && std::accumulate(parts.begin(), parts.end(), std::size_t{0}) == 20;
  const bool ok = survey.majority == Partition{6, 3, 3, 3, 3, 1, 1} &&
                  x == Partition{6, 2, 2, 2, 2, 2, 2, 2} && y2z == Partition{3, 3, 3, 3, 3, 3, 1, 1} &&
                  sums;
  std::ostringstream d;
  d << "general " << join(survey.majority) << " (" << survey.majority_count << "/13 forms), x "
    << join(x) << ", y+2z " << join(y2z) << ", all sum to 20: " << (sums ? "yes" : "no");
  return {ok, d.str()};
}

Outcome criterion3() {
  bool ok = true;
  std::ostringstream d;
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    const Field f = Field::prime(p);
    const GradedIdeal ideal = make(f, {"x^2", "y^3", "z^3"});
    LefschetzOptions o;
    o.exhaustive = true;
    const auto r = wlp_check(ideal, o);
    const bool fails = r.verdict == Verdict::Fails;
    const bool hf = r.hvector == HVector{{1, 3, 5, 5, 3, 1}};
    ok = ok && fails == (p == 3) && hf;
    d << "GF(" << p << ") " << verdict_name(r.verdict) << " h=" << join(r.hvector.values) << "; ";
  }
  return {ok, d.str()};
}

Outcome criterion4() {
  const Field f = Field::prime(3);
  const Polynomial zero(f, 3);
  const SkewPolyMatrix m = SkewPolyMatrix::be_form(
      {P(f, "x^2"), zero, P(f, "y^2"), P(f, "z^2"), zero, P(f, "x^2")},
      {P(f, "y"), P(f, "z"), zero, zero});
  const GradedIdeal pf = pfaffian_ideal(m);
  const GradedIdeal target = make(f, kExceptional);
  bool same = true;
  for (int d = 0; d <= 7; ++d) same = same && pf.component(d)->basis() == target.component(d)->basis();
  const Polynomial quartic = pfaffian(m.principal({0, 1, 2, 3}));
  const Polynomial expected = P(f, "x^4+y^2*z^2");
  const bool sign_ok = quartic == expected || quartic == -expected;
  return {same && sign_ok, std::string("ideals agree through degree 7: ") + (same ? "yes" : "no") +
                               "; 4x4 pfaffian = " + quartic.to_string(kXYZ)};
}

struct CompressedSet {
  std::vector<CompressedSample> gf31991;
};

const CompressedSet& compressed_set() {
  static const CompressedSet set = [] {
    CompressedSet s;
    const Field f = Field::prime(31991);
    for (std::uint64_t i = 0; i < 200; ++i)
      s.gf31991.push_back(compressed_random(5, f, derive_seed(0x5EED31991, i)));
    return s;
  }();
  return set;
}

Outcome criterion5() {
  const HVector target{{1, 3, 6, 6, 3, 1}};
  std::ostringstream d;
  bool ok = true;
  auto run_wlp = [&](const GradedIdeal& ideal, std::uint64_t seed) {
    LefschetzOptions o;
    o.seed = seed;
    return wlp_check(ideal, o).verdict;
  };
  // GF(101)
  {
    const Field f = Field::prime(101);
    std::size_t certified = 0, holds = 0;
    for (std::uint64_t i = 0; i < 200; ++i) {
      const auto s = compressed_random(5, f, derive_seed(0x5EED101, i));
      const auto c = certify_gorenstein(s.ideal);
      if (!c.certified || c.hvector != target) continue;
      ++certified;
      holds += run_wlp(s.ideal, i) == Verdict::Holds;
    }
    ok = ok && certified == 200 && holds == certified;
    d << "GF(101) compressed " << holds << "/" << certified << " hold; ";
  }
  {
    std::size_t certified = 0, holds = 0;
    for (const auto& s : compressed_set().gf31991) {
      const auto c = certify_gorenstein(s.ideal);
      if (!c.certified || c.hvector != target) continue;
      ++certified;
      holds += run_wlp(s.ideal, certified) == Verdict::Holds;
    }
    ok = ok && certified == 200 && holds == certified;
    d << "GF(31991) compressed " << holds << "/" << certified << " hold; ";
  }
  {
    const Field f = Field::prime(31991);
    std::size_t certified = 0, holds = 0, draws = 0;
    std::vector<std::size_t> prefix = target.values;
    prefix.push_back(0);
    while (certified < 200 && draws < 5000) {
      Rng rng(derive_seed(0xBE31991, draws++));
      const auto m = SkewPolyMatrix::random_be(f, rng);
      const GradedIdeal ideal = pfaffian_ideal(m);
      if (hilbert_function(ideal, 6) != prefix) continue;
      const auto c = certify_gorenstein(ideal);
      if (!c.certified) continue;
      ++certified;
      holds += run_wlp(ideal, draws) == Verdict::Holds;
    }
    ok = ok && certified == 200 && holds == certified;
    d << "GF(31991) Buchsbaum-Eisenbud " << holds << "/" << certified << " hold (" << draws << " draws)";
  }
  return {ok, d.str()};
}

Outcome criterion6() {
  std::size_t pass = 0, bijective = 0, hessian_ok = 0, checked_hessian = 0;
  const auto& set = compressed_set().gf31991;
  for (std::size_t k = 0; k < set.size(); ++k) {
    LefschetzOptions o;
    o.seed = k;
    const auto r = slp_check(set[k].ideal, o);
    if (r.verdict != Verdict::Holds) continue;
    ++pass;
    bool b13 = false, b05 = false;
    for (const auto& m : r.ranks) {
      if (m.i == 1 && m.m == 3) b13 = m.rank == 3 && m.rows == 3 && m.cols == 3;
      if (m.i == 0 && m.m == 5) b05 = m.rank == 1 && m.rows == 1 && m.cols == 1;
    }
    bijective += b13 && b05;
    if (k < 20) {
      ++checked_hessian;
      hessian_ok += !hessian_det(set[k].form.to_differential_polynomial()).is_zero();
    }
  }
  std::ostringstream d;
  d << pass << "/200 SLP, " << bijective << "/200 with L^3: A1->A4 and L^5: A0->A5 bijective, "
    << hessian_ok << "/" << checked_hessian << " nonzero hessians";
  return {pass == 200 && bijective == 200 && hessian_ok == checked_hessian, d.str()};
}

Outcome criterion7() {
  const Field f = Field::prime(7);
  const auto b = base_locus(P(f, "x^3+y^3+z^3"), P(f, "x*y*z"));
  std::set<std::string> distinct;
  for (const auto& p : b.points) distinct.insert(p.point.to_string(f));
  const auto h = is_hesse_configuration(b);
  const bool incidence = h.is_hesse && h.lines.size() == 12 &&
                         std::all_of(h.lines_per_point.begin(), h.lines_per_point.end(),
                                     [](int c) { return c == 4; });
  std::size_t false_count = 0;
  std::ostringstream hits;
  const auto all = enumerate_p2(f);
  Rng rng(0x4E55E);
  for (int t = 0; t < 100; ++t) {
    std::vector<ProjPoint> pts;
    std::set<std::size_t> used;
    while (pts.size() < 9) {
      const std::size_t i = rng.below(all.size());
      if (used.insert(i).second) pts.push_back(all[i]);
    }
    if (!is_hesse_configuration(pts, f).is_hesse) {
      ++false_count;
    } else {
      hits << " hit at sample " << t << ":";
      for (const auto& p : pts) hits << " " << p.to_string(f);
    }
  }
  std::ostringstream d;
  d << distinct.size() << " rational points, reduced " << (b.reduced ? "yes" : "no") << ", "
    << h.lines.size() << " lines, Hesse " << (h.is_hesse ? "yes" : "no") << "; random 9-sets false "
    << false_count << "/100" << hits.str();
  return {distinct.size() == 9 && b.splitting_degree == 1 && incidence && false_count == 100,
          d.str()};
}

Outcome criterion8() {
  std::ostringstream d;
  const Field f7 = Field::prime(7);
  const std::vector<Polynomial> w{P(f7, "x^3"), P(f7, "y^3"), P(f7, "z^3"), P(f7, "x*y*z")};
  const auto r = morphism_fibers(w, 200, 1);
  const auto dec = fiber_decomposition(w, 2);
  bool ok = r.generic_fiber_size == 3 && r.image_degree == 3 && dec.collinearity;
  for (auto c : dec.conditions) ok = ok && c == 1;
  d << "<x^3,y^3,z^3,xyz>: fiber " << r.generic_fiber_size << ", image degree " << r.image_degree
    << ", collinearity " << (dec.collinearity ? "yes" : "no") << "; ";
  const Field f = Field::prime(101);
  std::size_t birational = 0, tried = 0;
  Rng rng(0xF1BE);
  for (int k = 0; k < 50; ++k) {
    std::vector<Polynomial> cubics;
    while (true) {
      ++tried;
      cubics.clear();
      for (int i = 0; i < 4; ++i) cubics.push_back(Polynomial::random_form(f, 3, 3, rng));
      try {
        is_artinian(GradedIdeal(f, 3, cubics));
        break;
      } catch (const Error&) {
      }
    }
    const auto fr = morphism_fibers(cubics, 50, rng.next());
    birational += fr.generic_fiber_size == 1 && fr.image_degree == 9;
  }
  d << "random artinian W over GF(101): " << birational << "/50 generically 1-to-1, image degree 9";
  return {ok && birational == 50, d.str()};
}

GradedIdeal change_coordinates(const GradedIdeal& ideal, Rng& rng) {
  const Field& f = ideal.field();
  while (true) {
    ExactMatrix m = ExactMatrix::random(f, 3, 3, rng);
    if (rank(m) != 3) continue;
    std::vector<Polynomial> images;
    for (int i = 0; i < 3; ++i) images.push_back(Polynomial::from_coefficients(f, 3, 1, m.row(i)));
    std::vector<Polynomial> gens;
    for (const auto& g : ideal.generators()) gens.push_back(g.substitute(images));
    return GradedIdeal(f, 3, gens);
  }
}

Outcome criterion9() {
  const Field f = Field::prime(101);
  Rng rng(0x7FAE);
  std::size_t bicond = 0, conic_bicond = 0, reduced = 0, independent = 0, redraws = 0;
  std::size_t example_rank = 0;
  std::ostringstream bad;
  for (int k = 0; k < 50; ++k) {
    std::optional<std::vector<ProjPoint>> pts;
    HbReport r;
    // redraw until the scheme has the length-7 Hilbert function; a random
    // seventh point can land on the conic or repeat a point
    for (int attempt = 0;; ++attempt) {
      GradedIdeal ideal;
      pts.reset();
      if (k < 20) {
        pts = distinct_points(f, 7, rng);
      } else if (k < 40) {
        ExactMatrix m(f, 3, 3);
        do m = ExactMatrix::random(f, 3, 3, rng); while (rank(m) != 3);
        std::vector<ProjPoint> on_conic;
        while (on_conic.size() < 6) {
          const FieldElement s = f.random(rng), u = f.random(rng);
          if (f.is_zero(s) && f.is_zero(u)) continue;
          const Vector v{f.mul(s, s), f.mul(s, u), f.mul(u, u)};
          auto p = ProjPoint::normalized(f, m.apply(v));
          if (std::find(on_conic.begin(), on_conic.end(), p) == on_conic.end()) on_conic.push_back(p);
        }
        on_conic.push_back(random_point(f, rng));
        pts = on_conic;
      }
      ideal = pts ? points_ideal(*pts, f)
                  : change_coordinates(make(f, {"x^2*z-y^3", "y*z^2", "z^3"}), rng);
      try {
        r = hb_analysis(ideal, rng.next());
        break;
      } catch (const Error& e) {
        if (e.code() != ErrorCode::WrongHVector || attempt == 20) throw;
        ++redraws;
      }
    }
    independent += r.independent;
    const bool eq = r.independent == r.completion.has_value();
    bicond += eq;
    if (!eq) bad << " instance " << k << " breaks independence <=> completion;";
    if (pts) {
      ++reduced;
      const bool eq2 = r.independent == !has_six_on_conic(*pts, f);
      conic_bicond += eq2;
      if (!eq2) bad << " instance " << k << " breaks independence <=> no six on a conic;";
    } else if (k == 40) {
      example_rank = r.linear_part_rank;
    }
  }
  std::ostringstream d;
  d << "independence <=> completion on " << bicond << "/50, independence <=> no six on a conic on " << conic_bicond << "/" << reduced
    << " reduced, " << independent << " independent, " << redraws
    << " degenerate redraws; curvilinear scheme rank " << example_rank << bad.str();
  return {bicond == 50 && conic_bicond == reduced && reduced == 40 && example_rank == 3, d.str()};
}

Outcome criterion10() {
  const Field f = Field::prime(101);
  Rng rng(0x64EE4);
  std::size_t ok_count = 0, found = 0, draws = 0;
  std::size_t worst_green = 0, worst_rank = 100;
  const std::vector<std::size_t> prefix{1, 3, 6, 6};
  const auto cubic_monos = monomials_of_degree(3, 3);
  while (found < 100 && draws < 5000) {
    ++draws;
    std::vector<Polynomial> gens;
    for (int i = 0; i < 4; ++i) {
      // sparse cubics with a few terms, plus dense ones
      if (draws % 2) {
        gens.push_back(Polynomial::random_form(f, 3, 3, rng));
      } else {
        Polynomial g(f, 3);
        const int terms = 1 + static_cast<int>(rng.below(3));
        for (int t = 0; t < terms; ++t)
          g += Polynomial::term(f, cubic_monos[rng.below(cubic_monos.size())], f.random_nonzero(rng));
        gens.push_back(g);
      }
    }
    if (draws % 3 == 0) gens.push_back(Polynomial::random_form(f, 3, 4, rng));
    GradedIdeal ideal(f, 3, gens);
    if (hilbert_function(ideal, 3) != prefix) continue;
    try {
      // generators of degree <= 4 contain a regular sequence of such forms,
      // so an artinian quotient vanishes by degree 4+4+4-2
      is_artinian(ideal, 10);
    } catch (const Error&) {
      continue;
    }
    ++found;
    const LinearForm l = LinearForm::random(f, 3, rng);
    const std::size_t g = green_restriction_dim(ideal, l, 3);
    const std::size_t r = mult_map_rank(ideal, l, 2).rank;
    worst_green = std::max(worst_green, g);
    worst_rank = std::min(worst_rank, r);
    ok_count += g <= 1 && r >= 5;
  }
  std::ostringstream d;
  d << ok_count << "/" << found << " satisfy the bound (max restriction dim " << worst_green
    << ", min middle rank " << worst_rank << ", " << draws << " draws)";
  return {found == 100 && ok_count == 100, d.str()};
}

std::string sorted_lines(const std::string& s) {
  std::vector<std::string> lines;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) lines.push_back(l);
  std::sort(lines.begin(), lines.end());
  std::string out;
  for (const auto& l : lines) out += l + "\n";
  return out;
}

Outcome criterion11() {
  const std::uint64_t trials = 10000;
  std::ostringstream d;
  auto run = [&](const Field& f, int workers, cli::SearchSummary* summary) {
    std::ostringstream log;
    auto s = cli::run_search(f, kDefaultSeed, trials, workers, &log);
    if (summary) *summary = std::move(s);
    return log.str();
  };
  const Field f3 = Field::prime(3), f5 = Field::prime(5);
  cli::SearchSummary s3, s5;
  const std::string a = run(f3, 1, &s3);
  const std::string b = run(f3, 1, nullptr);
  const std::string c = run(f3, 4, nullptr);
  bool signatures = true;
  for (const auto& r : s3.records)
    signatures = signatures && r.jordan_general == Partition{6, 3, 3, 3, 3, 1, 1};
  run(f5, 4, &s5);
  const bool replay = a == b;
  const bool workers = sorted_lines(a) == sorted_lines(c);
  d << "GF(3): " << s3.certified << " certified, " << s3.failures << " failures";
  if (s3.failures == 0) d << " (signature condition vacuous)";
  d << "; GF(5): " << s5.certified << " certified, " << s5.failures << " failures; replay "
    << (replay ? "identical" : "differs") << ", workers 1 vs 4 " << (workers ? "identical" : "differ");

  // the record pipeline applied to the exceptional ideal in random coordinates
  Rng rng(0x51C);
  const GradedIdeal moved = change_coordinates(make(f3, kExceptional), rng);
  LefschetzOptions o;
  o.exhaustive = true;
  const bool moved_fails = wlp_check(moved, o).verdict == Verdict::Fails;
  const Partition sig = jordan_general(moved, o).majority;
  d << "; exceptional ideal after a change of variables: " << (moved_fails ? "fails" : "holds")
    << " with general signature " << join(sig);
  return {signatures && s5.failures == 0 && replay && workers && moved_fails &&
              sig == Partition{6, 3, 3, 3, 3, 1, 1},
          d.str()};
}

std::vector<std::size_t> series_ci(const std::vector<int>& degrees, int top) {
  // prod (1 - t^d) / (1 - t)^3, truncated at t^top
  std::vector<long> num(top + 1, 0);
  num[0] = 1;
  for (int d : degrees)
    for (int i = top; i >= d; --i) num[i] -= num[i - d];
  std::vector<long> coeffs(top + 1, 0);
  for (int i = 0; i <= top; ++i)
    for (int j = 0; j <= i; ++j) coeffs[i] += num[j] * static_cast<long>((i - j + 1) * (i - j + 2) / 2);
  std::vector<std::size_t> out;
  for (long c : coeffs) out.push_back(static_cast<std::size_t>(c));
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

Outcome criterion12() {
  const Field f = Field::prime(101);
  Rng rng(0x0AC1E);
  std::size_t agree = 0;
  for (int k = 0; k < 200; ++k) {
    std::vector<Monomial> gens;
    const int count = 1 + static_cast<int>(rng.below(6));
    for (int i = 0; i < count; ++i) {
      const auto monos = monomials_of_degree(3, 1 + static_cast<int>(rng.below(5)));
      gens.push_back(monos[rng.below(monos.size())]);
    }
    std::vector<Polynomial> polys;
    for (const auto& m : gens) polys.push_back(Polynomial::term(f, m, f.one()));
    const auto hf = hilbert_function(GradedIdeal(f, 3, polys), 10);
    bool same = true;
    for (int d = 0; d <= 10; ++d) {
      std::size_t standard = 0;
      for (const auto& m : monomials_of_degree(3, d))
        standard += std::none_of(gens.begin(), gens.end(), [&](const Monomial& g) { return g.divides(m); });
      same = same && hf[d] == standard;
    }
    agree += same;
  }
  std::ostringstream d;
  d << "monomial oracle " << agree << "/200;";
  bool series = true;
  const std::vector<std::pair<std::vector<std::string>, std::vector<int>>> cis = {
      {{"x^3", "y^3", "z^3"}, {3, 3, 3}}, {{"x^2", "y^3", "z^3"}, {2, 3, 3}}, {{"x^2", "y^2", "z^2"}, {2, 2, 2}}};
  for (const auto& [gens, degrees] : cis) {
    const auto h = hvector(make(Field::rationals(), gens)).values;
    const auto expected = series_ci(degrees, 12);
    series = series && h == expected;
    d << " " << join(h);
  }
  return {agree == 200 && series && series_ci({3, 3, 3}, 12) == std::vector<std::size_t>{1, 3, 6, 7, 6, 3, 1} &&
              series_ci({2, 3, 3}, 12) == std::vector<std::size_t>{1, 3, 5, 5, 3, 1} &&
              series_ci({2, 2, 2}, 12) == std::vector<std::size_t>{1, 3, 3, 1},
          d.str()};
}

}  // namespace
}  // namespace artin

int main(int argc, char** argv) {
  using namespace artin;
  const std::vector<Criterion> criteria = {
      {1, "exceptional ideal fails WLP only in characteristic 3", 1, criterion1},
      {2, "Jordan partitions of the exceptional algebra", 1, criterion2},
      {3, "(x^2, y^3, z^3) fails WLP iff p = 3", 1, criterion3},
      {4, "pfaffian reconstruction of the exceptional ideal", 1, criterion4},
      {5, "compressed and Buchsbaum-Eisenbud samples have the WLP", 60, criterion5},
      {6, "SLP at socle degree 5", 120, criterion6},
      {7, "Hesse configuration detection", 5, criterion7},
      {8, "fibers of the cubic morphism", 30, criterion8},
      {9, "length-7 schemes: linear part vs Gorenstein completion", 30, criterion9},
      {10, "Green bound on random algebras", 10, criterion10},
      {11, "search harness", 600, criterion11},
      {12, "Hilbert function oracles", 10, criterion12},
  };
  std::set<int> only;
  for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));

  int unexpected = 0;
  for (const auto& c : criteria) {
    if (!only.empty() && !only.count(c.id)) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.limit_s) {
      o.pass = false;
      o.detail += "; over time budget";
    }
    const auto expected = kExpectedFailures.find(c.id);
    std::string status;
    if (o.pass && expected == kExpectedFailures.end()) {
      status = "PASS";
    } else if (!o.pass && expected != kExpectedFailures.end()) {
      status = std::string("FAIL (expected: ") + expected->second + ")";
    } else if (o.pass) {
      status = "PASS (listed as an expected failure; update the list)";
      ++unexpected;
    } else {
      status = "FAIL";
      ++unexpected;
    }
    std::printf("criterion %2d [PRIMARY] %s: %s -- %s (%.2f s)\n", c.id, c.title, status.c_str(),
                o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  return unexpected == 0 ? 0 : 1;
}
