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

#include "artin/cli.hpp"

#include <openssl/evp.h>

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "artin/error.hpp"
#include "artin/planegeom.hpp"

namespace artin::cli {

using nlohmann::json;

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

struct Line {
  int number;
  std::string keyword;
  std::string rest;
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  std::istringstream in{std::string(text)};
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    const std::string line = trim(raw);
    if (line.empty()) continue;
    const auto space = line.find_first_of(" \t");
    out.push_back({number, line.substr(0, space),
                   space == std::string::npos ? std::string() : trim(line.substr(space))});
  }
  return out;
}

Error at_line(const Error& e, int line) {
  return Error(e.code(), "line " + std::to_string(line) + ": " + e.what());
}

// field and vars headers shared by both file formats
void read_headers(const std::vector<Line>& lines, const std::optional<std::string>& override_field,
                  Field& field, std::vector<std::string>& vars) {
  for (const auto& l : lines) {
    if (l.keyword == "field") {
      try {
        const Field parsed = Field::parse(l.rest);
        if (!override_field) field = parsed;
      } catch (const Error& e) {
        throw Error(ErrorCode::ParseError, "line " + std::to_string(l.number) + ": " + e.what());
      }
    } else if (l.keyword == "vars") {
      std::istringstream names(l.rest);
      vars.clear();
      for (std::string n; names >> n;) vars.push_back(n);
      if (vars.empty())
        throw Error(ErrorCode::ParseError, "line " + std::to_string(l.number) + ": empty vars");
    }
  }
  if (override_field) field = Field::parse(*override_field);
}

DualForm to_dual(const Polynomial& p) {
  const int d = *p.homogeneous_degree();
  DualForm f(p.field(), p.nvars(), d);
  for (const auto& [m, c] : p.terms()) f.add_term(m, c);
  return f;
}

std::vector<std::string> strings(const std::vector<Polynomial>& ps,
                                 const std::vector<std::string>& names) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.to_string(names));
  return out;
}

}  // namespace

IdealFile parse_ideal_text(std::string_view text, const std::optional<std::string>& field_override) {
  const auto lines = split_lines(text);
  IdealFile out;
  read_headers(lines, field_override, out.field, out.vars);
  for (const auto& l : lines) {
    if (l.keyword == "field" || l.keyword == "vars") continue;
    if (l.keyword != "gen" && l.keyword != "dual")
      throw Error(ErrorCode::ParseError,
                  "line " + std::to_string(l.number) + ": unknown keyword '" + l.keyword + "'");
    Polynomial p;
    try {
      p = parse_polynomial(l.rest, out.field, out.vars);
    } catch (const Error& e) {
      throw at_line(e, l.number);
    }
    if (!p.is_zero() && !p.homogeneous_degree())
      throw Error(ErrorCode::InhomogeneousGenerator,
                  "line " + std::to_string(l.number) + ": " + p.to_string(out.vars));
    if (l.keyword == "gen") {
      out.gens.push_back(std::move(p));
    } else {
      if (p.is_zero())
        throw Error(ErrorCode::ParseError, "line " + std::to_string(l.number) + ": zero dual form");
      out.duals.push_back(to_dual(p));
    }
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

IdealFile parse_ideal_file(const std::string& path, const std::optional<std::string>& field_override) {
  return parse_ideal_text(read_file(path), field_override);
}

GradedIdeal to_ideal(const IdealFile& file) {
  return GradedIdeal(file.field, static_cast<int>(file.vars.size()), file.gens);
}

SkewFile parse_skew_text(std::string_view text, const std::optional<std::string>& field_override) {
  SkewFile out;
  read_headers(split_lines(text), field_override, out.field, out.vars);
  out.matrix = parse_skew_matrix(text, out.field, out.vars);
  return out;
}

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (!EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr))
    throw Error(ErrorCode::IoError, "sha256 failed");
  std::ostringstream hex;
  for (unsigned int i = 0; i < len; ++i)
    hex << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  return hex.str();
}

json to_json(const Report& r) {
  json j;
  j["schema_version"] = r.schema_version;
  j["command"] = r.command;
  j["field"] = r.field;
  j["input_sha256"] = r.input_sha256 ? json(*r.input_sha256) : json(nullptr);
  j["hvector"] = r.hvector ? json(*r.hvector) : json(nullptr);
  if (r.wlp) {
    json ranks = json::array();
    for (const auto& e : r.wlp->ranks)
      ranks.push_back({{"i", e.i}, {"rank", e.rank}, {"rows", e.rows}, {"cols", e.cols}});
    j["wlp"] = {{"verdict", r.wlp->verdict},
                {"witness", r.wlp->witness ? json(*r.wlp->witness) : json(nullptr)},
                {"ranks", ranks}};
  } else {
    j["wlp"] = nullptr;
  }
  j["jordan"] = r.jordan ? json{{"form", r.jordan->form}, {"parts", r.jordan->parts}}
                         : json(nullptr);
  j["details"] = r.details;
  j["timing_ms"] = r.timing_ms;
  return j;
}

Report report_from_json(const json& j) {
  Report r;
  r.schema_version = j.at("schema_version").get<int>();
  r.command = j.at("command").get<std::string>();
  r.field = j.at("field").get<std::string>();
  if (!j.at("input_sha256").is_null()) r.input_sha256 = j["input_sha256"].get<std::string>();
  if (!j.at("hvector").is_null()) r.hvector = j["hvector"].get<std::vector<std::size_t>>();
  if (!j.at("wlp").is_null()) {
    WlpSection w;
    w.verdict = j["wlp"].at("verdict").get<std::string>();
    if (!j["wlp"].at("witness").is_null()) w.witness = j["wlp"]["witness"].get<std::string>();
    for (const auto& e : j["wlp"].at("ranks"))
      w.ranks.push_back({e.at("i").get<int>(), e.at("rank").get<std::size_t>(),
                         e.at("rows").get<std::size_t>(), e.at("cols").get<std::size_t>()});
    r.wlp = std::move(w);
  }
  if (!j.at("jordan").is_null())
    r.jordan = JordanSection{j["jordan"].at("form").get<std::string>(),
                             j["jordan"].at("parts").get<std::vector<std::size_t>>()};
  if (j.contains("details")) r.details = j["details"];
  r.timing_ms = j.at("timing_ms").get<double>();
  return r;
}

std::string render_text(const Report& report) {
  std::ostringstream out;
  const json j = to_json(report);
  for (const auto& [key, value] : j.items()) {
    if (key == "details") continue;
    out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
  }
  for (const auto& [key, value] : report.details.items())
    out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
  return out.str();
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::UndeterminedOverQ:
    case ErrorCode::NotStabilized:
    case ErrorCode::Inconclusive:
      return 3;
    default:
      return 2;
  }
}

namespace {

struct Context {
  const RunConfig& cfg;
  Report& report;
};

const std::string& single_input(const RunConfig& cfg) {
  if (cfg.inputs.size() != 1)
    throw Error(ErrorCode::PreconditionFailed, cfg.command + " expects exactly one input file");
  return cfg.inputs.front();
}

IdealFile load_ideal(Context& ctx) {
  const std::string text = read_file(single_input(ctx.cfg));
  ctx.report.input_sha256 = sha256_hex(text);
  IdealFile file = parse_ideal_text(text, ctx.cfg.field);
  ctx.report.field = file.field.name();
  return file;
}

SkewFile load_skew(Context& ctx) {
  const std::string text = read_file(single_input(ctx.cfg));
  ctx.report.input_sha256 = sha256_hex(text);
  SkewFile file = parse_skew_text(text, ctx.cfg.field);
  ctx.report.field = file.field.name();
  return file;
}

Field config_field(const RunConfig& cfg, const char* fallback) {
  return Field::parse(cfg.field.value_or(fallback));
}

std::optional<HVector> try_hvector(const GradedIdeal& ideal) {
  try {
    return hvector(ideal);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotArtinian) throw;
    return std::nullopt;
  }
}

LefschetzOptions lefschetz_options(const RunConfig& cfg) {
  LefschetzOptions o;
  o.exhaustive = cfg.exhaustive;
  o.trials = cfg.trials;
  o.seed = cfg.seed;
  o.workers = std::max(1, cfg.workers);
  return o;
}

LinearForm chosen_form(const RunConfig& cfg, const Field& field,
                       const std::vector<std::string>& vars) {
  const int n = static_cast<int>(vars.size());
  if (!cfg.form) {
    Rng rng(cfg.seed);
    return LinearForm::random(field, n, rng);
  }
  const Polynomial p = parse_polynomial(*cfg.form, field, vars);
  if (p.is_zero() || p.homogeneous_degree() != 1)
    throw Error(ErrorCode::ParseError, "not a linear form: " + *cfg.form);
  Vector coeffs;
  for (int i = 0; i < n; ++i) coeffs.push_back(p.coefficient(Monomial::variable(n, i)));
  return LinearForm::normalized(field, coeffs);
}

std::vector<RankEntry> rank_entries(const std::vector<MapRank>& ranks) {
  std::vector<RankEntry> out;
  for (const auto& r : ranks) out.push_back({r.i, r.rank, r.rows, r.cols});
  return out;
}

json point_json(const ProjPoint& p, const Field& f) { return p.to_string(f); }

int lefschetz(Context& ctx, bool strong) {
  const IdealFile file = load_ideal(ctx);
  const GradedIdeal ideal = to_ideal(file);
  const LefschetzReport r =
      strong ? slp_check(ideal, lefschetz_options(ctx.cfg)) : wlp_check(ideal, lefschetz_options(ctx.cfg));
  ctx.report.hvector = r.hvector.values;
  WlpSection w;
  w.verdict = verdict_name(r.verdict);
  if (r.witness) w.witness = r.witness->to_string(file.field, file.vars);
  w.ranks = rank_entries(r.ranks);
  ctx.report.wlp = std::move(w);
  json scan = json::array();
  for (const auto& s : r.scan) {
    json ranks = json::array();
    for (const auto& m : s.ranks)
      ranks.push_back({{"i", m.i}, {"m", m.m}, {"rank", m.rank}, {"rows", m.rows}, {"cols", m.cols}});
    scan.push_back({{"form", s.form.to_string(file.field, file.vars)},
                    {"maximal", s.maximal},
                    {"ranks", ranks}});
  }
  ctx.report.details["property"] = strong ? "SLP" : "WLP";
  ctx.report.details["exhaustive"] = r.exhaustive;
  ctx.report.details["forms_examined"] = r.scan.size();
  ctx.report.details["scan"] = std::move(scan);
  return r.verdict == Verdict::Undetermined ? 3 : 0;
}

int cmd_hilbert(Context& ctx) {
  const IdealFile file = load_ideal(ctx);
  const GradedIdeal ideal = to_ideal(file);
  const auto h = try_hvector(ideal);
  if (h) ctx.report.hvector = h->values;
  const int top = ctx.cfg.max_degree >= 0 ? ctx.cfg.max_degree
                  : h                     ? h->socle_degree() + 1
                                          : kDefaultStabilizationCutoff;
  ctx.report.details["hilbert_function"] = hilbert_function(ideal, top);
  ctx.report.details["artinian"] = h.has_value();
  if (!h) {
    try {
      ctx.report.details["length"] = stabilized_length(ideal);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NotStabilized) throw;
      ctx.report.details["length"] = nullptr;
    }
  } else {
    const auto p = hvector_predicates(*h);
    ctx.report.details["symmetric"] = p.symmetric;
    ctx.report.details["unimodal"] = p.unimodal;
  }
  ctx.report.details["generators"] = strings(ideal.generators(), file.vars);
  return 0;
}

int cmd_jordan(Context& ctx) {
  const IdealFile file = load_ideal(ctx);
  const GradedIdeal ideal = to_ideal(file);
  ctx.report.hvector = hvector(ideal).values;
  if (ctx.cfg.form) {
    const LinearForm form = chosen_form(ctx.cfg, file.field, file.vars);
    ctx.report.jordan = JordanSection{form.to_string(file.field, file.vars),
                                      jordan_partition(ideal, form)};
    return 0;
  }
  LefschetzOptions o = lefschetz_options(ctx.cfg);
  if (file.field.is_finite() && !ctx.cfg.exhaustive && file.field.order() <= 16) o.exhaustive = true;
  const JordanSurvey survey = jordan_general(ideal, o);
  ctx.report.jordan = JordanSection{"general", survey.majority};
  json table = json::array();
  for (const auto& [form, parts] : survey.table)
    table.push_back({{"form", form.to_string(file.field, file.vars)}, {"parts", parts}});
  ctx.report.details["survey"] = std::move(table);
  ctx.report.details["majority_count"] = survey.majority_count;
  ctx.report.details["exhaustive"] = o.exhaustive;
  return 0;
}

int cmd_green(Context& ctx) {
  const IdealFile file = load_ideal(ctx);
  const GradedIdeal ideal = to_ideal(file);
  const auto h = try_hvector(ideal);
  if (h) ctx.report.hvector = h->values;
  const LinearForm form = chosen_form(ctx.cfg, file.field, file.vars);
  ctx.report.details["form"] = form.to_string(file.field, file.vars);
  json dims = json::array();
  const int top = ctx.cfg.max_degree >= 0 ? ctx.cfg.max_degree : (h ? h->socle_degree() : 6);
  for (int d = ctx.cfg.degree.value_or(0); d <= (ctx.cfg.degree ? *ctx.cfg.degree : top); ++d)
    dims.push_back({{"d", d}, {"dim", green_restriction_dim(ideal, form, d)}});
  ctx.report.details["restriction"] = std::move(dims);
  return 0;
}

void describe_ideal(Context& ctx, const GradedIdeal& ideal, const std::vector<std::string>& vars) {
  if (const auto h = try_hvector(ideal)) ctx.report.hvector = h->values;
  ctx.report.details["generators"] = strings(ideal.generators(), vars);
}

std::vector<DualForm> dual_forms(const IdealFile& file) {
  if (!file.duals.empty()) return file.duals;
  std::vector<DualForm> out;
  for (const auto& g : file.gens)
    if (!g.is_zero()) out.push_back(to_dual(g));
  if (out.empty()) throw Error(ErrorCode::PreconditionFailed, "no dual forms in input");
  return out;
}

int cmd_annihilator(Context& ctx) {
  const IdealFile file = load_ideal(ctx);
  const auto forms = dual_forms(file);
  const GradedIdeal ideal = forms.size() == 1 ? annihilator(forms.front()) : annihilator(forms);
  describe_ideal(ctx, ideal, file.vars);
  return 0;
}

int cmd_compressed(Context& ctx) {
  const Field field = config_field(ctx.cfg, "GF(31991)");
  ctx.report.field = field.name();
  const int e = ctx.cfg.degree.value_or(ctx.cfg.max_degree >= 0 ? ctx.cfg.max_degree : 5);
  const CompressedSample s = compressed_random(e, field, ctx.cfg.seed);
  const auto vars = default_variable_names(3);
  describe_ideal(ctx, s.ideal, vars);
  ctx.report.details["socle_degree"] = e;
  ctx.report.details["dual_form"] = s.form.to_string(vars);
  ctx.report.details["expected_hvector"] = compressed_hvector(e, 1).values;
  ctx.report.details["tries"] = s.tries;
  return 0;
}

json certificate_json(const GorensteinCertificate& c) {
  return {{"certified", c.certified},     {"socle_degree", c.socle_degree},
          {"symmetric", c.symmetric},     {"socle_dim_one", c.socle_dim_one},
          {"codim", c.codim},             {"socle_dims", c.socle_dims}};
}

int cmd_pfaffian(Context& ctx) {
  const SkewFile file = load_skew(ctx);
  ctx.report.details["pfaffians"] = strings(submaximal_pfaffians(file.matrix), file.vars);
  const GradedIdeal ideal = pfaffian_ideal(file.matrix);
  describe_ideal(ctx, ideal, file.vars);
  const auto c = certify_gorenstein(ideal);
  ctx.report.details["gorenstein"] = certificate_json(c);
  return 0;
}

int cmd_certify(Context& ctx) {
  const IdealFile file = load_ideal(ctx);
  const auto c = certify_gorenstein(to_ideal(file));
  ctx.report.hvector = c.hvector.values;
  ctx.report.details = certificate_json(c);
  return 0;
}

int cmd_truncate(Context& ctx) {
  const IdealFile file = load_ideal(ctx);
  if (!ctx.cfg.degree) throw Error(ErrorCode::PreconditionFailed, "truncate needs --degree");
  const GradedIdeal t = truncate_algebra(to_ideal(file), *ctx.cfg.degree);
  describe_ideal(ctx, t, file.vars);
  ctx.report.details["degree"] = *ctx.cfg.degree;
  return 0;
}

int cmd_decompose(Context& ctx) {
  const IdealFile file = load_ideal(ctx);
  const LevelDecomposition d = level_decompose(dual_forms(file));
  ctx.report.hvector = d.hvector.values;
  json factors = json::array();
  for (const auto& f : d.factors) factors.push_back(hvector(f).values);
  ctx.report.details["factor_hvectors"] = std::move(factors);
  ctx.report.details["socle_dim"] = d.socle_dim;
  ctx.report.details["generators"] = strings(d.level.generators(), file.vars);
  return 0;
}

int cmd_hesse(Context& ctx) {
  const IdealFile file = load_ideal(ctx);
  if (file.gens.size() != 2) throw Error(ErrorCode::PreconditionFailed, "hesse needs two cubics");
  const BaseLocusReport b = base_locus(file.gens[0], file.gens[1]);
  json points = json::array();
  for (const auto& p : b.points)
    points.push_back({{"point", point_json(p.point, b.field)},
                      {"multiplicity", p.multiplicity},
                      {"field_degree", p.field_degree}});
  ctx.report.details["points"] = std::move(points);
  ctx.report.details["total_length"] = b.total_length;
  ctx.report.details["reduced"] = b.reduced;
  ctx.report.details["splitting_degree"] = b.splitting_degree;
  if (b.field.degree() == file.field.degree() && b.reduced) {
    const HesseReport h = is_hesse_configuration(b);
    ctx.report.details["hesse"] = h.is_hesse;
    ctx.report.details["lines"] = h.lines;
  } else {
    ctx.report.details["hesse"] = false;
  }
  try {
    const auto abc = hesse_pencil_normal_form(file.gens[0], file.gens[1]);
    ctx.report.details["normal_form"] = {file.field.to_string(abc[0]), file.field.to_string(abc[1]),
                                         file.field.to_string(abc[2])};
  } catch (const Error& e) {
    ctx.report.details["normal_form"] = nullptr;
    ctx.report.details["normal_form_error"] = e.what();
  }
  return 0;
}

int cmd_fibers(Context& ctx) {
  const IdealFile file = load_ideal(ctx);
  const FiberReport r = morphism_fibers(file.gens, ctx.cfg.trials, ctx.cfg.seed);
  ctx.report.details["generic_fiber_size"] = r.generic_fiber_size;
  ctx.report.details["image_degree"] = r.image_degree;
  ctx.report.details["base_point_free"] = r.base_point_free;
  json table = json::object();
  for (const auto& [size, count] : r.fiber_table) table[std::to_string(size)] = count;
  ctx.report.details["fiber_table"] = std::move(table);
  if (r.generic_fiber_size == 3) {
    const FiberDecomposition d = fiber_decomposition(file.gens, ctx.cfg.seed);
    json sigmas = json::array();
    for (const auto& s : d.sigmas) {
      json pts = json::array();
      for (const auto& p : s) pts.push_back(point_json(p, file.field));
      sigmas.push_back(std::move(pts));
    }
    ctx.report.details["sigmas"] = std::move(sigmas);
    ctx.report.details["collinearity"] = d.collinearity;
    ctx.report.details["conditions"] = d.conditions;
  }
  return 0;
}

int cmd_hb(Context& ctx) {
  const IdealFile file = load_ideal(ctx);
  const HbReport r = hb_analysis(to_ideal(file), ctx.cfg.seed);
  ctx.report.details["length"] = r.length;
  ctx.report.details["linear_column"] = strings(r.linear_column, file.vars);
  ctx.report.details["linear_part_rank"] = r.linear_part_rank;
  ctx.report.details["verdict"] = r.independent ? "independent" : "dependent";
  if (r.completion) {
    ctx.report.hvector = hvector(*r.completion).values;
    ctx.report.details["completion"] = strings(r.completion->generators(), file.vars);
  } else {
    ctx.report.details["completion"] = nullptr;
  }
  return 0;
}

int cmd_linkage(Context& ctx) {
  const SkewFile file = load_skew(ctx);
  const LinkageReport r = linkage_check(file.matrix, ctx.cfg.seed);
  ctx.report.details["reduced_matrix"] = r.reduced.canonical(file.vars);
  ctx.report.details["degree_x"] = r.degree_x;
  ctx.report.details["degree_y"] = r.degree_y;
  ctx.report.details["ci_type"] = r.ci_type;
  ctx.report.details["ci_degree"] = r.ci_degree;
  ctx.report.details["product_in_ci"] = r.product_in_ci;
  ctx.report.details["ideal_y"] = strings(r.ideal_y.generators(), file.vars);
  return 0;
}

int cmd_search(Context& ctx) {
  const Field field = config_field(ctx.cfg, "GF(3)");
  if (!field.is_finite()) throw Error(ErrorCode::PreconditionFailed, "search needs a finite field");
  ctx.report.field = field.name();
  if (ctx.cfg.trials < 0) throw Error(ErrorCode::PreconditionFailed, "negative trial count");
  std::ofstream file;
  std::ostream* sink = nullptr;
  if (ctx.cfg.out_path) {
    file.open(*ctx.cfg.out_path, std::ios::binary | std::ios::trunc);
    if (!file) throw Error(ErrorCode::IoError, "cannot open " + *ctx.cfg.out_path);
    sink = &file;
  }
  const SearchSummary s = run_search(field, ctx.cfg.seed, static_cast<std::uint64_t>(ctx.cfg.trials),
                                     ctx.cfg.workers, sink);
  ctx.report.details["seed"] = ctx.cfg.seed;
  ctx.report.details["trials"] = s.trials;
  ctx.report.details["certified"] = s.certified;
  ctx.report.details["failures"] = s.failures;
  std::map<std::string, std::size_t> signatures;
  for (const auto& r : s.records) {
    std::string key;
    for (auto p : r.jordan_general) key += (key.empty() ? "" : ",") + std::to_string(p);
    ++signatures[key];
  }
  ctx.report.details["jordan_signatures"] = signatures;
  return 0;
}

}  // namespace

RunResult run_command(const RunConfig& config) {
  RunResult result;
  Report report;
  report.command = config.command;
  report.field = config.field.value_or("Q");
  Context ctx{config, report};
  const auto start = std::chrono::steady_clock::now();
  try {
    int code = 0;
    const std::string& c = config.command;
    if (c == "hilbert") code = cmd_hilbert(ctx);
    else if (c == "wlp") code = lefschetz(ctx, false);
    else if (c == "slp") code = lefschetz(ctx, true);
    else if (c == "jordan") code = cmd_jordan(ctx);
    else if (c == "green") code = cmd_green(ctx);
    else if (c == "annihilator") code = cmd_annihilator(ctx);
    else if (c == "compressed") code = cmd_compressed(ctx);
    else if (c == "pfaffian") code = cmd_pfaffian(ctx);
    else if (c == "certify") code = cmd_certify(ctx);
    else if (c == "truncate") code = cmd_truncate(ctx);
    else if (c == "decompose") code = cmd_decompose(ctx);
    else if (c == "hesse") code = cmd_hesse(ctx);
    else if (c == "fibers") code = cmd_fibers(ctx);
    else if (c == "hb") code = cmd_hb(ctx);
    else if (c == "linkage") code = cmd_linkage(ctx);
    else if (c == "search") code = cmd_search(ctx);
    else throw Error(ErrorCode::PreconditionFailed, "unknown command '" + c + "'");
    report.timing_ms = std::chrono::duration<double, std::milli>(
                           std::chrono::steady_clock::now() - start).count();
    result.exit_code = code;
    result.report = std::move(report);
  } catch (const Error& e) {
    result.exit_code = exit_code_for(e.code());
    result.error = e.what();
  } catch (const std::exception& e) {
    result.exit_code = 1;
    result.error = std::string("internal error: ") + e.what();
  }
  return result;
}

int run_and_print(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const RunResult r = run_command(config);
  if (!r.report) {
    err << "error: " << r.error << "\n";
    return r.exit_code;
  }
  const std::string json_text = to_json(*r.report).dump(2) + "\n";
  out << (config.output == OutputFormat::Json ? json_text : render_text(*r.report));
  if (config.out_path && config.command != "search") {
    std::ofstream file(*config.out_path, std::ios::binary | std::ios::trunc);
    file << json_text;
    if (!file) {
      err << "error: IoError: cannot write " << *config.out_path << "\n";
      return 2;
    }
  }
  return r.exit_code;
}

}  // namespace artin::cli
