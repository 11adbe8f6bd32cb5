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

#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "artin/cli.hpp"

int main(int argc, char** argv) {
  using artin::cli::OutputFormat;
  using artin::cli::RunConfig;

  CLI::App app{"artin: Hilbert functions, Lefschetz properties and Gorenstein algebras"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string seed_text;
  std::string output = "json";
  std::string field;
  std::string out_path;
  std::string form;
  int degree = -1;

  const std::map<std::string, std::string> about = {
      {"hilbert", "Hilbert function and h-vector of S/I"},
      {"wlp", "weak Lefschetz check"},
      {"slp", "strong Lefschetz check"},
      {"jordan", "Jordan type of multiplication by a linear form"},
      {"green", "dimension of the restriction to a general line"},
      {"annihilator", "annihilator ideal of dual forms"},
      {"compressed", "random compressed Gorenstein algebra"},
      {"pfaffian", "pfaffian ideal of a skew matrix"},
      {"certify", "certify Gorenstein h-vector and socle"},
      {"truncate", "truncate an ideal at a degree"},
      {"decompose", "level algebra from several dual forms"},
      {"hesse", "base locus of a cubic pencil and Hesse test"},
      {"fibers", "fibers of the morphism given by four cubics"},
      {"hb", "Hilbert-Burch analysis of a length-7 scheme"},
      {"linkage", "link the scheme of a skew matrix"},
      {"search", "random search for WLP failures"},
  };
  for (const auto& name : artin::cli::kCommands) {
    CLI::App* sub = app.add_subcommand(name, about.at(name));
    if (name != "compressed" && name != "search")
      sub->add_option("input", cfg.inputs, "input file")->required();
    sub->add_option("--field", field, "field override: Q, GF(p), GF(p^k)");
    sub->add_option("--seed", seed_text, "random seed (decimal or 0x hex)");
    sub->add_option("--trials", cfg.trials, "random trials / samples");
    sub->add_flag("--exhaustive", cfg.exhaustive, "scan every normalized linear form");
    sub->add_option("--max-degree", cfg.max_degree, "highest degree to report");
    sub->add_option("--workers", cfg.workers, "worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--output", output, "json or text")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--out", out_path, "write the report (search: JSONL log) to this path");
    if (name == "jordan" || name == "green")
      sub->add_option("-L,--form", form, "linear form, e.g. y+2*z");
    if (name == "compressed" || name == "truncate" || name == "green")
      sub->add_option("--degree", degree, "socle degree / truncation degree / restriction degree");
  }

  CLI11_PARSE(app, argc, argv);

  cfg.command = app.get_subcommands().front()->get_name();
  if (!field.empty()) cfg.field = field;
  if (!out_path.empty()) cfg.out_path = out_path;
  if (!form.empty()) cfg.form = form;
  if (degree >= 0) cfg.degree = degree;
  cfg.output = output == "text" ? OutputFormat::Text : OutputFormat::Json;
  if (!seed_text.empty()) {
    try {
      cfg.seed = std::stoull(seed_text, nullptr, 0);
    } catch (const std::exception&) {
      std::cerr << "error: invalid seed '" << seed_text << "'\n";
      return 2;
    }
  }
  return artin::cli::run_and_print(cfg, std::cout, std::cerr);
}
