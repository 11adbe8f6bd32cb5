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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "artin/gorenstein.hpp"
#include "artin/ideal.hpp"
#include "artin/lefschetz.hpp"

namespace artin::cli {

enum class OutputFormat { Json, Text };

inline const std::vector<std::string> kCommands = {
    "hilbert", "wlp",      "slp",    "jordan", "green", "annihilator", "compressed", "pfaffian",
    "certify", "truncate", "decompose", "hesse", "fibers", "hb",        "linkage",    "search"};

struct RunConfig {
  std::string command;
  std::vector<std::string> inputs;
  std::optional<std::string> field;
  std::uint64_t seed = kDefaultSeed;
  int trials = 20;
  int max_degree = -1;
  bool exhaustive = false;
  int workers = 1;
  OutputFormat output = OutputFormat::Json;
  std::optional<std::string> out_path;
  // Linear form for jordan / green, e.g. "y+2*z".
  std::optional<std::string> form;
  // Socle degree for compressed, target degree for truncate / green.
  std::optional<int> degree;
};

// Contents of an .ideal file: `field`, `vars`, `gen` and `dual` lines.
struct IdealFile {
  Field field;
  std::vector<std::string> vars{"x", "y", "z"};
  std::vector<Polynomial> gens;
  std::vector<DualForm> duals;
};

IdealFile parse_ideal_text(std::string_view text,
                           const std::optional<std::string>& field_override = std::nullopt);
IdealFile parse_ideal_file(const std::string& path,
                           const std::optional<std::string>& field_override = std::nullopt);
GradedIdeal to_ideal(const IdealFile& file);

struct SkewFile {
  Field field;
  std::vector<std::string> vars{"x", "y", "z"};
  SkewPolyMatrix matrix;
};

SkewFile parse_skew_text(std::string_view text,
                         const std::optional<std::string>& field_override = std::nullopt);

std::string sha256_hex(std::string_view data);
std::string read_file(const std::string& path);

struct RankEntry {
  int i = 0;
  std::size_t rank = 0, rows = 0, cols = 0;
  friend bool operator==(const RankEntry&, const RankEntry&) = default;
};

struct WlpSection {
  std::string verdict;
  std::optional<std::string> witness;
  std::vector<RankEntry> ranks;
  friend bool operator==(const WlpSection&, const WlpSection&) = default;
};

struct JordanSection {
  std::string form;
  std::vector<std::size_t> parts;
  friend bool operator==(const JordanSection&, const JordanSection&) = default;
};

struct Report {
  int schema_version = 1;
  std::string command;
  std::string field;
  std::optional<std::string> input_sha256;
  std::optional<std::vector<std::size_t>> hvector;
  std::optional<WlpSection> wlp;
  std::optional<JordanSection> jordan;
  // Command-specific data.
  nlohmann::json details = nlohmann::json::object();
  double timing_ms = 0;
  friend bool operator==(const Report&, const Report&) = default;
};

nlohmann::json to_json(const Report& report);
Report report_from_json(const nlohmann::json& j);
std::string render_text(const Report& report);

// Exit status for a library error: 3 for undetermined or unstabilized
// computations, 2 for everything caused by the input.
int exit_code_for(ErrorCode code);

struct RunResult {
  int exit_code = 0;
  std::optional<Report> report;
  std::string error;
};

// Runs one subcommand; never throws for library errors.
RunResult run_command(const RunConfig& config);

// Prints the report (or error) to out / err and writes --out when given.
int run_and_print(const RunConfig& config, std::ostream& out, std::ostream& err);

struct SearchRecord {
  std::uint64_t trial_index = 0;
  std::uint64_t seed = 0;
  std::string field;
  std::string matrix;
  std::vector<std::size_t> hvector;
  std::string wlp_verdict;
  nlohmann::json witness_or_certificate;
  std::vector<std::size_t> jordan_general;
  std::uint64_t timestamp = 0;
  friend bool operator==(const SearchRecord&, const SearchRecord&) = default;
};

nlohmann::json to_json(const SearchRecord& record);
SearchRecord search_record_from_json(const nlohmann::json& j);

struct SearchSummary {
  std::uint64_t trials = 0;
  std::uint64_t certified = 0;
  std::uint64_t failures = 0;
  std::vector<SearchRecord> records;
};

// One search trial: a Buchsbaum-Eisenbud pattern matrix from derive_seed(seed, trial),
// kept when its pfaffian ideal is Gorenstein with h = (1,3,6,6,3,1).
// Returns the record when the exhaustive WLP check fails.
struct TrialOutcome {
  bool certified = false;
  std::optional<SearchRecord> failure;
};
TrialOutcome search_trial(const Field& field, std::uint64_t seed, std::uint64_t trial);

// Runs the trials on `workers` threads and appends failures to `jsonl`
// (if non-null) in trial order. Throws IoError when writing fails.
SearchSummary run_search(const Field& field, std::uint64_t seed, std::uint64_t trials,
                         int workers, std::ostream* jsonl);

}  // namespace artin::cli
