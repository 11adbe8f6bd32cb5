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

#include <atomic>
#include <ostream>
#include <thread>

#include "artin/cli.hpp"
#include "artin/error.hpp"

namespace artin::cli {

using nlohmann::json;

json to_json(const SearchRecord& r) {
  return {{"trial_index", r.trial_index},
          {"seed", r.seed},
          {"field", r.field},
          {"matrix", r.matrix},
          {"hvector", r.hvector},
          {"wlp_verdict", r.wlp_verdict},
          {"witness_or_certificate", r.witness_or_certificate},
          {"jordan_general", r.jordan_general},
          {"timestamp", r.timestamp}};
}

SearchRecord search_record_from_json(const json& j) {
  SearchRecord r;
  r.trial_index = j.at("trial_index").get<std::uint64_t>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.field = j.at("field").get<std::string>();
  r.matrix = j.at("matrix").get<std::string>();
  r.hvector = j.at("hvector").get<std::vector<std::size_t>>();
  r.wlp_verdict = j.at("wlp_verdict").get<std::string>();
  r.witness_or_certificate = j.at("witness_or_certificate");
  r.jordan_general = j.at("jordan_general").get<std::vector<std::size_t>>();
  r.timestamp = j.at("timestamp").get<std::uint64_t>();
  return r;
}

TrialOutcome search_trial(const Field& field, std::uint64_t seed, std::uint64_t trial) {
  static const HVector target{{1, 3, 6, 6, 3, 1}};
  TrialOutcome out;
  const std::uint64_t trial_seed = derive_seed(seed, trial);
  Rng rng(trial_seed);
  const SkewPolyMatrix m = SkewPolyMatrix::random_be(field, rng);
  std::optional<GradedIdeal> ideal;
  try {
    ideal = pfaffian_ideal(m);
    // cheap rejection first; the certificate probes high degrees when the
    // quotient is not artinian
    std::vector<std::size_t> prefix = target.values;
    prefix.push_back(0);
    if (hilbert_function(*ideal, 6) != prefix) return out;
    const GorensteinCertificate c = certify_gorenstein(*ideal);
    out.certified = c.certified && c.hvector == target;
  } catch (const Error&) {
    // degenerate draws (a vanishing pfaffian, non-artinian quotient) are not instances
    out.certified = false;
  }
  if (!out.certified) return out;

  LefschetzOptions o;
  o.exhaustive = true;
  const LefschetzReport wlp = wlp_check(*ideal, o);
  if (wlp.verdict != Verdict::Fails) return out;

  // certificate: no form reaches the middle target rank
  std::size_t best = 0, target_rank = 0;
  for (const auto& s : wlp.scan)
    for (const auto& r : s.ranks)
      if (r.i == 2 && r.m == 1) {
        best = std::max(best, r.rank);
        target_rank = std::min(r.rows, r.cols);
      }
  SearchRecord rec;
  rec.trial_index = trial;
  rec.seed = trial_seed;
  rec.field = field.name();
  rec.matrix = m.canonical();
  rec.hvector = target.values;
  rec.wlp_verdict = verdict_name(wlp.verdict);
  rec.witness_or_certificate = {{"kind", "certificate"},
                                {"forms_scanned", wlp.scan.size()},
                                {"max_middle_rank", best},
                                {"middle_target", target_rank}};
  rec.jordan_general = jordan_general(*ideal, o).majority;
  // logical clock: number of trials issued when the record is produced
  rec.timestamp = trial + 1;
  out.failure = std::move(rec);
  return out;
}

SearchSummary run_search(const Field& field, std::uint64_t seed, std::uint64_t trials,
                         int workers, std::ostream* jsonl) {
  if (!field.is_finite()) throw Error(ErrorCode::PreconditionFailed, "search needs a finite field");
  const std::size_t nworkers = static_cast<std::size_t>(std::max(1, workers));
  const std::uint64_t block = 64 * nworkers;
  SearchSummary summary;
  summary.trials = trials;
  std::vector<TrialOutcome> outcomes;
  for (std::uint64_t begin = 0; begin < trials; begin += block) {
    const std::uint64_t end = std::min(trials, begin + block);
    outcomes.assign(end - begin, {});
    std::atomic<std::uint64_t> next{begin};
    auto work = [&] {
      for (std::uint64_t t; (t = next.fetch_add(1)) < end;)
        outcomes[t - begin] = search_trial(field, seed, t);
    };
    if (nworkers == 1) {
      work();
    } else {
      std::vector<std::jthread> pool;
      for (std::size_t w = 0; w < nworkers; ++w) pool.emplace_back(work);
    }
    // single writer, trial order
    for (auto& o : outcomes) {
      summary.certified += o.certified;
      if (!o.failure) continue;
      ++summary.failures;
      if (jsonl) {
        *jsonl << to_json(*o.failure).dump() << '\n';
        if (!*jsonl) throw Error(ErrorCode::IoError, "failed to append search record");
      }
      summary.records.push_back(std::move(*o.failure));
    }
    if (jsonl) {
      jsonl->flush();
      if (!*jsonl) throw Error(ErrorCode::IoError, "failed to flush search log");
    }
  }
  return summary;
}

}  // namespace artin::cli
