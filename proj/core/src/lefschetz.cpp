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


#include "artin/lefschetz.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <thread>

#include "artin/error.hpp"

namespace artin {

namespace {

template <class Fn>
void parallel_for(std::size_t n, int workers, Fn fn) {
  const std::size_t w = std::max(1, std::min<int>(workers, static_cast<int>(n)));
  if (w <= 1) {
    for (std::size_t k = 0; k < n; ++k) fn(k);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr failure;
  std::mutex failure_mu;
  for (std::size_t t = 0; t < w; ++t) {
    pool.emplace_back([&] {
      try {
        for (std::size_t k = next++; k < n; k = next++) fn(k);
      } catch (...) {
        std::lock_guard lock(failure_mu);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

std::vector<std::pair<int, int>> wlp_maps(int e, bool middle_only) {
  std::vector<std::pair<int, int>> out;
  if (e <= 0) return out;
  if (middle_only) {
    out.emplace_back((e - 1) / 2, 1);
    return out;
  }
  for (int i = 0; i < e; ++i) out.emplace_back(i, 1);
  return out;
}

std::vector<std::pair<int, int>> slp_maps(int e) {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < e; ++i)
    for (int j = i + 1; j <= e; ++j) out.emplace_back(i, j - i);
  return out;
}

FormScan scan_form(const MultiplicationTables& tables, const LinearForm& form,
                   const std::vector<std::pair<int, int>>& maps) {
  FormScan s{form, true, {}};
  for (auto [i, m] : maps) {
    MapRank r{i, m, 0, tables.dim(i + m), tables.dim(i)};
    r.rank = rank(tables.power(form, i, m));
    s.maximal = s.maximal && r.maximal();
    s.ranks.push_back(r);
  }
  return s;
}

std::vector<LinearForm> candidate_forms(const Field& field, int nvars,
                                        const LefschetzOptions& opt) {
  if (opt.exhaustive) {
    if (!field.is_finite()) {
      throw Error(ErrorCode::PreconditionFailed, "exhaustive scans need a finite field");
    }
    return all_linear_forms(field, nvars);
  }
  std::vector<LinearForm> forms;
  for (int t = 0; t < opt.trials; ++t) {
    Rng rng(derive_seed(opt.seed, static_cast<std::uint64_t>(t)));
    forms.push_back(LinearForm::random(field, nvars, rng, opt.coefficient_bound));
  }
  return forms;
}

LefschetzReport run_scan(const GradedIdeal& ideal, const LefschetzOptions& opt, bool strong) {
  LefschetzReport report;
  report.exhaustive = opt.exhaustive;
  report.hvector = hvector(ideal, opt.probe_bound);
  const int e = report.hvector.socle_degree();
  const auto maps = strong ? slp_maps(e) : wlp_maps(e, opt.middle_only);
  const MultiplicationTables tables(ideal, std::max(e, 0));
  const auto forms = candidate_forms(ideal.field(), ideal.nvars(), opt);

  // Blocks keep the first witness in scan order independent of worker count.
  const std::size_t block = static_cast<std::size_t>(std::max(1, opt.workers)) * 8;
  for (std::size_t start = 0; start < forms.size() && !report.witness; start += block) {
    const std::size_t n = std::min(block, forms.size() - start);
    std::vector<FormScan> results(n);
    parallel_for(n, opt.workers,
                 [&](std::size_t k) { results[k] = scan_form(tables, forms[start + k], maps); });
    for (auto& r : results) {
      report.scan.push_back(r);
      report.ranks = r.ranks;
      if (r.maximal) {
        report.witness = r.form;
        break;
      }
    }
  }
  report.trials = static_cast<int>(report.scan.size());
  if (report.witness) {
    report.verdict = Verdict::Holds;
  } else if (opt.exhaustive) {
    report.verdict = Verdict::Fails;
  } else if (!ideal.field().is_finite() && !forms.empty()) {
    throw Error(ErrorCode::UndeterminedOverQ,
                std::to_string(report.trials) +
                    " random forms over Q all miss maximal rank; failure cannot be certified");
  } else {
    report.verdict = forms.empty() && maps.empty() ? Verdict::Holds : Verdict::Undetermined;
  }
  if (maps.empty() && !report.witness) {
    // Socle degree 0: nothing to check.
    report.verdict = Verdict::Holds;
  }
  return report;
}

}  // namespace

LinearForm LinearForm::normalized(const Field& field, Vector coeffs) {
  auto it = std::find_if(coeffs.begin(), coeffs.end(),
                         [&](const FieldElement& c) { return !field.is_zero(c); });
  if (it == coeffs.end()) throw Error(ErrorCode::PreconditionFailed, "zero linear form");
  const FieldElement inv = field.inv(*it);
  for (auto& c : coeffs) c = field.mul(c, inv);
  return LinearForm{std::move(coeffs)};
}

LinearForm LinearForm::random(const Field& field, int nvars, Rng& rng, std::int64_t bound) {
  for (;;) {
    Vector c;
    for (int j = 0; j < nvars; ++j) c.push_back(field.random(rng, bound));
    if (std::any_of(c.begin(), c.end(), [&](const FieldElement& a) { return !field.is_zero(a); }))
      return normalized(field, std::move(c));
  }
}

Polynomial LinearForm::as_polynomial(const Field& field) const {
  return Polynomial::from_coefficients(field, static_cast<int>(coeffs.size()), 1, coeffs);
}

std::string LinearForm::to_string(const Field& field,
                                  const std::vector<std::string>& names) const {
  return as_polynomial(field).to_string(names);
}

std::vector<LinearForm> all_linear_forms(const Field& field, int nvars) {
  const std::uint64_t q = field.order();
  std::vector<LinearForm> out;
  for (int lead = 0; lead < nvars; ++lead) {
    std::uint64_t count = 1;
    for (int j = lead + 1; j < nvars; ++j) count *= q;
    for (std::uint64_t code = 0; code < count; ++code) {
      Vector c(nvars, field.zero());
      c[lead] = field.one();
      std::uint64_t rest = code;
      for (int j = nvars - 1; j > lead; --j) {
        c[j] = field.from_code(rest % q);
        rest /= q;
      }
      out.push_back(LinearForm{std::move(c)});
    }
  }
  return out;
}

MultiplicationTables::MultiplicationTables(const GradedIdeal& ideal, int top_degree)
    : field_(ideal.field()), nvars_(ideal.nvars()), top_(top_degree) {
  for (int i = 0; i <= top_; ++i) dims_.push_back(ideal.component(i)->quotient_dim());
  for (int i = 0; i < top_; ++i) {
    std::vector<ExactMatrix> row;
    for (int j = 0; j < nvars_; ++j) {
      row.push_back(multiplication_matrix(ideal, Polynomial::variable(field_, nvars_, j), i));
    }
    by_var_.push_back(std::move(row));
  }
}

std::size_t MultiplicationTables::dim(int i) const {
  return i >= 0 && i <= top_ ? dims_[i] : 0;
}

ExactMatrix MultiplicationTables::times(const LinearForm& form, int i) const {
  if (i < 0 || i >= top_) return ExactMatrix(field_, dim(i + 1), dim(i));
  const auto& mats = by_var_[i];
  ExactMatrix out(field_, dims_[i + 1], dims_[i]);
  for (int j = 0; j < nvars_; ++j) {
    const FieldElement& c = form.coeffs[j];
    if (field_.is_zero(c)) continue;
    for (std::size_t r = 0; r < out.rows(); ++r)
      for (std::size_t k = 0; k < out.cols(); ++k)
        out.at(r, k) = field_.fma(out.at(r, k), c, mats[j].at(r, k));
  }
  return out;
}

ExactMatrix MultiplicationTables::power(const LinearForm& form, int i, int m) const {
  ExactMatrix acc = times(form, i);
  for (int s = 1; s < m; ++s) acc = times(form, i + s) * acc;
  return acc;
}

MapRank mult_map_rank(const GradedIdeal& ideal, const LinearForm& form, int i, int m) {
  if (i < 0 || m < 1) throw Error(ErrorCode::PreconditionFailed, "need i >= 0 and m >= 1");
  const MultiplicationTables tables(ideal, i + m);
  MapRank r{i, m, 0, tables.dim(i + m), tables.dim(i)};
  r.rank = rank(tables.power(form, i, m));
  return r;
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Fails: return "fails";
    case Verdict::Undetermined: return "undetermined";
  }
  return "?";
}

LefschetzReport wlp_check(const GradedIdeal& ideal, const LefschetzOptions& options) {
  return run_scan(ideal, options, false);
}

LefschetzReport slp_check(const GradedIdeal& ideal, const LefschetzOptions& options) {
  return run_scan(ideal, options, true);
}

Partition jordan_partition(const MultiplicationTables& tables, const LinearForm& form) {
  const int e = tables.top_degree();
  // r[m] = rank of L^m on A.
  std::vector<std::size_t> r(e + 2, 0);
  for (int i = 0; i <= e; ++i) r[0] += tables.dim(i);
  for (int m = 1; m <= e; ++m) {
    for (int i = 0; i + m <= e; ++i) r[m] += rank(tables.power(form, i, m));
  }
  // at_least[m] = number of blocks of size >= m.
  std::vector<std::size_t> at_least(e + 3, 0);
  for (int m = 1; m <= e + 1; ++m) at_least[m] = r[m - 1] - r[m];
  Partition parts;
  for (int m = e + 1; m >= 1; --m) {
    for (std::size_t k = at_least[m + 1]; k < at_least[m]; ++k) {
      parts.push_back(static_cast<std::size_t>(m));
    }
  }
  return parts;
}

Partition jordan_partition(const GradedIdeal& ideal, const LinearForm& form, int probe_bound) {
  const HVector h = hvector(ideal, probe_bound);
  return jordan_partition(MultiplicationTables(ideal, h.socle_degree()), form);
}

JordanSurvey jordan_general(const GradedIdeal& ideal, const LefschetzOptions& options) {
  const HVector h = hvector(ideal, options.probe_bound);
  const MultiplicationTables tables(ideal, h.socle_degree());
  const auto forms = candidate_forms(ideal.field(), ideal.nvars(), options);
  JordanSurvey survey;
  survey.table.resize(forms.size());
  parallel_for(forms.size(), options.workers, [&](std::size_t k) {
    survey.table[k] = {forms[k], jordan_partition(tables, forms[k])};
  });
  std::map<Partition, std::size_t> votes;
  for (const auto& [form, p] : survey.table) ++votes[p];
  for (const auto& [form, p] : survey.table) {
    // Ties go to the partition seen first.
    if (votes[p] > survey.majority_count) {
      survey.majority = p;
      survey.majority_count = votes[p];
    }
  }
  return survey;
}

std::size_t green_restriction_dim(const GradedIdeal& ideal, const LinearForm& form, int d) {
  return ideal.with_generators({form.as_polynomial(ideal.field())}).component(d)->quotient_dim();
}

bool injectivity_inheritance_check(std::span<const GradedIdeal> ideals, const LinearForm& form,
                                   int i) {
  if (ideals.empty()) throw Error(ErrorCode::PreconditionFailed, "no ideals given");
  const Polynomial l = form.as_polynomial(ideals[0].field());
  for (std::size_t k = 0; k < ideals.size(); ++k) {
    const ExactMatrix m = multiplication_matrix(ideals[k], l, i);
    if (rank(m) != m.cols()) {
      throw Error(ErrorCode::PreconditionFailed,
                  "x L is not injective on factor " + std::to_string(k) + " in degree " +
                      std::to_string(i));
    }
  }
  const Field& field = ideals[0].field();
  const int n = ideals[0].nvars();
  const DegreeComponent source(field, n, i, intersect_ideals(ideals, i));
  const DegreeComponent target(field, n, i + 1, intersect_ideals(ideals, i + 1));
  const ExactMatrix m = multiplication_matrix(source, target, l);
  return rank(m) == m.cols();
}

}  // namespace artin
