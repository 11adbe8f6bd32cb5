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

#include <optional>
#include <string>
#include <vector>

#include "artin/ideal.hpp"
#include "artin/random.hpp"

namespace artin {

// Linear form, normalized so the first nonzero coefficient is 1.
struct LinearForm {
  Vector coeffs;

  static LinearForm normalized(const Field& field, Vector coeffs);
  static LinearForm random(const Field& field, int nvars, Rng& rng,
                           std::int64_t bound = 1000);
  Polynomial as_polynomial(const Field& field) const;
  std::string to_string(const Field& field,
                        const std::vector<std::string>& names = {}) const;
  friend bool operator==(const LinearForm&, const LinearForm&) = default;
};

// All q^2 + q + 1 normalized forms in three variables (or q^(n-1) + ... + 1
// in general), ordered by leading position then coefficient codes.
std::vector<LinearForm> all_linear_forms(const Field& field, int nvars);

// Rank of x L^m : A_i -> A_{i+m}.
struct MapRank {
  int i = 0;
  int m = 1;
  std::size_t rank = 0;
  std::size_t rows = 0;  // dim A_{i+m}
  std::size_t cols = 0;  // dim A_i
  bool maximal() const { return rank == std::min(rows, cols); }
  friend bool operator==(const MapRank&, const MapRank&) = default;
};

// Multiplication by each variable between consecutive graded pieces of A,
// in standard-monomial coordinates; x L is assembled from these.
class MultiplicationTables {
 public:
  MultiplicationTables(const GradedIdeal& ideal, int top_degree);

  int top_degree() const { return top_; }
  std::size_t dim(int i) const;
  // x L : A_i -> A_{i+1}
  ExactMatrix times(const LinearForm& form, int i) const;
  // x L^m : A_i -> A_{i+m}
  ExactMatrix power(const LinearForm& form, int i, int m) const;

 private:
  Field field_;
  int nvars_;
  int top_;
  std::vector<std::size_t> dims_;
  std::vector<std::vector<ExactMatrix>> by_var_;  // [i][j]
};

MapRank mult_map_rank(const GradedIdeal& ideal, const LinearForm& form, int i, int m = 1);

enum class Verdict { Holds, Fails, Undetermined };
const char* verdict_name(Verdict v);

struct LefschetzOptions {
  bool exhaustive = false;
  int trials = 20;
  std::uint64_t seed = kDefaultSeed;
  std::int64_t coefficient_bound = 1000;
  // Only the map A_{(e-1)/2} -> A_{(e+1)/2}; meant for Gorenstein inputs.
  bool middle_only = false;
  int workers = 1;
  int probe_bound = kDefaultProbeBound;
};

struct FormScan {
  LinearForm form;
  bool maximal = false;
  std::vector<MapRank> ranks;
};

struct LefschetzReport {
  Verdict verdict = Verdict::Undetermined;
  std::optional<LinearForm> witness;
  // Ranks for the witness, or for the last form tried when there is none.
  std::vector<MapRank> ranks;
  int trials = 0;
  bool exhaustive = false;
  HVector hvector;
  // One entry per form examined, in scan order.
  std::vector<FormScan> scan;
};

// Weak Lefschetz check. Over Q a random search without witness throws
// UndeterminedOverQ; over a finite field it reports Undetermined.
LefschetzReport wlp_check(const GradedIdeal& ideal, const LefschetzOptions& options = {});
// Strong Lefschetz check: x L^(j-i) : A_i -> A_j for all i < j.
LefschetzReport slp_check(const GradedIdeal& ideal, const LefschetzOptions& options = {});

using Partition = std::vector<std::size_t>;

// Jordan type of x L on A, from r_m = rank of L^m on A.
Partition jordan_partition(const GradedIdeal& ideal, const LinearForm& form,
                           int probe_bound = kDefaultProbeBound);
Partition jordan_partition(const MultiplicationTables& tables, const LinearForm& form);

struct JordanSurvey {
  std::vector<std::pair<LinearForm, Partition>> table;
  Partition majority;
  std::size_t majority_count = 0;
};

// Partition for a "general" form: majority over all normalized forms when
// exhaustive (finite fields), otherwise over `trials` seeded random forms.
JordanSurvey jordan_general(const GradedIdeal& ideal, const LefschetzOptions& options = {});

// dim of (S / (I + (L)))_d.
std::size_t green_restriction_dim(const GradedIdeal& ideal, const LinearForm& form, int d);

// Checks that x L : A_i -> A_{i+1} is injective on S / (I_1 cap ... cap I_t)
// given that it is injective on every S / I_j (PreconditionFailed otherwise).
bool injectivity_inheritance_check(std::span<const GradedIdeal> ideals, const LinearForm& form,
                                   int i);

}  // namespace artin
