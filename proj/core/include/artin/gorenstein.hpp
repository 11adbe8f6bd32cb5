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

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "artin/ideal.hpp"
#include "artin/random.hpp"

namespace artin {

// Skew-symmetric matrix of homogeneous forms with zero diagonal.
class SkewPolyMatrix {
 public:
  SkewPolyMatrix() = default;
  SkewPolyMatrix(Field field, int nvars, int size);

  // The 5x5 layout with quadrics q1..q6 in the leading 4x4 block
  // ((1,2)=q1, (1,3)=q2, (2,3)=q3, (1,4)=q4, (2,4)=q5, (3,4)=q6) and
  // linear forms l1..l4 in the last column.
  static SkewPolyMatrix be_form(const std::array<Polynomial, 6>& q,
                                const std::array<Polynomial, 4>& l);
  static SkewPolyMatrix random_be(const Field& field, Rng& rng);

  const Field& field() const { return field_; }
  int nvars() const { return nvars_; }
  int size() const { return size_; }
  const Polynomial& at(int i, int j) const { return entries_[i * size_ + j]; }
  // Sets (i, j) to p and (j, i) to -p.
  void set(int i, int j, const Polynomial& p);

  // Principal submatrix on the given (increasing) indices.
  SkewPolyMatrix principal(const std::vector<int>& keep) const;
  SkewPolyMatrix without(int index) const;

  // "skew n" followed by "entry i j poly" lines (1-based, i < j, nonzero only).
  std::string to_text(const std::vector<std::string>& names = {}) const;
  // Canonical one-line form used in search records.
  std::string canonical(const std::vector<std::string>& names = {}) const;

 private:
  Field field_;
  int nvars_ = 3;
  int size_ = 0;
  std::vector<Polynomial> entries_;
};

SkewPolyMatrix parse_skew_matrix(std::string_view text, const Field& field,
                                 const std::vector<std::string>& names);

// Pfaffian by expansion along the first row; Pf [[0,a],[-a,0]] = a.
Polynomial pfaffian(const SkewPolyMatrix& m);
// f_i = (-1)^(i+1) Pf(delete row and column i), i = 1..n.
std::vector<Polynomial> submaximal_pfaffians(const SkewPolyMatrix& m);
// Ideal of submaximal pfaffians of a 5x5 or 7x7 matrix.
GradedIdeal pfaffian_ideal(const SkewPolyMatrix& m);

// Matrix of g -> g o F from S_d to E_{e-d} (rows indexed by E_{e-d}).
ExactMatrix catalecticant(const DualForm& form, int d);
// ann(F) with exact pieces through degree max_d (default e + 1) and F
// attached as its inverse system.
GradedIdeal annihilator(const DualForm& form, int max_d = -1);
// ann(F_1) cap ... cap ann(F_t), exact through degree e + 1.
GradedIdeal annihilator(const std::vector<DualForm>& forms);

// min(dim S_i, t dim S_{e-i}) for i = 0..e.
HVector compressed_hvector(int e, int type, int nvars = 3);

struct CompressedSample {
  DualForm form;
  GradedIdeal ideal;
  int tries = 0;
};

// Random dual form of degree e whose annihilator is compressed.
CompressedSample compressed_random(int e, const Field& field, std::uint64_t seed,
                                   int max_tries = 20);

struct CompressResult {
  DualForm form;
  int s = 0;
  int tries = 0;
  HVector hvector;
  // rank(x L on S/ann G) <= rank(x L on S/ann F) + s in every degree.
  bool rank_inequality = true;
};

// G = F + H_1 + ... + H_s with H_i divided powers of random linear forms
// and s = dim S_(e/2) - h_(e/2)(ann F).
CompressResult compress_toward(const DualForm& form, std::uint64_t seed, int max_tries = 20);

struct GorensteinCertificate {
  HVector hvector;
  int socle_degree = 0;
  bool symmetric = false;
  bool socle_dim_one = false;
  std::size_t codim = 0;
  std::vector<std::size_t> socle_dims;  // by degree
  bool certified = false;
};

GorensteinCertificate certify_gorenstein(const GradedIdeal& ideal,
                                         int probe_bound = kDefaultProbeBound);

// I + (all monomials of degree e_new + 1).
GradedIdeal truncate_algebra(const GradedIdeal& ideal, int e_new);

struct LevelDecomposition {
  GradedIdeal level;
  std::vector<GradedIdeal> factors;
  HVector hvector;
  std::size_t socle_dim = 0;  // in degree e
};

LevelDecomposition level_decompose(const std::vector<DualForm>& forms);

// Basis of [I]_d-perp inside E_d (the degree-d piece of the inverse system).
std::vector<DualForm> inverse_system_component(const GradedIdeal& ideal, int d);
// The dual generator of a Gorenstein ideal of socle degree e.
DualForm dual_generator(const GradedIdeal& ideal, int probe_bound = kDefaultProbeBound);

// ann(L o F) for a random linear form L, when I = ann(F) carries F.
GradedIdeal socle_quotient_sample(const GradedIdeal& ideal, std::uint64_t seed);

}  // namespace artin
