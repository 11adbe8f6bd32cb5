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

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <vector>

#include "artin/matrix.hpp"
#include "artin/polynomial.hpp"

namespace artin {

// Default degree cutoff for declaring a Hilbert function stable.
inline constexpr int kDefaultStabilizationCutoff = 12;
// Default probe bound for artinian checks.
inline constexpr int kDefaultProbeBound = 40;

// One graded piece [I]_d, in coordinates over MonomialBasis(nvars, d).
// The basis is in RREF; the non-pivot monomials ("standard monomials")
// give canonical coset representatives for (S/I)_d.
class DegreeComponent {
 public:
  DegreeComponent() = default;
  // rows: any spanning set of [I]_d.
  DegreeComponent(const Field& field, int nvars, int degree, const ExactMatrix& rows);

  int degree() const { return degree_; }
  int nvars() const { return nvars_; }
  const Field& field() const { return basis_.field(); }
  const ExactMatrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  const std::vector<std::size_t>& standard() const { return standard_; }
  std::size_t ambient_dim() const { return basis_.cols(); }
  std::size_t dim() const { return basis_.rows(); }
  std::size_t quotient_dim() const { return standard_.size(); }

  // Coordinates of v modulo [I]_d on the standard monomials.
  Vector reduce(std::span<const FieldElement> v) const;
  // Coordinates over S_d of the coset representative with the given
  // standard coordinates.
  Vector lift(std::span<const FieldElement> standard_coords) const;
  bool contains(std::span<const FieldElement> v) const;

 private:
  int nvars_ = 0;
  int degree_ = 0;
  ExactMatrix basis_;
  std::vector<std::size_t> pivots_;
  std::vector<std::size_t> standard_;
};

// Homogeneous ideal given by generators, with lazily computed graded
// pieces. Concurrent reads are safe: a missing degree is computed outside
// the lock and published once.
class GradedIdeal {
 public:
  GradedIdeal() = default;
  GradedIdeal(Field field, int nvars, std::vector<Polynomial> generators);
  GradedIdeal(const GradedIdeal& other);
  GradedIdeal(GradedIdeal&& other) noexcept;
  GradedIdeal& operator=(const GradedIdeal& other);
  GradedIdeal& operator=(GradedIdeal&& other) noexcept;

  // Ideal whose graded pieces in degrees 0..D are the given spans and which
  // is generated in degrees <= D. Minimal generators are read off as basis
  // completions of S_1 [I]_{d-1} inside [I]_d.
  static GradedIdeal from_components(const Field& field, int nvars,
                                     const std::vector<ExactMatrix>& spans);

  const Field& field() const { return field_; }
  int nvars() const { return nvars_; }
  const std::vector<Polynomial>& generators() const { return generators_; }

  std::shared_ptr<const DegreeComponent> component(int d) const;

  // I + (extra)
  GradedIdeal with_generators(const std::vector<Polynomial>& extra) const;

  // Dual generators, when the ideal was built from an inverse system.
  const std::vector<DualForm>& inverse_system() const { return inverse_system_; }
  void set_inverse_system(std::vector<DualForm> forms) { inverse_system_ = std::move(forms); }

  // Number of minimal generators in each degree (from the graded pieces).
  std::map<int, std::size_t> minimal_generator_counts(int max_degree) const;

 private:
  Field field_;
  int nvars_ = 3;
  std::vector<Polynomial> generators_;
  std::vector<DualForm> inverse_system_;
  mutable std::mutex mu_;
  mutable std::map<int, std::shared_ptr<const DegreeComponent>> cache_;

  std::shared_ptr<const DegreeComponent> compute_component(int d) const;
};

// Trimmed Hilbert function of an artinian quotient.
struct HVector {
  std::vector<std::size_t> values;

  int socle_degree() const { return static_cast<int>(values.size()) - 1; }
  std::size_t total() const;
  std::size_t at(int i) const {
    return i >= 0 && i < static_cast<int>(values.size()) ? values[i] : 0;
  }
  friend bool operator==(const HVector&, const HVector&) = default;
};

struct HVectorPredicates {
  bool symmetric = false;
  bool unimodal = false;
  bool differentiable_first_half = false;
  bool flawless = false;
};

// Coordinates of f * m (homogeneous f) over MonomialBasis(nvars, deg f + deg m).
Vector product_coordinates(const Polynomial& f, const Monomial& m);

// RREF basis of [I]_d.
ExactMatrix ideal_degree_basis(const GradedIdeal& ideal, int d);

// H(d) = dim S_d - dim [I]_d for d = 0..max_d.
std::vector<std::size_t> hilbert_function(const GradedIdeal& ideal, int max_d);

// First degree d <= probe_bound with H(d) = 0; throws Inconclusive otherwise.
int is_artinian(const GradedIdeal& ideal, int probe_bound = kDefaultProbeBound);

// h-vector of an artinian quotient (throws NotArtinian if none found).
HVector hvector(const GradedIdeal& ideal, int probe_bound = kDefaultProbeBound);

// Stabilized value of the Hilbert function (length of a zero-dimensional
// scheme): the first value repeated in three consecutive degrees <= cutoff.
std::size_t stabilized_length(const GradedIdeal& ideal, int cutoff = kDefaultStabilizationCutoff);

// Matrix of multiplication by the form f from (S/I)_i to (S/I)_{i + deg f}
// in standard-monomial coordinates.
ExactMatrix multiplication_matrix(const DegreeComponent& source, const DegreeComponent& target,
                                  const Polynomial& f);
ExactMatrix multiplication_matrix(const GradedIdeal& ideal, const Polynomial& f, int i);

// Basis of [I : f]_d.
ExactMatrix colon_by_form(const GradedIdeal& ideal, const Polynomial& f, int d);
// I : f as an ideal, exact through degree max_d.
GradedIdeal colon_ideal(const GradedIdeal& ideal, const Polynomial& f, int max_d);

// Basis of the degree-d piece of the intersection.
ExactMatrix intersect_ideals(std::span<const GradedIdeal> ideals, int d);
// Intersection as an ideal, exact through degree max_d.
GradedIdeal intersection_ideal(std::span<const GradedIdeal> ideals, int max_d);

// {g in S_d : g S_N in I} for N = power_bound, checked against N + 1;
// throws NotStabilized when the two differ.
ExactMatrix saturation_degree_basis(const GradedIdeal& ideal, int d, int power_bound);

// Coset representatives (rows over S_d) of Soc(S/I)_d.
ExactMatrix socle_basis(const GradedIdeal& ideal, int d);

// Relations sum a_i g_i = 0 with deg a_i = d - deg g_i.
std::vector<std::vector<Polynomial>> syzygies_in_degree(const std::vector<Polynomial>& gens,
                                                        int d);

// Macaulay's upper bound a^<i> for the growth of an O-sequence.
std::uint64_t macaulay_bound(std::uint64_t a, int i);
bool is_o_sequence(std::span<const std::size_t> seq);

HVectorPredicates hvector_predicates(const HVector& h);

}  // namespace artin
