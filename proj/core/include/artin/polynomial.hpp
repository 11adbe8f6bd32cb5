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
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "artin/field.hpp"

namespace artin {

inline constexpr int kMaxVars = 8;
inline constexpr std::uint32_t kMaxExponent = 0xFFFF;

std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

// Exponent vector. The degree is kept alongside the exponents.
struct Monomial {
  std::array<std::uint16_t, kMaxVars> exps{};
  std::uint8_t nvars = 0;
  std::uint32_t degree = 0;

  Monomial() = default;
  explicit Monomial(int n);
  Monomial(std::initializer_list<int> exponents);
  static Monomial from_exponents(std::span<const int> exponents);
  static Monomial variable(int n, int i);

  int operator[](int i) const { return exps[i]; }
  void set(int i, int value);

  // Componentwise sum; throws ExponentOverflow past 2^16-1.
  Monomial operator*(const Monomial& other) const;
  bool divides(const Monomial& other) const;
  // other / *this, assuming divides(other).
  Monomial quotient_of(const Monomial& other) const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.nvars == b.nvars && a.exps == b.exps;
  }
  std::uint64_t hash() const;
};

// Graded reverse lexicographic order with x_0 > x_1 > ... .
bool grevlex_less(const Monomial& a, const Monomial& b);

struct GrevlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_less(b, a); }
};

// Monomials of one degree, descending in grevlex, with O(1) index lookup.
// Instances are interned; the reference stays valid for the process.
class MonomialBasis {
 public:
  static const MonomialBasis& get(int nvars, int degree);

  int nvars() const { return nvars_; }
  int degree() const { return degree_; }
  std::size_t size() const { return monomials_.size(); }
  const std::vector<Monomial>& monomials() const { return monomials_; }
  const Monomial& operator[](std::size_t i) const { return monomials_[i]; }
  // Index of m (which must have this degree and nvars).
  std::size_t index_of(const Monomial& m) const;

 private:
  MonomialBasis(int nvars, int degree);
  int nvars_;
  int degree_;
  std::vector<Monomial> monomials_;
  std::vector<std::uint32_t> table_;  // open addressing: slot -> index+1
  std::size_t mask_ = 0;
};

// Descending grevlex list of length C(d+n-1, n-1).
std::vector<Monomial> monomials_of_degree(int nvars, int degree);

std::vector<std::string> default_variable_names(int nvars);

// Sparse polynomial with exact coefficients. No stored coefficient is zero.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, FieldElement, GrevlexGreater>;

  Polynomial() = default;
  Polynomial(Field field, int nvars);

  static Polynomial constant(const Field& field, int nvars, const FieldElement& c);
  static Polynomial variable(const Field& field, int nvars, int i);
  static Polynomial term(const Field& field, const Monomial& m, const FieldElement& c);
  // Homogeneous form of degree d from coordinates over MonomialBasis(nvars, d).
  static Polynomial from_coefficients(const Field& field, int nvars, int degree,
                                      std::span<const FieldElement> coeffs);
  // Dense random form of degree d.
  static Polynomial random_form(const Field& field, int nvars, int degree, Rng& rng);

  const Field& field() const { return field_; }
  int nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  // Some(d) iff every term has degree d (zero polynomial: none).
  std::optional<int> homogeneous_degree() const;
  int total_degree() const;
  FieldElement coefficient(const Monomial& m) const;
  const Monomial& leading_monomial() const { return terms_.begin()->first; }

  void add_term(const Monomial& m, const FieldElement& c);

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial scaled(const FieldElement& c) const;
  Polynomial times_monomial(const Monomial& m) const;
  Polynomial pow(unsigned n) const;

  FieldElement evaluate(std::span<const FieldElement> point) const;
  Polynomial derivative(int var) const;
  // Replace x_i by images[i] (all in the same ring).
  Polynomial substitute(const std::vector<Polynomial>& images) const;
  // Re-read the coefficients in another field of the same characteristic
  // that contains this one's prime subfield (GF(p) into GF(p^k), Q into Q).
  Polynomial change_field(const Field& target) const;

  // Coordinates of the degree-d part over MonomialBasis(nvars, d).
  std::vector<FieldElement> coefficients_in_degree(int degree) const;

  std::string to_string(const std::vector<std::string>& names = {}) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  Field field_;
  int nvars_ = 0;
  TermMap terms_;

  void require_same_ring(const Polynomial& other) const;
};

// Element of the divided-power dual module, homogeneous of one degree.
// The polynomial ring acts by contraction: x^a o X^A = X^(A-a).
class DualForm {
 public:
  DualForm() = default;
  DualForm(Field field, int nvars, int degree);

  static DualForm from_coefficients(const Field& field, int nvars, int degree,
                                    std::span<const FieldElement> coeffs);
  static DualForm random(const Field& field, int nvars, int degree, Rng& rng);
  // (l_0 X_0 + ... )^[e] = sum over |A| = e of l^A X^[A].
  static DualForm divided_power(const Field& field, std::span<const FieldElement> linear,
                                int degree);

  const Field& field() const { return field_; }
  int nvars() const { return nvars_; }
  int degree() const { return degree_; }
  const Polynomial::TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Monomial& m, const FieldElement& c);
  FieldElement coefficient(const Monomial& m) const;
  std::vector<FieldElement> coefficients() const;

  DualForm operator+(const DualForm& other) const;
  DualForm scaled(const FieldElement& c) const;

  // The ordinary polynomial sum c_A X^A / A!, i.e. the form whose
  // differential annihilator matches the contraction annihilator. Needs
  // char 0 or char > degree.
  Polynomial to_differential_polynomial() const;
  // Coefficients copied verbatim into a polynomial.
  Polynomial as_polynomial() const;

  std::string to_string(const std::vector<std::string>& names = {}) const;

  friend bool operator==(const DualForm& a, const DualForm& b);

 private:
  Field field_;
  int nvars_ = 0;
  int degree_ = 0;
  Polynomial::TermMap terms_;
};

// g o F for homogeneous g of degree d <= deg F.
DualForm contract(const Polynomial& g, const DualForm& form);

// Determinant by cofactor expansion; entries share one ring.
Polynomial polynomial_determinant(const std::vector<std::vector<Polynomial>>& m);

// Determinant of the matrix of second partial derivatives.
Polynomial hessian_det(const Polynomial& f);

// Grammar: terms joined by +/-, a term is a '*'-product of scalars
// (integers, a/b, parenthesised field scalars, 't' in extension fields)
// and variables with optional ^exponent.
Polynomial parse_polynomial(std::string_view text, const Field& field,
                            const std::vector<std::string>& names);

}  // namespace artin
