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

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "artin/error.hpp"
#include "artin/random.hpp"

namespace artin {

enum class FieldKind { Rationals, Prime, Extension };

inline constexpr int kMaxExtensionDegree = 4;

// Coefficients c[0] + c[1] t + ... of a finite-field element; prime fields
// only use c[0].
struct Residue {
  std::array<std::uint32_t, kMaxExtensionDegree> c{};
  friend bool operator==(const Residue&, const Residue&) = default;
};

// A scalar value. It does not carry its field; all arithmetic goes through
// a Field, which validates operands at API boundaries.
class FieldElement {
 public:
  FieldElement() = default;
  explicit FieldElement(Residue r) : value_(r) {}
  explicit FieldElement(mpq_class q) : value_(std::move(q)) {}

  bool is_rational() const { return value_.index() == 1; }
  const Residue& residue() const { return std::get<0>(value_); }
  const mpq_class& rational() const { return std::get<1>(value_); }

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    if (a.value_.index() != b.value_.index()) return false;
    if (a.is_rational()) return cmp(a.rational(), b.rational()) == 0;
    return a.residue() == b.residue();
  }

  std::size_t hash() const;

 private:
  std::variant<Residue, mpq_class> value_;
};

enum class ArithOp { Add, Sub, Mul, Div };

bool is_prime(std::uint64_t n);

// Lexicographically smallest (reading coefficients from t^{k-1} down to
// t^0) monic irreducible polynomial of degree k over GF(p). Returned as
// coefficients c_0..c_k with c_k = 1.
std::vector<std::uint32_t> find_irreducible(std::uint32_t p, int k);

// True iff the monic polynomial with coefficients c_0..c_k is irreducible
// over GF(p).
bool is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& coeffs);

// Q, GF(p) or GF(p^k). A small immutable value; copies are cheap and two
// fields compare equal iff they describe the same arithmetic.
class Field {
 public:
  Field() = default;  // the rationals

  static Field rationals() { return Field(); }
  static Field prime(std::uint32_t p);
  // modulus: c_0..c_k monic; empty selects find_irreducible(p, k).
  static Field extension(std::uint32_t p, int k,
                         std::vector<std::uint32_t> modulus = {});
  // "Q", "GF(7)", "GF(3^2)".
  static Field parse(std::string_view text);

  FieldKind kind() const { return kind_; }
  bool is_finite() const { return kind_ != FieldKind::Rationals; }
  std::uint32_t characteristic() const { return p_; }
  int degree() const { return k_; }
  // Monic modulus coefficients c_0..c_k (extension fields only).
  std::vector<std::uint32_t> modulus() const;
  // Number of elements; throws InvalidField for Q or if it exceeds 2^63.
  std::uint64_t order() const;
  std::string name() const;

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement from_int(std::int64_t v) const;
  FieldElement from_rational(const mpq_class& q) const;
  // Finite fields: the element whose base-p digits are the t-coefficients.
  FieldElement from_code(std::uint64_t code) const;
  std::uint64_t code_of(const FieldElement& a) const;
  // The generator t of an extension field.
  FieldElement generator() const;

  FieldElement add(const FieldElement& a, const FieldElement& b) const;
  FieldElement sub(const FieldElement& a, const FieldElement& b) const;
  FieldElement neg(const FieldElement& a) const;
  FieldElement mul(const FieldElement& a, const FieldElement& b) const;
  FieldElement inv(const FieldElement& a) const;
  FieldElement div(const FieldElement& a, const FieldElement& b) const;
  FieldElement pow(const FieldElement& a, std::uint64_t n) const;
  // a + b * c
  FieldElement fma(const FieldElement& a, const FieldElement& b,
                   const FieldElement& c) const;
  bool is_zero(const FieldElement& a) const;
  bool is_one(const FieldElement& a) const;

  // Uniform over a finite field; integers in [-bound, bound] over Q.
  FieldElement random(Rng& rng, std::int64_t bound = 1000) const;
  FieldElement random_nonzero(Rng& rng, std::int64_t bound = 1000) const;

  // Throws FieldMismatch unless a is a canonical element of this field.
  void check(const FieldElement& a) const;
  bool contains(const FieldElement& a) const;

  FieldElement parse_element(std::string_view text) const;
  std::string to_string(const FieldElement& a) const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  FieldKind kind_ = FieldKind::Rationals;
  std::uint32_t p_ = 0;
  int k_ = 1;
  std::array<std::uint32_t, kMaxExtensionDegree + 1> modulus_{};

  Residue ext_mul(const Residue& a, const Residue& b) const;
  Residue ext_inv(const Residue& a) const;
};

// Checked arithmetic: both operands must belong to `field`.
FieldElement field_arith(const Field& field, const FieldElement& a,
                         const FieldElement& b, ArithOp op);

}  // namespace artin
