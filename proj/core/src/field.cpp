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

#include "artin/field.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

namespace artin {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::InvalidField: return "InvalidField";
    case ErrorCode::DegreeTooLarge: return "DegreeTooLarge";
    case ErrorCode::ExponentOverflow: return "ExponentOverflow";
    case ErrorCode::Inconclusive: return "Inconclusive";
    case ErrorCode::NotStabilized: return "NotStabilized";
    case ErrorCode::NotArtinian: return "NotArtinian";
    case ErrorCode::UndeterminedOverQ: return "UndeterminedOverQ";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::NotCompressedAfterRetries: return "NotCompressedAfterRetries";
    case ErrorCode::InhomogeneousPfaffian: return "InhomogeneousPfaffian";
    case ErrorCode::RequiresInverseSystem: return "RequiresInverseSystem";
    case ErrorCode::DependentDualForms: return "DependentDualForms";
    case ErrorCode::NotZeroDimensional: return "NotZeroDimensional";
    case ErrorCode::NotSplit: return "NotSplit";
    case ErrorCode::NotInNormalFormOrbit: return "NotInNormalFormOrbit";
    case ErrorCode::BasePointFound: return "BasePointFound";
    case ErrorCode::LineNotSplit: return "LineNotSplit";
    case ErrorCode::WrongHVector: return "WrongHVector";
    case ErrorCode::NoLinearSyzygies: return "NoLinearSyzygies";
    case ErrorCode::StructureMismatch: return "StructureMismatch";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InhomogeneousGenerator: return "InhomogeneousGenerator";
    case ErrorCode::UnknownVariable: return "UnknownVariable";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

namespace {

using u64 = std::uint64_t;

u64 powmod(u64 a, u64 n, u64 p) {
  u64 r = 1 % p;
  a %= p;
  while (n) {
    if (n & 1) r = r * a % p;
    a = a * a % p;
    n >>= 1;
  }
  return r;
}

u64 inv_mod(u64 a, u64 p) { return powmod(a, p - 2, p); }

// Dense polynomials over GF(p), coefficient i is the t^i coefficient.
using UPoly = std::vector<u64>;

void trim(UPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

UPoly poly_mod(UPoly a, const UPoly& m, u64 p) {
  trim(a);
  const u64 lead_inv = inv_mod(m.back(), p);
  while (a.size() >= m.size()) {
    const u64 c = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - m.size();
    for (std::size_t i = 0; i < m.size(); ++i) {
      a[shift + i] = (a[shift + i] + p - c * m[i] % p) % p;
    }
    trim(a);
  }
  return a;
}

UPoly poly_mulmod(const UPoly& a, const UPoly& b, const UPoly& m, u64 p) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  return poly_mod(std::move(r), m, p);
}

UPoly poly_gcd(UPoly a, UPoly b, u64 p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    UPoly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// t^(p^i) mod m by repeated p-th powering.
UPoly frobenius_power(const UPoly& base, const UPoly& m, u64 p) {
  UPoly result{1};
  UPoly sq = base;
  u64 n = p;
  while (n) {
    if (n & 1) result = poly_mulmod(result, sq, m, p);
    sq = poly_mulmod(sq, sq, m, p);
    n >>= 1;
  }
  return result;
}

std::int64_t parse_int(std::string_view s, std::size_t& pos) {
  std::size_t start = pos;
  if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
  std::string tok(s.substr(start, pos - start));
  if (tok.empty() || tok == "-" || tok == "+")
    throw Error(ErrorCode::ParseError, "expected integer in '" + std::string(s) + "'");
  return std::stoll(tok);
}

std::string strip(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

}  // namespace

std::size_t FieldElement::hash() const {
  if (is_rational()) {
    return std::hash<std::string>{}(rational().get_str());
  }
  std::size_t h = 0;
  for (auto c : residue().c) h = h * 1000003u ^ c;
  return h;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& coeffs) {
  UPoly f(coeffs.begin(), coeffs.end());
  trim(f);
  const std::size_t k = f.size() - 1;
  if (k == 0) return false;
  if (k == 1) return true;
  // f is irreducible iff gcd(f, t^(p^i) - t) = 1 for i <= k/2.
  UPoly power{0, 1};
  for (std::size_t i = 1; i <= k / 2; ++i) {
    power = frobenius_power(power, f, p);
    UPoly diff = power;
    diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
    diff[1] = (diff[1] + p - 1) % p;
    trim(diff);
    if (diff.empty()) return false;
    if (poly_gcd(f, diff, p).size() > 1) return false;
  }
  return true;
}

std::vector<std::uint32_t> find_irreducible(std::uint32_t p, int k) {
  if (!is_prime(p)) throw Error(ErrorCode::InvalidField, "p must be prime");
  if (k < 1 || k > kMaxExtensionDegree)
    throw Error(ErrorCode::InvalidField, "extension degree out of range");
  std::vector<std::uint32_t> c(k + 1, 0);
  c[k] = 1;
  // Enumerate (c_{k-1}, ..., c_0) in lexicographic order.
  while (true) {
    if (is_irreducible(p, c)) return c;
    int i = 0;
    while (i < k) {
      if (++c[i] < p) break;
      c[i] = 0;
      ++i;
    }
    if (i == k) break;
  }
  throw Error(ErrorCode::InvalidField, "no irreducible polynomial found");
}

Field Field::prime(std::uint32_t p) {
  if (!is_prime(p) || p >= (1u << 31))
    throw Error(ErrorCode::InvalidField, "GF(p) needs a prime p < 2^31, got " + std::to_string(p));
  Field f;
  f.kind_ = FieldKind::Prime;
  f.p_ = p;
  f.k_ = 1;
  return f;
}

Field Field::extension(std::uint32_t p, int k, std::vector<std::uint32_t> modulus) {
  if (k == 1) return prime(p);
  Field f = prime(p);
  if (k < 2 || k > kMaxExtensionDegree)
    throw Error(ErrorCode::InvalidField, "extension degree must be in 2..4");
  if (modulus.empty()) modulus = find_irreducible(p, k);
  if (modulus.size() != static_cast<std::size_t>(k + 1) || modulus[k] != 1)
    throw Error(ErrorCode::InvalidField, "modulus must be monic of degree k");
  for (auto c : modulus)
    if (c >= p) throw Error(ErrorCode::InvalidField, "modulus coefficient not reduced");
  if (!is_irreducible(p, modulus))
    throw Error(ErrorCode::InvalidField, "modulus is reducible");
  f.kind_ = FieldKind::Extension;
  f.k_ = k;
  std::copy(modulus.begin(), modulus.end(), f.modulus_.begin());
  return f;
}

Field Field::parse(std::string_view text) {
  const std::string s = strip(text);
  if (s == "Q" || s == "QQ") return rationals();
  if (s.size() > 4 && s.substr(0, 3) == "GF(" && s.back() == ')') {
    const std::string inner = s.substr(3, s.size() - 4);
    std::size_t pos = 0;
    const auto p = parse_int(inner, pos);
    if (p <= 1 || p >= (std::int64_t{1} << 31))
      throw Error(ErrorCode::InvalidField, "bad characteristic in " + s);
    int k = 1;
    if (pos < inner.size()) {
      if (inner[pos] != '^') throw Error(ErrorCode::ParseError, "bad field " + s);
      ++pos;
      k = static_cast<int>(parse_int(inner, pos));
    }
    if (pos != inner.size()) throw Error(ErrorCode::ParseError, "bad field " + s);
    return k == 1 ? prime(static_cast<std::uint32_t>(p))
                  : extension(static_cast<std::uint32_t>(p), k);
  }
  throw Error(ErrorCode::ParseError, "unknown field '" + s + "'");
}

std::vector<std::uint32_t> Field::modulus() const {
  if (kind_ != FieldKind::Extension) return {};
  return {modulus_.begin(), modulus_.begin() + k_ + 1};
}

std::uint64_t Field::order() const {
  if (!is_finite()) throw Error(ErrorCode::InvalidField, "Q is infinite");
  std::uint64_t q = 1;
  for (int i = 0; i < k_; ++i) {
    if (q > (std::uint64_t{1} << 63) / p_)
      throw Error(ErrorCode::InvalidField, "field too large to enumerate");
    q *= p_;
  }
  return q;
}

std::string Field::name() const {
  switch (kind_) {
    case FieldKind::Rationals: return "Q";
    case FieldKind::Prime: return "GF(" + std::to_string(p_) + ")";
    case FieldKind::Extension:
      return "GF(" + std::to_string(p_) + "^" + std::to_string(k_) + ")";
  }
  return "?";
}

FieldElement Field::zero() const {
  if (!is_finite()) return FieldElement(mpq_class(0));
  return FieldElement(Residue{});
}

FieldElement Field::one() const { return from_int(1); }

FieldElement Field::from_int(std::int64_t v) const {
  if (!is_finite()) return FieldElement(mpq_class(static_cast<long>(v)));
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  Residue res;
  res.c[0] = static_cast<std::uint32_t>(r);
  return FieldElement(res);
}

FieldElement Field::from_rational(const mpq_class& q) const {
  if (!is_finite()) {
    mpq_class c(q);
    c.canonicalize();
    return FieldElement(c);
  }
  const mpz_class pz(p_);
  mpz_class num = q.get_num() % pz;
  mpz_class den = q.get_den() % pz;
  if (den == 0) throw Error(ErrorCode::DivisionByZero, "denominator divisible by p");
  if (num < 0) num += pz;
  return div(from_int(num.get_si()), from_int(den.get_si()));
}

FieldElement Field::from_code(std::uint64_t code) const {
  if (!is_finite()) return from_int(static_cast<std::int64_t>(code));
  Residue r;
  for (int i = 0; i < k_; ++i) {
    r.c[i] = static_cast<std::uint32_t>(code % p_);
    code /= p_;
  }
  return FieldElement(r);
}

std::uint64_t Field::code_of(const FieldElement& a) const {
  std::uint64_t code = 0;
  for (int i = k_ - 1; i >= 0; --i) code = code * p_ + a.residue().c[i];
  return code;
}

FieldElement Field::generator() const {
  if (kind_ != FieldKind::Extension)
    throw Error(ErrorCode::InvalidField, "only extension fields have a generator t");
  Residue r;
  r.c[1] = 1;
  return FieldElement(r);
}

FieldElement Field::add(const FieldElement& a, const FieldElement& b) const {
  if (!is_finite()) return FieldElement(mpq_class(a.rational() + b.rational()));
  Residue r;
  const auto& x = a.residue();
  const auto& y = b.residue();
  for (int i = 0; i < k_; ++i) {
    const std::uint32_t s = x.c[i] + y.c[i];
    r.c[i] = s >= p_ ? s - p_ : s;
  }
  return FieldElement(r);
}

FieldElement Field::neg(const FieldElement& a) const {
  if (!is_finite()) return FieldElement(mpq_class(-a.rational()));
  Residue r;
  for (int i = 0; i < k_; ++i) r.c[i] = a.residue().c[i] ? p_ - a.residue().c[i] : 0;
  return FieldElement(r);
}

FieldElement Field::sub(const FieldElement& a, const FieldElement& b) const {
  if (!is_finite()) return FieldElement(mpq_class(a.rational() - b.rational()));
  Residue r;
  const auto& x = a.residue();
  const auto& y = b.residue();
  for (int i = 0; i < k_; ++i) r.c[i] = x.c[i] >= y.c[i] ? x.c[i] - y.c[i] : x.c[i] + p_ - y.c[i];
  return FieldElement(r);
}

Residue Field::ext_mul(const Residue& a, const Residue& b) const {
  std::array<u64, 2 * kMaxExtensionDegree> prod{};
  for (int i = 0; i < k_; ++i) {
    if (!a.c[i]) continue;
    for (int j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + u64{a.c[i]} * b.c[j]) % p_;
  }
  for (int d = 2 * k_ - 2; d >= k_; --d) {
    const u64 c = prod[d];
    if (!c) continue;
    prod[d] = 0;
    // t^k = -(m_0 + ... + m_{k-1} t^{k-1})
    for (int i = 0; i < k_; ++i)
      prod[d - k_ + i] = (prod[d - k_ + i] + (p_ - modulus_[i]) % p_ * c) % p_;
  }
  Residue r;
  for (int i = 0; i < k_; ++i) r.c[i] = static_cast<std::uint32_t>(prod[i]);
  return r;
}

Residue Field::ext_inv(const Residue& a) const {
  // Extended Euclid in GF(p)[t]: find s with s*a = 1 mod modulus.
  UPoly r0(modulus_.begin(), modulus_.begin() + k_ + 1);
  UPoly r1(a.c.begin(), a.c.begin() + k_);
  trim(r1);
  UPoly s0{}, s1{1};
  while (!r1.empty()) {
    // q, r = divmod(r0, r1)
    UPoly rem = r0;
    UPoly q(rem.size() >= r1.size() ? rem.size() - r1.size() + 1 : 0, 0);
    const u64 lead_inv = inv_mod(r1.back(), p_);
    while (rem.size() >= r1.size() && !rem.empty()) {
      const u64 c = rem.back() * lead_inv % p_;
      const std::size_t shift = rem.size() - r1.size();
      q[shift] = c;
      for (std::size_t i = 0; i < r1.size(); ++i)
        rem[shift + i] = (rem[shift + i] + p_ - c * r1[i] % p_) % p_;
      trim(rem);
    }
    // s_new = s0 - q*s1
    UPoly qs(q.size() + s1.size(), 0);
    for (std::size_t i = 0; i < q.size(); ++i)
      for (std::size_t j = 0; j < s1.size(); ++j) qs[i + j] = (qs[i + j] + q[i] * s1[j]) % p_;
    UPoly s2(std::max(s0.size(), qs.size()), 0);
    for (std::size_t i = 0; i < s2.size(); ++i) {
      const u64 x = i < s0.size() ? s0[i] : 0;
      const u64 y = i < qs.size() ? qs[i] : 0;
      s2[i] = (x + p_ - y) % p_;
    }
    trim(s2);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 is a nonzero constant.
  const u64 c = inv_mod(r0[0], p_);
  Residue out;
  for (std::size_t i = 0; i < s0.size() && i < static_cast<std::size_t>(k_); ++i)
    out.c[i] = static_cast<std::uint32_t>(s0[i] * c % p_);
  return out;
}

FieldElement Field::mul(const FieldElement& a, const FieldElement& b) const {
  switch (kind_) {
    case FieldKind::Rationals: return FieldElement(mpq_class(a.rational() * b.rational()));
    case FieldKind::Prime: {
      Residue r;
      r.c[0] = static_cast<std::uint32_t>(u64{a.residue().c[0]} * b.residue().c[0] % p_);
      return FieldElement(r);
    }
    case FieldKind::Extension: return FieldElement(ext_mul(a.residue(), b.residue()));
  }
  return {};
}

FieldElement Field::fma(const FieldElement& a, const FieldElement& b,
                        const FieldElement& c) const {
  if (kind_ == FieldKind::Prime) {
    Residue r;
    r.c[0] = static_cast<std::uint32_t>(
        (u64{a.residue().c[0]} + u64{b.residue().c[0]} * c.residue().c[0]) % p_);
    return FieldElement(r);
  }
  return add(a, mul(b, c));
}

FieldElement Field::inv(const FieldElement& a) const {
  if (is_zero(a)) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  switch (kind_) {
    case FieldKind::Rationals: return FieldElement(mpq_class(1 / a.rational()));
    case FieldKind::Prime: {
      Residue r;
      r.c[0] = static_cast<std::uint32_t>(inv_mod(a.residue().c[0], p_));
      return FieldElement(r);
    }
    case FieldKind::Extension: return FieldElement(ext_inv(a.residue()));
  }
  return {};
}

FieldElement Field::div(const FieldElement& a, const FieldElement& b) const {
  return mul(a, inv(b));
}

FieldElement Field::pow(const FieldElement& a, std::uint64_t n) const {
  FieldElement r = one();
  FieldElement base = a;
  while (n) {
    if (n & 1) r = mul(r, base);
    base = mul(base, base);
    n >>= 1;
  }
  return r;
}

bool Field::is_zero(const FieldElement& a) const {
  if (a.is_rational()) return sgn(a.rational()) == 0;
  for (auto c : a.residue().c)
    if (c) return false;
  return true;
}

bool Field::is_one(const FieldElement& a) const { return a == one(); }

FieldElement Field::random(Rng& rng, std::int64_t bound) const {
  if (!is_finite()) return from_int(rng.between(-bound, bound));
  Residue r;
  for (int i = 0; i < k_; ++i) r.c[i] = static_cast<std::uint32_t>(rng.below(p_));
  return FieldElement(r);
}

FieldElement Field::random_nonzero(Rng& rng, std::int64_t bound) const {
  while (true) {
    FieldElement x = random(rng, bound);
    if (!is_zero(x)) return x;
  }
}

bool Field::contains(const FieldElement& a) const {
  if (!is_finite()) return a.is_rational();
  if (a.is_rational()) return false;
  for (int i = 0; i < kMaxExtensionDegree; ++i) {
    const auto c = a.residue().c[i];
    if (i >= k_ ? c != 0 : c >= p_) return false;
  }
  return true;
}

void Field::check(const FieldElement& a) const {
  if (!contains(a))
    throw Error(ErrorCode::FieldMismatch, "element is not in " + name());
}

std::string Field::to_string(const FieldElement& a) const {
  if (!is_finite()) return a.rational().get_str();
  if (kind_ == FieldKind::Prime) return std::to_string(a.residue().c[0]);
  std::string out;
  for (int i = k_ - 1; i >= 0; --i) {
    const auto c = a.residue().c[i];
    if (!c) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += std::to_string(c);
    } else {
      if (c != 1) out += std::to_string(c) + "*";
      out += i == 1 ? "t" : "t^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

FieldElement Field::parse_element(std::string_view text) const {
  const std::string s = strip(text);
  if (s.empty()) throw Error(ErrorCode::ParseError, "empty scalar");
  if (!is_finite()) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw Error(ErrorCode::ParseError, "bad rational '" + s + "'");
    q.canonicalize();
    if (q.get_den() == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator in '" + s + "'");
    return FieldElement(q);
  }
  // Sum of terms [int][*]t[^e] with optional signs.
  FieldElement acc = zero();
  std::size_t pos = 0;
  while (pos < s.size()) {
    bool negative = false;
    if (s[pos] == '+' || s[pos] == '-') {
      negative = s[pos] == '-';
      ++pos;
    }
    FieldElement term = one();
    bool seen = false;
    if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      term = from_rational(mpq_class(mpz_class(parse_int(s, pos))));
      seen = true;
      if (pos < s.size() && s[pos] == '/') {
        ++pos;
        term = div(term, from_int(parse_int(s, pos)));
      }
      if (pos < s.size() && s[pos] == '*') ++pos;
    }
    if (pos < s.size() && s[pos] == 't') {
      if (kind_ != FieldKind::Extension)
        throw Error(ErrorCode::ParseError, "'t' only valid in extension fields");
      ++pos;
      std::uint64_t e = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        e = static_cast<std::uint64_t>(parse_int(s, pos));
      }
      term = mul(term, pow(generator(), e));
      seen = true;
    }
    if (!seen) throw Error(ErrorCode::ParseError, "bad scalar '" + s + "'");
    acc = negative ? sub(acc, term) : add(acc, term);
    if (pos < s.size() && s[pos] != '+' && s[pos] != '-')
      throw Error(ErrorCode::ParseError, "bad scalar '" + s + "'");
  }
  return acc;
}

FieldElement field_arith(const Field& field, const FieldElement& a,
                         const FieldElement& b, ArithOp op) {
  field.check(a);
  field.check(b);
  switch (op) {
    case ArithOp::Add: return field.add(a, b);
    case ArithOp::Sub: return field.sub(a, b);
    case ArithOp::Mul: return field.mul(a, b);
    case ArithOp::Div: return field.div(a, b);
  }
  return field.zero();
}

}  // namespace artin
