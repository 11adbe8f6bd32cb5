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

#include "artin/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <memory>
#include <mutex>

namespace artin {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Monomial::Monomial(int n) : nvars(static_cast<std::uint8_t>(n)) {
  if (n <= 0 || n > kMaxVars)
    throw Error(ErrorCode::PreconditionFailed, "number of variables must be in 1..8");
}

Monomial::Monomial(std::initializer_list<int> exponents)
    : Monomial(static_cast<int>(exponents.size())) {
  int i = 0;
  for (int e : exponents) set(i++, e);
}

Monomial Monomial::from_exponents(std::span<const int> exponents) {
  Monomial m(static_cast<int>(exponents.size()));
  for (std::size_t i = 0; i < exponents.size(); ++i) m.set(static_cast<int>(i), exponents[i]);
  return m;
}

Monomial Monomial::variable(int n, int i) {
  Monomial m(n);
  m.set(i, 1);
  return m;
}

void Monomial::set(int i, int value) {
  if (value < 0 || static_cast<std::uint32_t>(value) > kMaxExponent)
    throw Error(ErrorCode::ExponentOverflow, "exponent out of range");
  degree = degree - exps[i] + static_cast<std::uint32_t>(value);
  exps[i] = static_cast<std::uint16_t>(value);
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r = *this;
  for (int i = 0; i < nvars; ++i) {
    const std::uint32_t e = std::uint32_t{exps[i]} + other.exps[i];
    if (e > kMaxExponent) throw Error(ErrorCode::ExponentOverflow, "exponent overflow");
    r.exps[i] = static_cast<std::uint16_t>(e);
  }
  r.degree = degree + other.degree;
  return r;
}

bool Monomial::divides(const Monomial& other) const {
  for (int i = 0; i < nvars; ++i)
    if (exps[i] > other.exps[i]) return false;
  return true;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  Monomial r = other;
  for (int i = 0; i < nvars; ++i) r.exps[i] = static_cast<std::uint16_t>(other.exps[i] - exps[i]);
  r.degree = other.degree - degree;
  return r;
}

std::uint64_t Monomial::hash() const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (int i = 0; i < nvars; ++i) {
    h ^= exps[i];
    h *= 0x100000001b3ULL;
  }
  return splitmix64(h);
}

bool grevlex_less(const Monomial& a, const Monomial& b) {
  if (a.degree != b.degree) return a.degree < b.degree;
  for (int i = a.nvars - 1; i >= 0; --i) {
    if (a.exps[i] != b.exps[i]) return a.exps[i] > b.exps[i];
  }
  return false;
}

namespace {

void enumerate(int nvars, int remaining, int var, Monomial& cur, std::vector<Monomial>& out) {
  if (var == nvars - 1) {
    cur.set(var, remaining);
    out.push_back(cur);
    cur.set(var, 0);
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    cur.set(var, e);
    enumerate(nvars, remaining - e, var + 1, cur, out);
  }
  cur.set(var, 0);
}

}  // namespace

MonomialBasis::MonomialBasis(int nvars, int degree) : nvars_(nvars), degree_(degree) {
  Monomial cur(nvars);
  enumerate(nvars, degree, 0, cur, monomials_);
  std::sort(monomials_.begin(), monomials_.end(), GrevlexGreater{});
  std::size_t cap = 4;
  while (cap < 2 * monomials_.size()) cap <<= 1;
  mask_ = cap - 1;
  table_.assign(cap, 0);
  for (std::size_t i = 0; i < monomials_.size(); ++i) {
    std::size_t slot = monomials_[i].hash() & mask_;
    while (table_[slot]) slot = (slot + 1) & mask_;
    table_[slot] = static_cast<std::uint32_t>(i + 1);
  }
}

const MonomialBasis& MonomialBasis::get(int nvars, int degree) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<MonomialBasis>> cache;
  if (nvars <= 0 || nvars > kMaxVars || degree < 0)
    throw Error(ErrorCode::PreconditionFailed, "bad monomial basis request");
  std::lock_guard lock(mu);
  auto& slot = cache[{nvars, degree}];
  if (!slot) slot.reset(new MonomialBasis(nvars, degree));
  return *slot;
}

std::size_t MonomialBasis::index_of(const Monomial& m) const {
  std::size_t slot = m.hash() & mask_;
  while (true) {
    const auto v = table_[slot];
    if (!v) break;
    if (monomials_[v - 1] == m) return v - 1;
    slot = (slot + 1) & mask_;
  }
  throw Error(ErrorCode::PreconditionFailed, "monomial not in basis");
}

std::vector<Monomial> monomials_of_degree(int nvars, int degree) {
  return MonomialBasis::get(nvars, degree).monomials();
}

std::vector<std::string> default_variable_names(int nvars) {
  if (nvars <= 3) {
    std::vector<std::string> v{"x", "y", "z"};
    v.resize(nvars);
    return v;
  }
  std::vector<std::string> v;
  for (int i = 0; i < nvars; ++i) v.push_back("x" + std::to_string(i + 1));
  return v;
}

// ---------------------------------------------------------------- Polynomial

Polynomial::Polynomial(Field field, int nvars) : field_(field), nvars_(nvars) {
  if (nvars <= 0 || nvars > kMaxVars)
    throw Error(ErrorCode::PreconditionFailed, "number of variables must be in 1..8");
}

Polynomial Polynomial::constant(const Field& field, int nvars, const FieldElement& c) {
  Polynomial p(field, nvars);
  p.add_term(Monomial(nvars), c);
  return p;
}

Polynomial Polynomial::variable(const Field& field, int nvars, int i) {
  return term(field, Monomial::variable(nvars, i), field.one());
}

Polynomial Polynomial::term(const Field& field, const Monomial& m, const FieldElement& c) {
  Polynomial p(field, m.nvars);
  p.add_term(m, c);
  return p;
}

Polynomial Polynomial::from_coefficients(const Field& field, int nvars, int degree,
                                         std::span<const FieldElement> coeffs) {
  const auto& basis = MonomialBasis::get(nvars, degree);
  if (coeffs.size() != basis.size())
    throw Error(ErrorCode::PreconditionFailed, "coefficient vector has wrong length");
  Polynomial p(field, nvars);
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (!field.is_zero(coeffs[i])) p.terms_.emplace(basis[i], coeffs[i]);
  return p;
}

Polynomial Polynomial::random_form(const Field& field, int nvars, int degree, Rng& rng) {
  const auto& basis = MonomialBasis::get(nvars, degree);
  Polynomial p(field, nvars);
  for (const auto& m : basis.monomials()) p.add_term(m, field.random(rng));
  return p;
}

std::optional<int> Polynomial::homogeneous_degree() const {
  if (terms_.empty()) return std::nullopt;
  const auto d = terms_.begin()->first.degree;
  for (const auto& [m, c] : terms_)
    if (m.degree != d) return std::nullopt;
  return static_cast<int>(d);
}

int Polynomial::total_degree() const {
  return terms_.empty() ? -1 : static_cast<int>(terms_.begin()->first.degree);
}

FieldElement Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? field_.zero() : it->second;
}

void Polynomial::add_term(const Monomial& m, const FieldElement& c) {
  if (m.nvars != nvars_) throw Error(ErrorCode::PreconditionFailed, "monomial has wrong arity");
  field_.check(c);
  if (field_.is_zero(c)) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second = field_.add(it->second, c);
    if (field_.is_zero(it->second)) terms_.erase(it);
  }
}

void Polynomial::require_same_ring(const Polynomial& other) const {
  if (!(field_ == other.field_))
    throw Error(ErrorCode::FieldMismatch, field_.name() + " vs " + other.field_.name());
  if (nvars_ != other.nvars_)
    throw Error(ErrorCode::PreconditionFailed, "polynomials in different rings");
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  require_same_ring(other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  require_same_ring(other);
  for (const auto& [m, c] : other.terms_) add_term(m, field_.neg(c));
  return *this;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  Polynomial r = *this;
  r += other;
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  Polynomial r = *this;
  r -= other;
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(field_, nvars_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, field_.neg(c));
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  require_same_ring(other);
  Polynomial r(field_, nvars_);
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : other.terms_) r.add_term(m1 * m2, field_.mul(c1, c2));
  return r;
}

Polynomial Polynomial::scaled(const FieldElement& c) const {
  Polynomial r(field_, nvars_);
  if (field_.is_zero(c)) return r;
  for (const auto& [m, a] : terms_) r.terms_.emplace(m, field_.mul(a, c));
  return r;
}

Polynomial Polynomial::times_monomial(const Monomial& mono) const {
  Polynomial r(field_, nvars_);
  for (const auto& [m, a] : terms_) r.terms_.emplace(m * mono, a);
  return r;
}

Polynomial Polynomial::pow(unsigned n) const {
  Polynomial result = constant(field_, nvars_, field_.one());
  Polynomial base = *this;
  while (n) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return result;
}

FieldElement Polynomial::evaluate(std::span<const FieldElement> point) const {
  if (point.size() != static_cast<std::size_t>(nvars_))
    throw Error(ErrorCode::PreconditionFailed, "point has wrong dimension");
  FieldElement acc = field_.zero();
  for (const auto& [m, c] : terms_) {
    FieldElement t = c;
    for (int i = 0; i < nvars_; ++i)
      if (m.exps[i]) t = field_.mul(t, field_.pow(point[i], m.exps[i]));
    acc = field_.add(acc, t);
  }
  return acc;
}

Polynomial Polynomial::derivative(int var) const {
  Polynomial r(field_, nvars_);
  for (const auto& [m, c] : terms_) {
    const int e = m.exps[var];
    if (e == 0) continue;
    Monomial d = m;
    d.set(var, e - 1);
    r.add_term(d, field_.mul(c, field_.from_int(e)));
  }
  return r;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const {
  if (images.size() != static_cast<std::size_t>(nvars_))
    throw Error(ErrorCode::PreconditionFailed, "substitution needs one image per variable");
  const Field& f = images.front().field();
  const int n = images.front().nvars();
  Polynomial r(f, n);
  std::vector<std::vector<Polynomial>> powers(nvars_);
  for (const auto& [m, c] : terms_) {
    Polynomial t = constant(f, n, c);
    for (int i = 0; i < nvars_; ++i) {
      const int e = m.exps[i];
      if (!e) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(constant(f, n, f.one()));
      while (static_cast<int>(pw.size()) <= e) pw.push_back(pw.back() * images[i]);
      t = t * pw[e];
    }
    r += t;
  }
  return r;
}

Polynomial Polynomial::change_field(const Field& target) const {
  if (target.characteristic() != field_.characteristic() || field_.degree() != 1)
    throw Error(ErrorCode::FieldMismatch, "cannot embed " + field_.name() + " into " + target.name());
  Polynomial r(target, nvars_);
  for (const auto& [m, c] : terms_) {
    if (!field_.is_finite()) {
      r.terms_.emplace(m, c);
    } else {
      r.terms_.emplace(m, target.from_int(c.residue().c[0]));
    }
  }
  return r;
}

std::vector<FieldElement> Polynomial::coefficients_in_degree(int degree) const {
  const auto& basis = MonomialBasis::get(nvars_, degree);
  std::vector<FieldElement> out(basis.size(), field_.zero());
  for (const auto& [m, c] : terms_)
    if (static_cast<int>(m.degree) == degree) out[basis.index_of(m)] = c;
  return out;
}

namespace {

std::string monomial_string(const Monomial& m, const std::vector<std::string>& names) {
  std::string out;
  for (int i = 0; i < m.nvars; ++i) {
    if (!m.exps[i]) continue;
    if (!out.empty()) out += "*";
    out += names[i];
    if (m.exps[i] > 1) out += "^" + std::to_string(m.exps[i]);
  }
  return out;
}

std::string terms_string(const Field& field, const Polynomial::TermMap& terms,
                         const std::vector<std::string>& names) {
  if (terms.empty()) return "0";
  std::string out;
  const bool ext = field.kind() == FieldKind::Extension;
  for (const auto& [m, c] : terms) {
    std::string coeff = field.to_string(c);
    bool negative = false;
    if (!field.is_finite() && coeff.front() == '-') {
      negative = true;
      coeff.erase(0, 1);
    }
    if (ext && coeff.find_first_of("+t") != std::string::npos && coeff != "1") {
      coeff = "(" + coeff + ")";
    }
    const std::string mono = monomial_string(m, names);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (mono.empty()) {
      out += coeff;
    } else if (coeff == "1") {
      out += mono;
    } else {
      out += coeff + "*" + mono;
    }
  }
  return out;
}

}  // namespace

std::string Polynomial::to_string(const std::vector<std::string>& names) const {
  return terms_string(field_, terms_, names.empty() ? default_variable_names(nvars_) : names);
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (!(a.field_ == b.field_) || a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size())
    return false;
  auto it = b.terms_.begin();
  for (const auto& [m, c] : a.terms_) {
    if (!(it->first == m) || !(it->second == c)) return false;
    ++it;
  }
  return true;
}

// ------------------------------------------------------------------ DualForm

DualForm::DualForm(Field field, int nvars, int degree)
    : field_(field), nvars_(nvars), degree_(degree) {
  if (nvars <= 0 || nvars > kMaxVars || degree < 0)
    throw Error(ErrorCode::PreconditionFailed, "bad dual form shape");
}

DualForm DualForm::from_coefficients(const Field& field, int nvars, int degree,
                                     std::span<const FieldElement> coeffs) {
  const auto& basis = MonomialBasis::get(nvars, degree);
  if (coeffs.size() != basis.size())
    throw Error(ErrorCode::PreconditionFailed, "coefficient vector has wrong length");
  DualForm f(field, nvars, degree);
  for (std::size_t i = 0; i < coeffs.size(); ++i) f.add_term(basis[i], coeffs[i]);
  return f;
}

DualForm DualForm::random(const Field& field, int nvars, int degree, Rng& rng) {
  DualForm f(field, nvars, degree);
  for (const auto& m : MonomialBasis::get(nvars, degree).monomials())
    f.add_term(m, field.random(rng));
  return f;
}

DualForm DualForm::divided_power(const Field& field, std::span<const FieldElement> linear,
                                 int degree) {
  const int n = static_cast<int>(linear.size());
  DualForm f(field, n, degree);
  for (const auto& m : MonomialBasis::get(n, degree).monomials()) {
    FieldElement c = field.one();
    for (int i = 0; i < n; ++i) c = field.mul(c, field.pow(linear[i], m.exps[i]));
    f.add_term(m, c);
  }
  return f;
}

void DualForm::add_term(const Monomial& m, const FieldElement& c) {
  if (m.nvars != nvars_ || static_cast<int>(m.degree) != degree_)
    throw Error(ErrorCode::PreconditionFailed, "dual monomial has wrong shape");
  field_.check(c);
  if (field_.is_zero(c)) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second = field_.add(it->second, c);
    if (field_.is_zero(it->second)) terms_.erase(it);
  }
}

FieldElement DualForm::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? field_.zero() : it->second;
}

std::vector<FieldElement> DualForm::coefficients() const {
  const auto& basis = MonomialBasis::get(nvars_, degree_);
  std::vector<FieldElement> out(basis.size(), field_.zero());
  for (const auto& [m, c] : terms_) out[basis.index_of(m)] = c;
  return out;
}

DualForm DualForm::operator+(const DualForm& other) const {
  if (!(field_ == other.field_) || nvars_ != other.nvars_ || degree_ != other.degree_)
    throw Error(ErrorCode::FieldMismatch, "dual forms live in different spaces");
  DualForm r = *this;
  for (const auto& [m, c] : other.terms_) r.add_term(m, c);
  return r;
}

DualForm DualForm::scaled(const FieldElement& c) const {
  DualForm r(field_, nvars_, degree_);
  for (const auto& [m, a] : terms_) r.add_term(m, field_.mul(a, c));
  return r;
}

Polynomial DualForm::to_differential_polynomial() const {
  Polynomial p(field_, nvars_);
  for (const auto& [m, c] : terms_) {
    FieldElement fact = field_.one();
    for (int i = 0; i < nvars_; ++i)
      for (int j = 2; j <= m.exps[i]; ++j) fact = field_.mul(fact, field_.from_int(j));
    p.add_term(m, field_.div(c, fact));
  }
  return p;
}

Polynomial DualForm::as_polynomial() const {
  Polynomial p(field_, nvars_);
  for (const auto& [m, c] : terms_) p.add_term(m, c);
  return p;
}

std::string DualForm::to_string(const std::vector<std::string>& names) const {
  std::vector<std::string> upper = names.empty() ? default_variable_names(nvars_) : names;
  for (auto& n : upper)
    for (auto& ch : n) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  return terms_string(field_, terms_, upper);
}

bool operator==(const DualForm& a, const DualForm& b) {
  if (!(a.field_ == b.field_) || a.nvars_ != b.nvars_ || a.degree_ != b.degree_) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  auto it = b.terms_.begin();
  for (const auto& [m, c] : a.terms_) {
    if (!(it->first == m) || !(it->second == c)) return false;
    ++it;
  }
  return true;
}

DualForm contract(const Polynomial& g, const DualForm& form) {
  if (!(g.field() == form.field()))
    throw Error(ErrorCode::FieldMismatch, "contraction across fields");
  if (g.nvars() != form.nvars())
    throw Error(ErrorCode::PreconditionFailed, "contraction across rings");
  const auto d = g.homogeneous_degree();
  if (!d) {
    if (g.is_zero()) return DualForm(form.field(), form.nvars(), form.degree());
    throw Error(ErrorCode::PreconditionFailed, "contraction needs a homogeneous form");
  }
  if (*d > form.degree())
    throw Error(ErrorCode::DegreeTooLarge, "contracting degree " + std::to_string(*d) +
                                               " into degree " + std::to_string(form.degree()));
  const Field& field = form.field();
  DualForm out(field, form.nvars(), form.degree() - *d);
  for (const auto& [a, ca] : g.terms())
    for (const auto& [A, cA] : form.terms())
      if (a.divides(A)) out.add_term(a.quotient_of(A), field.mul(ca, cA));
  return out;
}

Polynomial polynomial_determinant(const std::vector<std::vector<Polynomial>>& m) {
  const std::size_t n = m.size();
  if (n == 0) throw Error(ErrorCode::PreconditionFailed, "empty determinant");
  if (n == 1) return m[0][0];
  if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  const Field& field = m[0][0].field();
  Polynomial acc(field, m[0][0].nvars());
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<Polynomial>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Polynomial> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(std::move(row));
    }
    Polynomial t = m[0][j] * polynomial_determinant(minor);
    if (j % 2) acc -= t; else acc += t;
  }
  return acc;
}

Polynomial hessian_det(const Polynomial& f) {
  const int n = f.nvars();
  std::vector<Polynomial> first;
  for (int i = 0; i < n; ++i) first.push_back(f.derivative(i));
  std::vector<std::vector<Polynomial>> h(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) h[i].push_back(first[i].derivative(j));
  return polynomial_determinant(h);
}

// ------------------------------------------------------------------- parsing

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, const Field& field, const std::vector<std::string>& names)
      : s_(text), field_(field), names_(names), n_(static_cast<int>(names.size())) {}

  Polynomial parse() {
    Polynomial acc(field_, n_);
    skip();
    bool first = true;
    while (true) {
      skip();
      bool negative = false;
      if (peek() == '+' || peek() == '-') {
        negative = peek() == '-';
        ++pos_;
      } else if (!first) {
        break;
      }
      Polynomial t = term();
      if (negative) acc -= t; else acc += t;
      first = false;
      skip();
      if (pos_ >= s_.size()) break;
    }
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return acc;
  }

 private:
  std::string_view s_;
  const Field& field_;
  const std::vector<std::string>& names_;
  int n_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorCode::ParseError, msg + " at column " + std::to_string(pos_ + 1) +
                                           " in '" + std::string(s_) + "'");
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  std::int64_t integer() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return std::stoll(std::string(s_.substr(start, pos_ - start)));
  }

  Polynomial term() {
    Polynomial acc = Polynomial::constant(field_, n_, field_.one());
    while (true) {
      skip();
      acc = acc * factor();
      skip();
      if (peek() != '*') break;
      ++pos_;
    }
    return acc;
  }

  Polynomial factor() {
    skip();
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const auto start = pos_;
      integer();
      if (peek() == '/') {
        ++pos_;
        integer();
      }
      const auto text = s_.substr(start, pos_ - start);
      return Polynomial::constant(field_, n_, field_.parse_element(text));
    }
    if (c == '(') {
      ++pos_;
      const auto start = pos_;
      int depth = 1;
      while (pos_ < s_.size() && depth) {
        if (s_[pos_] == '(') ++depth;
        if (s_[pos_] == ')') --depth;
        ++pos_;
      }
      if (depth) fail("unbalanced parenthesis");
      const auto inner = s_.substr(start, pos_ - start - 1);
      // Either a scalar or a nested polynomial expression.
      Polynomial p = PolyParser(inner, field_, names_).parse();
      return power_of(p);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const auto start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      const std::string name(s_.substr(start, pos_ - start));
      for (int i = 0; i < n_; ++i)
        if (names_[i] == name) return power_of(Polynomial::variable(field_, n_, i));
      if (name == "t" && field_.kind() == FieldKind::Extension)
        return power_of(Polynomial::constant(field_, n_, field_.generator()));
      pos_ = start;
      throw Error(ErrorCode::UnknownVariable,
                  "unknown variable '" + name + "' at column " + std::to_string(start + 1));
    }
    fail("expected a factor");
  }

  Polynomial power_of(const Polynomial& base) {
    skip();
    if (peek() != '^') return base;
    ++pos_;
    skip();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("malformed exponent");
    const auto e = integer();
    if (e > static_cast<std::int64_t>(kMaxExponent)) fail("exponent too large");
    return base.pow(static_cast<unsigned>(e));
  }
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const Field& field,
                            const std::vector<std::string>& names) {
  if (names.empty() || names.size() > static_cast<std::size_t>(kMaxVars))
    throw Error(ErrorCode::PreconditionFailed, "need 1..8 variable names");
  return PolyParser(text, field, names).parse();
}

}  // namespace artin
