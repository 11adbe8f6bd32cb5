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


#include "artin/gorenstein.hpp"

#include <sstream>

#include "artin/error.hpp"
#include "artin/lefschetz.hpp"

namespace artin {

// ---------------------------------------------------------------------------
// Skew matrices

SkewPolyMatrix::SkewPolyMatrix(Field field, int nvars, int size)
    : field_(std::move(field)), nvars_(nvars), size_(size) {
  if (size < 0) throw Error(ErrorCode::PreconditionFailed, "negative matrix size");
  entries_.assign(static_cast<std::size_t>(size) * size, Polynomial(field_, nvars_));
}

void SkewPolyMatrix::set(int i, int j, const Polynomial& p) {
  if (i < 0 || j < 0 || i >= size_ || j >= size_) {
    throw Error(ErrorCode::PreconditionFailed, "matrix index out of range");
  }
  if (i == j) {
    if (!p.is_zero()) throw Error(ErrorCode::PreconditionFailed, "diagonal must be zero");
    return;
  }
  if (!p.is_zero() && !p.homogeneous_degree()) {
    throw Error(ErrorCode::InhomogeneousPfaffian, "matrix entries must be forms");
  }
  entries_[i * size_ + j] = p;
  entries_[j * size_ + i] = -p;
}

SkewPolyMatrix SkewPolyMatrix::be_form(const std::array<Polynomial, 6>& q,
                                       const std::array<Polynomial, 4>& l) {
  SkewPolyMatrix m(q[0].field(), q[0].nvars(), 5);
  m.set(0, 1, q[0]);
  m.set(0, 2, q[1]);
  m.set(1, 2, q[2]);
  m.set(0, 3, q[3]);
  m.set(1, 3, q[4]);
  m.set(2, 3, q[5]);
  for (int i = 0; i < 4; ++i) m.set(i, 4, l[i]);
  return m;
}

SkewPolyMatrix SkewPolyMatrix::random_be(const Field& field, Rng& rng) {
  std::array<Polynomial, 6> q;
  std::array<Polynomial, 4> l;
  for (auto& p : q) p = Polynomial::random_form(field, 3, 2, rng);
  for (auto& p : l) p = Polynomial::random_form(field, 3, 1, rng);
  return be_form(q, l);
}

SkewPolyMatrix SkewPolyMatrix::principal(const std::vector<int>& keep) const {
  SkewPolyMatrix out(field_, nvars_, static_cast<int>(keep.size()));
  for (std::size_t a = 0; a < keep.size(); ++a)
    for (std::size_t b = a + 1; b < keep.size(); ++b)
      out.set(static_cast<int>(a), static_cast<int>(b), at(keep[a], keep[b]));
  return out;
}

SkewPolyMatrix SkewPolyMatrix::without(int index) const {
  std::vector<int> keep;
  for (int i = 0; i < size_; ++i)
    if (i != index) keep.push_back(i);
  return principal(keep);
}

std::string SkewPolyMatrix::to_text(const std::vector<std::string>& names) const {
  std::ostringstream os;
  os << "skew " << size_ << "\n";
  for (int i = 0; i < size_; ++i)
    for (int j = i + 1; j < size_; ++j)
      if (!at(i, j).is_zero())
        os << "entry " << i + 1 << " " << j + 1 << " " << at(i, j).to_string(names) << "\n";
  return os.str();
}

std::string SkewPolyMatrix::canonical(const std::vector<std::string>& names) const {
  std::ostringstream os;
  os << "[";
  bool first = true;
  for (int i = 0; i < size_; ++i) {
    for (int j = i + 1; j < size_; ++j) {
      os << (first ? "" : "; ") << i + 1 << "," << j + 1 << ": " << at(i, j).to_string(names);
      first = false;
    }
  }
  os << "]";
  return os.str();
}

SkewPolyMatrix parse_skew_matrix(std::string_view text, const Field& field,
                                 const std::vector<std::string>& names) {
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  SkewPolyMatrix m;
  bool have_header = false;
  auto fail = [&](const std::string& msg) {
    throw Error(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key)) continue;
    if (key == "field" || key == "vars") continue;  // read by the caller
    if (key == "skew") {
      int n = 0;
      if (have_header) fail("duplicate skew header");
      if (!(ls >> n) || n < 1 || n > 15) fail("expected a matrix size after 'skew'");
      m = SkewPolyMatrix(field, static_cast<int>(names.size()), n);
      have_header = true;
    } else if (key == "entry") {
      if (!have_header) fail("'entry' before 'skew'");
      int i = 0, j = 0;
      if (!(ls >> i >> j)) fail("expected 'entry i j polynomial'");
      if (i < 1 || j <= i || j > m.size()) fail("entry indices must satisfy 1 <= i < j <= size");
      std::string rest;
      std::getline(ls, rest);
      try {
        m.set(i - 1, j - 1, parse_polynomial(rest, field, names));
      } catch (const Error& e) {
        if (e.code() == ErrorCode::ParseError || e.code() == ErrorCode::UnknownVariable) {
          throw Error(e.code(), "line " + std::to_string(lineno) + ": " + e.what());
        }
        throw;
      }
    } else {
      fail("unknown keyword '" + key + "'");
    }
  }
  if (!have_header) throw Error(ErrorCode::ParseError, "missing 'skew <size>' header");
  return m;
}

Polynomial pfaffian(const SkewPolyMatrix& m) {
  const int n = m.size();
  if (n % 2 != 0) throw Error(ErrorCode::PreconditionFailed, "pfaffian of odd-size matrix");
  if (n == 0) return Polynomial::constant(m.field(), m.nvars(), m.field().one());
  if (n == 2) return m.at(0, 1);
  Polynomial out(m.field(), m.nvars());
  for (int j = 1; j < n; ++j) {
    if (m.at(0, j).is_zero()) continue;
    std::vector<int> keep;
    for (int k = 1; k < n; ++k)
      if (k != j) keep.push_back(k);
    const Polynomial term = m.at(0, j) * pfaffian(m.principal(keep));
    if (j % 2 == 1) {
      out += term;
    } else {
      out -= term;
    }
  }
  return out;
}

std::vector<Polynomial> submaximal_pfaffians(const SkewPolyMatrix& m) {
  std::vector<Polynomial> out;
  for (int i = 0; i < m.size(); ++i) {
    Polynomial p = pfaffian(m.without(i));
    out.push_back(i % 2 == 0 ? p : -p);
  }
  return out;
}

GradedIdeal pfaffian_ideal(const SkewPolyMatrix& m) {
  if (m.size() != 5 && m.size() != 7) {
    throw Error(ErrorCode::PreconditionFailed, "pfaffian ideals need a 5x5 or 7x7 matrix");
  }
  auto gens = submaximal_pfaffians(m);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (!gens[i].is_zero() && !gens[i].homogeneous_degree()) {
      throw Error(ErrorCode::InhomogeneousPfaffian,
                  "pfaffian " + std::to_string(i + 1) + " is not homogeneous");
    }
  }
  return GradedIdeal(m.field(), m.nvars(), std::move(gens));
}

// ---------------------------------------------------------------------------
// Inverse systems

ExactMatrix catalecticant(const DualForm& form, int d) {
  const int e = form.degree();
  const Field& field = form.field();
  const auto& src = MonomialBasis::get(form.nvars(), d);
  if (d > e) return ExactMatrix(field, 0, src.size());
  const auto& dst = MonomialBasis::get(form.nvars(), e - d);
  ExactMatrix m(field, dst.size(), src.size());
  for (const auto& [mono, c] : form.terms()) {
    for (std::size_t k = 0; k < src.size(); ++k) {
      if (src[k].divides(mono)) m.at(dst.index_of(src[k].quotient_of(mono)), k) = c;
    }
  }
  return m;
}

namespace {

ExactMatrix annihilator_piece(const DualForm& form, int d) {
  const Field& field = form.field();
  const auto& src = MonomialBasis::get(form.nvars(), d);
  if (d > form.degree()) return ExactMatrix::identity(field, src.size());
  return ExactMatrix::from_rows(field, src.size(), kernel_basis(catalecticant(form, d)));
}

}  // namespace

GradedIdeal annihilator(const DualForm& form, int max_d) {
  if (form.is_zero()) throw Error(ErrorCode::PreconditionFailed, "annihilator of zero form");
  if (max_d < 0) max_d = form.degree() + 1;
  std::vector<ExactMatrix> spans;
  for (int d = 0; d <= max_d; ++d) spans.push_back(annihilator_piece(form, d));
  auto ideal = GradedIdeal::from_components(form.field(), form.nvars(), spans);
  ideal.set_inverse_system({form});
  return ideal;
}

GradedIdeal annihilator(const std::vector<DualForm>& forms) {
  if (forms.empty()) throw Error(ErrorCode::PreconditionFailed, "no dual forms");
  int e = 0;
  for (const auto& f : forms) e = std::max(e, f.degree());
  std::vector<ExactMatrix> spans;
  for (int d = 0; d <= e + 1; ++d) {
    ExactMatrix acc = annihilator_piece(forms[0], d);
    for (std::size_t k = 1; k < forms.size(); ++k) {
      acc = row_space_intersection(acc, annihilator_piece(forms[k], d));
    }
    spans.push_back(acc);
  }
  auto ideal = GradedIdeal::from_components(forms[0].field(), forms[0].nvars(), spans);
  ideal.set_inverse_system(forms);
  return ideal;
}

HVector compressed_hvector(int e, int type, int nvars) {
  HVector h;
  for (int i = 0; i <= e; ++i) {
    const std::size_t a = MonomialBasis::get(nvars, i).size();
    const std::size_t b = type * MonomialBasis::get(nvars, e - i).size();
    h.values.push_back(std::min(a, b));
  }
  return h;
}

CompressedSample compressed_random(int e, const Field& field, std::uint64_t seed,
                                   int max_tries) {
  if (e < 1) throw Error(ErrorCode::PreconditionFailed, "socle degree must be >= 1");
  const HVector target = compressed_hvector(e, 1);
  HVector last;
  for (int t = 0; t < max_tries; ++t) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(t)));
    DualForm form = DualForm::random(field, 3, e, rng);
    if (form.is_zero()) continue;
    GradedIdeal ideal = annihilator(form);
    last = hvector(ideal);
    if (last == target) return {std::move(form), std::move(ideal), t + 1};
  }
  std::ostringstream os;
  os << "no compressed form after " << max_tries << " tries; last h-vector (";
  for (std::size_t i = 0; i < last.values.size(); ++i) os << (i ? "," : "") << last.values[i];
  os << ")";
  throw Error(ErrorCode::NotCompressedAfterRetries, os.str());
}

CompressResult compress_toward(const DualForm& form, std::uint64_t seed, int max_tries) {
  const Field& field = form.field();
  const int e = form.degree();
  const GradedIdeal base = annihilator(form);
  const HVector h = hvector(base);
  const HVector target = compressed_hvector(e, 1, form.nvars());
  const int mid = e / 2;
  CompressResult result;
  result.s = static_cast<int>(MonomialBasis::get(form.nvars(), mid).size() - h.at(mid));
  if (result.s <= 0 || h == target) {
    result.s = std::max(result.s, 0);
    result.form = form;
    result.hvector = h;
    return result;
  }
  HVector last;
  for (int t = 0; t < max_tries; ++t) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(t)));
    DualForm g = form;
    for (int i = 0; i < result.s; ++i) {
      const LinearForm l = LinearForm::random(field, form.nvars(), rng);
      g = g + DualForm::divided_power(field, l.coeffs, e);
    }
    if (g.is_zero()) continue;
    const GradedIdeal ideal = annihilator(g);
    last = hvector(ideal);
    if (!(last == target)) continue;
    result.form = g;
    result.tries = t + 1;
    result.hvector = last;
    const LinearForm l = LinearForm::random(field, form.nvars(), rng);
    const MultiplicationTables old_t(base, e);
    const MultiplicationTables new_t(ideal, e);
    for (int i = 0; i < e; ++i) {
      if (rank(new_t.times(l, i)) > rank(old_t.times(l, i)) + static_cast<std::size_t>(result.s)) {
        result.rank_inequality = false;
      }
    }
    return result;
  }
  throw Error(ErrorCode::NotCompressedAfterRetries,
              "perturbation did not reach the compressed h-vector in " +
                  std::to_string(max_tries) + " tries");
}

GorensteinCertificate certify_gorenstein(const GradedIdeal& ideal, int probe_bound) {
  GorensteinCertificate c;
  c.hvector = hvector(ideal, probe_bound);
  c.socle_degree = c.hvector.socle_degree();
  const auto& v = c.hvector.values;
  c.symmetric = std::equal(v.begin(), v.end(), v.rbegin());
  c.codim = c.hvector.at(1);
  std::size_t total = 0;
  for (int d = 0; d <= c.socle_degree; ++d) {
    c.socle_dims.push_back(socle_basis(ideal, d).rows());
    total += c.socle_dims.back();
  }
  c.socle_dim_one = total == 1 && c.socle_degree >= 0 && c.socle_dims.back() == 1;
  c.certified = c.symmetric && c.socle_dim_one;
  return c;
}

GradedIdeal truncate_algebra(const GradedIdeal& ideal, int e_new) {
  if (e_new < 0) throw Error(ErrorCode::PreconditionFailed, "negative truncation degree");
  std::vector<Polynomial> extra;
  for (const Monomial& m : MonomialBasis::get(ideal.nvars(), e_new + 1).monomials()) {
    extra.push_back(Polynomial::term(ideal.field(), m, ideal.field().one()));
  }
  return ideal.with_generators(extra);
}

LevelDecomposition level_decompose(const std::vector<DualForm>& forms) {
  if (forms.empty()) throw Error(ErrorCode::PreconditionFailed, "no dual forms");
  const int e = forms[0].degree();
  const Field& field = forms[0].field();
  const std::size_t width = MonomialBasis::get(forms[0].nvars(), e).size();
  std::vector<Vector> rows;
  for (const auto& f : forms) {
    if (f.degree() != e) {
      throw Error(ErrorCode::PreconditionFailed, "dual forms must share one degree");
    }
    rows.push_back(f.coefficients());
  }
  if (rank(ExactMatrix::from_rows(field, width, rows)) != forms.size()) {
    throw Error(ErrorCode::DependentDualForms, "dual forms are linearly dependent");
  }
  LevelDecomposition out;
  for (const auto& f : forms) out.factors.push_back(annihilator(f));
  out.level = annihilator(forms);
  out.hvector = hvector(out.level);
  out.socle_dim = socle_basis(out.level, e).rows();
  return out;
}

std::vector<DualForm> inverse_system_component(const GradedIdeal& ideal, int d) {
  const auto comp = ideal.component(d);
  std::vector<DualForm> out;
  if (comp->dim() == 0) {
    // Kernel of an empty matrix: the whole dual space.
    const std::size_t n = comp->ambient_dim();
    for (std::size_t k = 0; k < n; ++k) {
      Vector v(n, ideal.field().zero());
      v[k] = ideal.field().one();
      out.push_back(DualForm::from_coefficients(ideal.field(), ideal.nvars(), d, v));
    }
    return out;
  }
  for (const Vector& v : kernel_basis(comp->basis())) {
    out.push_back(DualForm::from_coefficients(ideal.field(), ideal.nvars(), d, v));
  }
  return out;
}

DualForm dual_generator(const GradedIdeal& ideal, int probe_bound) {
  const HVector h = hvector(ideal, probe_bound);
  const int e = h.socle_degree();
  if (e < 0 || h.at(e) != 1) {
    throw Error(ErrorCode::PreconditionFailed, "top degree of the quotient is not 1-dimensional");
  }
  return inverse_system_component(ideal, e).front();
}

GradedIdeal socle_quotient_sample(const GradedIdeal& ideal, std::uint64_t seed) {
  if (ideal.inverse_system().size() != 1) {
    throw Error(ErrorCode::RequiresInverseSystem,
                "ideal was not built from a single dual generator");
  }
  const DualForm& form = ideal.inverse_system().front();
  if (form.degree() < 1) {
    throw Error(ErrorCode::PreconditionFailed, "socle degree must be >= 1");
  }
  for (std::uint64_t t = 0; t < 64; ++t) {
    Rng rng(derive_seed(seed, t));
    const LinearForm l = LinearForm::random(ideal.field(), ideal.nvars(), rng);
    const DualForm g = contract(l.as_polynomial(ideal.field()), form);
    if (!g.is_zero()) return annihilator(g);
  }
  throw Error(ErrorCode::PreconditionFailed, "every sampled contraction vanished");
}

}  // namespace artin
