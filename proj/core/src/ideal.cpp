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


#include "artin/ideal.hpp"

#include <algorithm>

#include "artin/error.hpp"

namespace artin {

namespace {

void require_homogeneous(const Polynomial& f) {
  if (!f.is_zero() && !f.homogeneous_degree()) {
    throw Error(ErrorCode::InhomogeneousGenerator,
                "generator is not homogeneous: " + f.to_string());
  }
}

std::vector<std::size_t> complement(std::size_t n, const std::vector<std::size_t>& cols) {
  std::vector<std::size_t> out;
  std::size_t k = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (k < cols.size() && cols[k] == c) {
      ++k;
    } else {
      out.push_back(c);
    }
  }
  return out;
}

// Rows x_j * v for every row v of basis (degree d - 1) and every variable.
ExactMatrix shifted_rows(const Field& field, int nvars, int d, const ExactMatrix& basis) {
  const auto& src = MonomialBasis::get(nvars, d - 1);
  const auto& dst = MonomialBasis::get(nvars, d);
  ExactMatrix out(field, 0, dst.size());
  Vector row(dst.size(), field.zero());
  for (std::size_t r = 0; r < basis.rows(); ++r) {
    for (int j = 0; j < nvars; ++j) {
      std::fill(row.begin(), row.end(), field.zero());
      const Monomial xj = Monomial::variable(nvars, j);
      for (std::size_t c = 0; c < src.size(); ++c) {
        if (!field.is_zero(basis.at(r, c))) row[dst.index_of(src[c] * xj)] = basis.at(r, c);
      }
      out.append_row(row);
    }
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// DegreeComponent

DegreeComponent::DegreeComponent(const Field& field, int nvars, int degree,
                                 const ExactMatrix& rows)
    : nvars_(nvars), degree_(degree) {
  const std::size_t n = MonomialBasis::get(nvars, degree).size();
  if (rows.rows() == 0) {
    basis_ = ExactMatrix(field, 0, n);
  } else {
    if (rows.cols() != n) {
      throw Error(ErrorCode::PreconditionFailed, "component rows have the wrong width");
    }
    auto rr = rref(rows);
    basis_ = ExactMatrix(field, 0, n);
    for (std::size_t r = 0; r < rr.rank; ++r) basis_.append_row(rr.reduced.row(r));
    pivots_ = std::move(rr.pivot_cols);
  }
  standard_ = complement(n, pivots_);
}

Vector DegreeComponent::reduce(std::span<const FieldElement> v) const {
  const Field& f = field();
  Vector out;
  out.reserve(standard_.size());
  for (std::size_t c : standard_) out.push_back(v[c]);
  for (std::size_t r = 0; r < pivots_.size(); ++r) {
    const FieldElement& a = v[pivots_[r]];
    if (f.is_zero(a)) continue;
    const FieldElement na = f.neg(a);
    for (std::size_t k = 0; k < standard_.size(); ++k) {
      const FieldElement& b = basis_.at(r, standard_[k]);
      if (!f.is_zero(b)) out[k] = f.fma(out[k], na, b);
    }
  }
  return out;
}

Vector DegreeComponent::lift(std::span<const FieldElement> standard_coords) const {
  Vector out(ambient_dim(), field().zero());
  for (std::size_t k = 0; k < standard_.size(); ++k) out[standard_[k]] = standard_coords[k];
  return out;
}

bool DegreeComponent::contains(std::span<const FieldElement> v) const {
  const Vector r = reduce(v);
  return std::all_of(r.begin(), r.end(), [&](const FieldElement& a) { return field().is_zero(a); });
}

// ---------------------------------------------------------------------------
// GradedIdeal

GradedIdeal::GradedIdeal(Field field, int nvars, std::vector<Polynomial> generators)
    : field_(std::move(field)), nvars_(nvars) {
  for (auto& g : generators) {
    if (g.nvars() != nvars_) {
      throw Error(ErrorCode::FieldMismatch, "generator has the wrong number of variables");
    }
    if (g.field() != field_) throw Error(ErrorCode::FieldMismatch, "generator field differs");
    require_homogeneous(g);
    if (!g.is_zero()) generators_.push_back(std::move(g));
  }
}

GradedIdeal::GradedIdeal(const GradedIdeal& other)
    : field_(other.field_),
      nvars_(other.nvars_),
      generators_(other.generators_),
      inverse_system_(other.inverse_system_) {
  std::lock_guard lock(other.mu_);
  cache_ = other.cache_;
}

GradedIdeal::GradedIdeal(GradedIdeal&& other) noexcept
    : field_(std::move(other.field_)),
      nvars_(other.nvars_),
      generators_(std::move(other.generators_)),
      inverse_system_(std::move(other.inverse_system_)),
      cache_(std::move(other.cache_)) {}

GradedIdeal& GradedIdeal::operator=(const GradedIdeal& other) {
  if (this == &other) return *this;
  GradedIdeal copy(other);
  *this = std::move(copy);
  return *this;
}

GradedIdeal& GradedIdeal::operator=(GradedIdeal&& other) noexcept {
  if (this == &other) return *this;
  field_ = std::move(other.field_);
  nvars_ = other.nvars_;
  generators_ = std::move(other.generators_);
  inverse_system_ = std::move(other.inverse_system_);
  std::lock_guard lock(mu_);
  cache_ = std::move(other.cache_);
  return *this;
}

GradedIdeal GradedIdeal::from_components(const Field& field, int nvars,
                                         const std::vector<ExactMatrix>& spans) {
  GradedIdeal out(field, nvars, {});
  std::shared_ptr<const DegreeComponent> prev;
  for (int d = 0; d < static_cast<int>(spans.size()); ++d) {
    auto comp = std::make_shared<const DegreeComponent>(field, nvars, d, spans[d]);
    ExactMatrix known = d == 0 ? ExactMatrix(field, 0, 1)
                               : shifted_rows(field, nvars, d, prev->basis());
    DegreeComponent span_known(field, nvars, d, known);
    for (std::size_t r = 0; r < comp->dim(); ++r) {
      if (span_known.contains(comp->basis().row(r))) continue;
      out.generators_.push_back(
          Polynomial::from_coefficients(field, nvars, d, comp->basis().row(r)));
      known.append_row(comp->basis().row(r));
      span_known = DegreeComponent(field, nvars, d, known);
    }
    out.cache_[d] = comp;
    prev = comp;
  }
  return out;
}

std::shared_ptr<const DegreeComponent> GradedIdeal::component(int d) const {
  if (d < 0) throw Error(ErrorCode::PreconditionFailed, "negative degree");
  {
    std::lock_guard lock(mu_);
    auto it = cache_.find(d);
    if (it != cache_.end()) return it->second;
  }
  auto comp = compute_component(d);
  std::lock_guard lock(mu_);
  // First writer wins; both results are identical anyway.
  auto [it, inserted] = cache_.emplace(d, comp);
  return it->second;
}

std::shared_ptr<const DegreeComponent> GradedIdeal::compute_component(int d) const {
  const auto& basis = MonomialBasis::get(nvars_, d);
  ExactMatrix rows(field_, 0, basis.size());
  Vector row(basis.size(), field_.zero());
  for (const auto& g : generators_) {
    const int gd = *g.homogeneous_degree();
    if (gd > d) continue;
    for (const Monomial& m : MonomialBasis::get(nvars_, d - gd).monomials()) {
      std::fill(row.begin(), row.end(), field_.zero());
      for (const auto& [t, c] : g.terms()) row[basis.index_of(t * m)] = c;
      rows.append_row(row);
    }
  }
  return std::make_shared<const DegreeComponent>(field_, nvars_, d, rows);
}

GradedIdeal GradedIdeal::with_generators(const std::vector<Polynomial>& extra) const {
  std::vector<Polynomial> gens = generators_;
  gens.insert(gens.end(), extra.begin(), extra.end());
  return GradedIdeal(field_, nvars_, std::move(gens));
}

std::map<int, std::size_t> GradedIdeal::minimal_generator_counts(int max_degree) const {
  std::map<int, std::size_t> out;
  for (int d = 0; d <= max_degree; ++d) {
    auto comp = component(d);
    std::size_t below = 0;
    if (d > 0) below = rank(shifted_rows(field_, nvars_, d, component(d - 1)->basis()));
    if (comp->dim() > below) out[d] = comp->dim() - below;
  }
  return out;
}

// ---------------------------------------------------------------------------

std::size_t HVector::total() const {
  std::size_t s = 0;
  for (auto v : values) s += v;
  return s;
}

Vector product_coordinates(const Polynomial& f, const Monomial& m) {
  const int d = *f.homogeneous_degree() + static_cast<int>(m.degree);
  const auto& basis = MonomialBasis::get(f.nvars(), d);
  Vector out(basis.size(), f.field().zero());
  for (const auto& [t, c] : f.terms()) out[basis.index_of(t * m)] = c;
  return out;
}

ExactMatrix ideal_degree_basis(const GradedIdeal& ideal, int d) {
  return ideal.component(d)->basis();
}

std::vector<std::size_t> hilbert_function(const GradedIdeal& ideal, int max_d) {
  std::vector<std::size_t> out;
  for (int d = 0; d <= max_d; ++d) out.push_back(ideal.component(d)->quotient_dim());
  return out;
}

int is_artinian(const GradedIdeal& ideal, int probe_bound) {
  for (int d = 0; d <= probe_bound; ++d) {
    if (ideal.component(d)->quotient_dim() == 0) return d;
  }
  throw Error(ErrorCode::Inconclusive,
              "Hilbert function still positive at degree " + std::to_string(probe_bound));
}

HVector hvector(const GradedIdeal& ideal, int probe_bound) {
  int top = 0;
  try {
    top = is_artinian(ideal, probe_bound);
  } catch (const Error&) {
    throw Error(ErrorCode::NotArtinian, "quotient is not artinian up to degree " +
                                            std::to_string(probe_bound));
  }
  HVector h;
  for (int d = 0; d < top; ++d) h.values.push_back(ideal.component(d)->quotient_dim());
  return h;
}

std::size_t stabilized_length(const GradedIdeal& ideal, int cutoff) {
  const auto hf = hilbert_function(ideal, cutoff);
  for (std::size_t d = 0; d + 2 < hf.size(); ++d) {
    if (hf[d] == hf[d + 1] && hf[d] == hf[d + 2]) return hf[d];
  }
  throw Error(ErrorCode::NotStabilized,
              "Hilbert function did not stabilize by degree " + std::to_string(cutoff));
}

ExactMatrix multiplication_matrix(const DegreeComponent& source, const DegreeComponent& target,
                                  const Polynomial& f) {
  const Field& field = source.field();
  const auto& src = MonomialBasis::get(source.nvars(), source.degree());
  ExactMatrix m(field, target.quotient_dim(), source.quotient_dim());
  for (std::size_t k = 0; k < source.standard().size(); ++k) {
    const Vector col = target.reduce(product_coordinates(f, src[source.standard()[k]]));
    for (std::size_t r = 0; r < col.size(); ++r) m.at(r, k) = col[r];
  }
  return m;
}

ExactMatrix multiplication_matrix(const GradedIdeal& ideal, const Polynomial& f, int i) {
  const int m = *f.homogeneous_degree();
  return multiplication_matrix(*ideal.component(i), *ideal.component(i + m), f);
}

namespace {

// Kernel of g -> g*f mod [I]_{d+deg f} on S_d, as RREF rows over S_d.
ExactMatrix colon_rows(const GradedIdeal& ideal, const Polynomial& f, int d) {
  const Field& field = ideal.field();
  const auto& src = MonomialBasis::get(ideal.nvars(), d);
  const auto target = ideal.component(d + *f.homogeneous_degree());
  ExactMatrix m(field, target->quotient_dim(), src.size());
  for (std::size_t k = 0; k < src.size(); ++k) {
    const Vector col = target->reduce(product_coordinates(f, src[k]));
    for (std::size_t r = 0; r < col.size(); ++r) m.at(r, k) = col[r];
  }
  return row_basis(ExactMatrix::from_rows(field, src.size(), kernel_basis(m)));
}

}  // namespace

ExactMatrix colon_by_form(const GradedIdeal& ideal, const Polynomial& f, int d) {
  if (f.is_zero()) throw Error(ErrorCode::PreconditionFailed, "colon by the zero form");
  require_homogeneous(f);
  return colon_rows(ideal, f, d);
}

GradedIdeal colon_ideal(const GradedIdeal& ideal, const Polynomial& f, int max_d) {
  std::vector<ExactMatrix> spans;
  for (int d = 0; d <= max_d; ++d) spans.push_back(colon_by_form(ideal, f, d));
  return GradedIdeal::from_components(ideal.field(), ideal.nvars(), spans);
}

ExactMatrix intersect_ideals(std::span<const GradedIdeal> ideals, int d) {
  if (ideals.empty()) throw Error(ErrorCode::PreconditionFailed, "empty intersection");
  ExactMatrix acc = ideals[0].component(d)->basis();
  for (std::size_t k = 1; k < ideals.size(); ++k) {
    if (ideals[k].field() != ideals[0].field() || ideals[k].nvars() != ideals[0].nvars()) {
      throw Error(ErrorCode::FieldMismatch, "ideals live in different rings");
    }
    acc = row_space_intersection(acc, ideals[k].component(d)->basis());
  }
  return acc;
}

GradedIdeal intersection_ideal(std::span<const GradedIdeal> ideals, int max_d) {
  std::vector<ExactMatrix> spans;
  for (int d = 0; d <= max_d; ++d) spans.push_back(intersect_ideals(ideals, d));
  return GradedIdeal::from_components(ideals[0].field(), ideals[0].nvars(), spans);
}

namespace {

ExactMatrix saturation_rows(const GradedIdeal& ideal, int d, int power) {
  const Field& field = ideal.field();
  const int n = ideal.nvars();
  const auto& src = MonomialBasis::get(n, d);
  const auto& mult = MonomialBasis::get(n, power);
  const auto target = ideal.component(d + power);
  const std::size_t q = target->quotient_dim();
  ExactMatrix m(field, q * mult.size(), src.size());
  for (std::size_t k = 0; k < src.size(); ++k) {
    const auto& tb = MonomialBasis::get(n, d + power);
    for (std::size_t j = 0; j < mult.size(); ++j) {
      Vector v(tb.size(), field.zero());
      v[tb.index_of(src[k] * mult[j])] = field.one();
      const Vector red = target->reduce(v);
      for (std::size_t r = 0; r < q; ++r) m.at(j * q + r, k) = red[r];
    }
  }
  return row_basis(ExactMatrix::from_rows(field, src.size(), kernel_basis(m)));
}

}  // namespace

ExactMatrix saturation_degree_basis(const GradedIdeal& ideal, int d, int power_bound) {
  if (power_bound < 1) throw Error(ErrorCode::PreconditionFailed, "power_bound must be >= 1");
  ExactMatrix a = saturation_rows(ideal, d, power_bound);
  ExactMatrix b = saturation_rows(ideal, d, power_bound + 1);
  if (!(a == b)) {
    throw Error(ErrorCode::NotStabilized, "saturation in degree " + std::to_string(d) +
                                              " still grows past N=" +
                                              std::to_string(power_bound));
  }
  return a;
}

ExactMatrix socle_basis(const GradedIdeal& ideal, int d) {
  const Field& field = ideal.field();
  const int n = ideal.nvars();
  const auto source = ideal.component(d);
  const auto target = ideal.component(d + 1);
  const auto& src = MonomialBasis::get(n, d);
  const std::size_t q = target->quotient_dim();
  ExactMatrix m(field, q * n, source->quotient_dim());
  for (std::size_t k = 0; k < source->standard().size(); ++k) {
    for (int j = 0; j < n; ++j) {
      const Polynomial xj = Polynomial::variable(field, n, j);
      const Vector red = target->reduce(product_coordinates(xj, src[source->standard()[k]]));
      for (std::size_t r = 0; r < q; ++r) m.at(j * q + r, k) = red[r];
    }
  }
  ExactMatrix out(field, 0, src.size());
  for (const Vector& v : kernel_basis(m)) out.append_row(source->lift(v));
  return row_basis(out.empty() ? ExactMatrix(field, 0, src.size()) : out);
}

std::vector<std::vector<Polynomial>> syzygies_in_degree(const std::vector<Polynomial>& gens,
                                                        int d) {
  std::vector<std::vector<Polynomial>> out;
  if (gens.empty()) return out;
  const Field& field = gens[0].field();
  const int n = gens[0].nvars();
  const auto& target = MonomialBasis::get(n, d);
  struct Column {
    std::size_t gen;
    Monomial mono;
  };
  std::vector<Column> cols;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    require_homogeneous(gens[i]);
    if (gens[i].is_zero()) continue;
    const int gd = *gens[i].homogeneous_degree();
    if (gd > d) continue;
    for (const Monomial& m : MonomialBasis::get(n, d - gd).monomials()) cols.push_back({i, m});
  }
  ExactMatrix m(field, target.size(), cols.size());
  for (std::size_t k = 0; k < cols.size(); ++k) {
    for (const auto& [t, c] : gens[cols[k].gen].terms()) {
      m.at(target.index_of(t * cols[k].mono), k) = c;
    }
  }
  for (const Vector& v : kernel_basis(m)) {
    std::vector<Polynomial> rel(gens.size(), Polynomial(field, n));
    for (std::size_t k = 0; k < cols.size(); ++k) {
      if (!field.is_zero(v[k])) rel[cols[k].gen].add_term(cols[k].mono, v[k]);
    }
    out.push_back(std::move(rel));
  }
  return out;
}

std::uint64_t macaulay_bound(std::uint64_t a, int i) {
  if (a == 0 || i <= 0) return 0;
  std::uint64_t result = 0;
  std::uint64_t rest = a;
  for (int j = i; j >= 1 && rest > 0; --j) {
    std::uint64_t k = j;
    while (binomial(k + 1, j) <= rest) ++k;
    rest -= binomial(k, j);
    result += binomial(k + 1, j + 1);
  }
  return result;
}

bool is_o_sequence(std::span<const std::size_t> seq) {
  if (seq.empty()) return true;
  if (seq[0] != 1) return false;
  for (std::size_t i = 1; i + 1 < seq.size(); ++i) {
    if (seq[i + 1] > macaulay_bound(seq[i], static_cast<int>(i))) return false;
  }
  return true;
}

HVectorPredicates hvector_predicates(const HVector& h) {
  HVectorPredicates p;
  const auto& v = h.values;
  const int e = h.socle_degree();
  p.symmetric = true;
  p.flawless = true;
  for (int i = 0; i <= e; ++i) {
    if (v[i] != v[e - i]) p.symmetric = false;
    if (2 * i <= e && v[i] > v[e - i]) p.flawless = false;
  }
  std::size_t k = 0;
  while (k + 1 < v.size() && v[k] <= v[k + 1]) ++k;
  while (k + 1 < v.size() && v[k] >= v[k + 1]) ++k;
  p.unimodal = k + 1 >= v.size();
  std::vector<std::size_t> diff;
  bool nonneg = true;
  for (int i = 0; i <= e / 2; ++i) {
    const long long prev = i == 0 ? 0 : static_cast<long long>(v[i - 1]);
    const long long dv = static_cast<long long>(v[i]) - prev;
    if (dv < 0) nonneg = false;
    diff.push_back(dv < 0 ? 0 : static_cast<std::size_t>(dv));
  }
  p.differentiable_first_half = nonneg && is_o_sequence(diff);
  return p;
}

}  // namespace artin
