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

#include "artin/planegeom.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "artin/error.hpp"

namespace artin {

ProjPoint ProjPoint::normalized(const Field& field, Vector coords) {
  for (std::size_t i = coords.size(); i-- > 0;) {
    if (field.is_zero(coords[i])) continue;
    const FieldElement s = field.inv(coords[i]);
    for (auto& c : coords) c = field.mul(c, s);
    return ProjPoint{std::move(coords)};
  }
  throw Error(ErrorCode::PreconditionFailed, "the zero vector is not a projective point");
}

std::string ProjPoint::to_string(const Field& field) const {
  std::string out = "(";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) out += ":";
    out += field.to_string(coords[i]);
  }
  return out + ")";
}

std::size_t ProjPointHash::operator()(const ProjPoint& p) const {
  std::size_t h = 0x9E3779B97F4A7C15ULL;
  for (const auto& c : p.coords) h = (h ^ c.hash()) * 0x100000001B3ULL;
  return h;
}

std::vector<ProjPoint> enumerate_p2(const Field& field) {
  if (!field.is_finite()) throw Error(ErrorCode::PreconditionFailed, "P^2 scan needs a finite field");
  const std::uint64_t q = field.order();
  if (q > kMaxScanOrder) throw Error(ErrorCode::PreconditionFailed, "field too large to scan");
  std::vector<ProjPoint> out;
  out.reserve(q * q + q + 1);
  for (std::uint64_t a = 0; a < q; ++a)
    for (std::uint64_t b = 0; b < q; ++b)
      out.push_back({{field.from_code(a), field.from_code(b), field.one()}});
  for (std::uint64_t a = 0; a < q; ++a)
    out.push_back({{field.from_code(a), field.one(), field.zero()}});
  out.push_back({{field.one(), field.zero(), field.zero()}});
  return out;
}

namespace {

// Dense univariate polynomials, lowest coefficient first.
using UPoly = std::vector<FieldElement>;

void trim(const Field& f, UPoly& a) {
  while (!a.empty() && f.is_zero(a.back())) a.pop_back();
}

int deg(const UPoly& a) { return static_cast<int>(a.size()) - 1; }

UPoly usub(const Field& f, UPoly a, const UPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), f.zero());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = f.sub(a[i], b[i]);
  trim(f, a);
  return a;
}

UPoly uadd(const Field& f, UPoly a, const UPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), f.zero());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = f.add(a[i], b[i]);
  trim(f, a);
  return a;
}

UPoly umul(const Field& f, const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1, f.zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (f.is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
  }
  trim(f, r);
  return r;
}

// a = q b + r
std::pair<UPoly, UPoly> udivmod(const Field& f, UPoly a, const UPoly& b) {
  const FieldElement lead_inv = f.inv(b.back());
  UPoly q;
  if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, f.zero());
  while (!a.empty() && a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    const FieldElement c = f.mul(a.back(), lead_inv);
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = f.sub(a[shift + i], f.mul(c, b[i]));
    trim(f, a);
  }
  trim(f, q);
  return {q, a};
}

UPoly urem(const Field& f, const UPoly& a, const UPoly& b) { return udivmod(f, a, b).second; }

UPoly monic(const Field& f, UPoly a) {
  if (a.empty()) return a;
  const FieldElement s = f.inv(a.back());
  for (auto& c : a) c = f.mul(c, s);
  return a;
}

UPoly ugcd(const Field& f, UPoly a, UPoly b) {
  while (!b.empty()) {
    UPoly r = urem(f, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(f, a);
}

UPoly upowmod(const Field& f, UPoly base, std::uint64_t e, const UPoly& mod) {
  UPoly acc{f.one()};
  acc = urem(f, acc, mod);
  base = urem(f, base, mod);
  while (e) {
    if (e & 1) acc = urem(f, umul(f, acc, base), mod);
    e >>= 1;
    if (e) base = urem(f, umul(f, base, base), mod);
  }
  return acc;
}

void split_roots(const Field& f, const UPoly& h, Rng& rng, std::vector<FieldElement>& out) {
  if (deg(h) <= 0) return;
  if (deg(h) == 1) {
    out.push_back(f.neg(f.div(h[0], h[1])));
    return;
  }
  const std::uint64_t q = f.order();
  while (true) {
    const FieldElement delta = f.random(rng);
    UPoly t;
    if (f.characteristic() != 2) {
      t = upowmod(f, UPoly{delta, f.one()}, (q - 1) / 2, h);
      t = usub(f, t, UPoly{f.one()});
    } else {
      // absolute trace of delta * x
      UPoly term = urem(f, UPoly{f.zero(), delta}, h);
      t = term;
      for (int i = 1; i < f.degree(); ++i) {
        term = urem(f, umul(f, term, term), h);
        t = uadd(f, t, term);
      }
    }
    UPoly d = ugcd(f, h, t);
    if (deg(d) > 0 && deg(d) < deg(h)) {
      split_roots(f, d, rng, out);
      split_roots(f, udivmod(f, h, d).first, rng, out);
      return;
    }
  }
}

// Distinct roots of g in the field.
std::vector<FieldElement> uroots(const Field& f, UPoly g) {
  trim(f, g);
  std::vector<FieldElement> out;
  if (deg(g) <= 0) return out;
  g = monic(f, g);
  UPoly xq = upowmod(f, UPoly{f.zero(), f.one()}, f.order(), g);
  UPoly h = ugcd(f, g, usub(f, xq, UPoly{f.zero(), f.one()}));
  Rng rng(0x5EED);
  split_roots(f, h, rng, out);
  std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
    return f.code_of(a) < f.code_of(b);
  });
  return out;
}

// Coefficients in y of g(x, y, 1), each a polynomial in x.
std::vector<UPoly> y_coefficients(const Polynomial& g) {
  const Field& f = g.field();
  std::vector<UPoly> out;
  for (const auto& [m, c] : g.terms()) {
    const std::size_t ey = m[1], ex = m[0];
    if (out.size() <= ey) out.resize(ey + 1);
    if (out[ey].size() <= ex) out[ey].resize(ex + 1, f.zero());
    out[ey][ex] = f.add(out[ey][ex], c);
  }
  for (auto& a : out) trim(f, a);
  while (!out.empty() && out.back().empty()) out.pop_back();
  return out;
}

UPoly udet(const Field& f, const std::vector<std::vector<UPoly>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return UPoly{f.one()};
  if (n == 1) return m[0][0];
  UPoly acc;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].empty()) continue;
    std::vector<std::vector<UPoly>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<UPoly> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(std::move(row));
    }
    UPoly t = umul(f, m[0][j], udet(f, minor));
    acc = j % 2 ? usub(f, acc, t) : uadd(f, acc, t);
  }
  return acc;
}

// Res_y(g1, g2) as a polynomial in x (z = 1).
UPoly resultant_y(const Field& f, const std::vector<UPoly>& a, const std::vector<UPoly>& b) {
  const int m = static_cast<int>(a.size()) - 1, n = static_cast<int>(b.size()) - 1;
  const int size = m + n;
  std::vector<std::vector<UPoly>> syl(size, std::vector<UPoly>(size));
  for (int r = 0; r < n; ++r)
    for (int i = 0; i <= m; ++i) syl[r][r + m - i] = a[i];
  for (int r = 0; r < m; ++r)
    for (int i = 0; i <= n; ++i) syl[n + r][r + n - i] = b[i];
  return udet(f, syl);
}

UPoly evaluate_in_x(const Field& f, const std::vector<UPoly>& coeffs, const FieldElement& a) {
  UPoly out;
  for (const auto& c : coeffs) {
    FieldElement v = f.zero();
    for (std::size_t i = c.size(); i-- > 0;) v = f.add(f.mul(v, a), c[i]);
    out.push_back(v);
  }
  trim(f, out);
  return out;
}

// g(t, 1, 0) as a polynomial in t.
UPoly at_infinity(const Polynomial& g) {
  const Field& f = g.field();
  UPoly out;
  for (const auto& [m, c] : g.terms()) {
    if (m[2] != 0) continue;
    const std::size_t e = m[0];
    if (out.size() <= e) out.resize(e + 1, f.zero());
    out[e] = f.add(out[e], c);
  }
  trim(f, out);
  return out;
}

std::vector<ProjPoint> common_zeros(const Polynomial& g1, const Polynomial& g2) {
  const Field& f = g1.field();
  std::vector<ProjPoint> out;
  const auto a = y_coefficients(g1), b = y_coefficients(g2);
  const UPoly res = resultant_y(f, a, b);
  if (res.empty()) throw Error(ErrorCode::NotZeroDimensional, "resultant vanishes identically");
  for (const auto& x : uroots(f, res)) {
    UPoly ha = evaluate_in_x(f, a, x), hb = evaluate_in_x(f, b, x);
    if (ha.empty() && hb.empty())
      throw Error(ErrorCode::NotZeroDimensional, "the pencil contains a common line");
    for (const auto& y : uroots(f, ugcd(f, ha, hb))) out.push_back({{x, y, f.one()}});
  }
  UPoly ia = at_infinity(g1), ib = at_infinity(g2);
  if (ia.empty() && ib.empty())
    throw Error(ErrorCode::NotZeroDimensional, "the pencil contains the line z = 0");
  for (const auto& t : uroots(f, ugcd(f, ia, ib))) out.push_back({{t, f.one(), f.zero()}});
  const Vector e1{f.one(), f.zero(), f.zero()};
  if (f.is_zero(g1.evaluate(e1)) && f.is_zero(g2.evaluate(e1))) out.push_back({e1});
  return out;
}

int point_field_degree(const Field& f, const ProjPoint& p) {
  if (f.degree() == 1) return 1;
  for (int d = 1; d < f.degree(); ++d) {
    if (f.degree() % d) continue;
    std::uint64_t pd = 1;
    for (int i = 0; i < d; ++i) pd *= f.characteristic();
    bool fixed = true;
    for (const auto& c : p.coords) fixed = fixed && f.pow(c, pd) == c;
    if (fixed) return d;
  }
  return f.degree();
}

Vector cross(const Field& f, const Vector& a, const Vector& b) {
  return {f.sub(f.mul(a[1], b[2]), f.mul(a[2], b[1])), f.sub(f.mul(a[2], b[0]), f.mul(a[0], b[2])),
          f.sub(f.mul(a[0], b[1]), f.mul(a[1], b[0]))};
}

FieldElement dot(const Field& f, const Vector& a, const Vector& b) {
  FieldElement s = f.zero();
  for (std::size_t i = 0; i < a.size(); ++i) s = f.add(s, f.mul(a[i], b[i]));
  return s;
}

Vector coefficient_row(const Polynomial& p, int degree) { return p.coefficients_in_degree(degree); }

std::vector<Polynomial> rows_to_forms(const ExactMatrix& m, int nvars, int degree) {
  std::vector<Polynomial> out;
  for (std::size_t r = 0; r < m.rows(); ++r)
    out.push_back(Polynomial::from_coefficients(m.field(), nvars, degree, m.row(r)));
  return out;
}

}  // namespace

std::size_t local_length(const std::vector<Polynomial>& gens, const ProjPoint& point,
                         int max_order) {
  const Field& f = gens.front().field();
  int chart = 2;
  while (f.is_zero(point.coords[chart])) --chart;
  std::vector<int> others;
  for (int i = 0; i < 3; ++i)
    if (i != chart) others.push_back(i);
  std::vector<Polynomial> images(3);
  images[chart] = Polynomial::constant(f, 2, f.one());
  for (int k = 0; k < 2; ++k)
    images[others[k]] = Polynomial::variable(f, 2, k) +
                        Polynomial::constant(f, 2, point.coords[others[k]]);
  std::vector<Polynomial> local;
  for (const auto& g : gens) local.push_back(g.substitute(images));

  std::optional<std::size_t> prev;
  for (int order = 1; order <= max_order; ++order) {
    // monomials u^a v^b with a + b < order
    std::vector<Monomial> monos;
    for (int d = 0; d < order; ++d)
      for (const auto& m : monomials_of_degree(2, d)) monos.push_back(m);
    std::unordered_map<std::uint64_t, std::size_t> index;
    for (std::size_t i = 0; i < monos.size(); ++i) index.emplace(monos[i].hash(), i);
    ExactMatrix rows(f, 0, monos.size());
    Vector row(monos.size());
    for (const auto& g : local) {
      for (const auto& m : monos) {
        std::fill(row.begin(), row.end(), f.zero());
        bool any = false;
        for (const auto& [t, c] : g.terms()) {
          const Monomial prod = t * m;
          if (static_cast<int>(prod.degree) >= order) continue;
          auto& slot = row[index.at(prod.hash())];
          slot = f.add(slot, c);
          any = true;
        }
        if (any) rows.append_row(row);
      }
    }
    const std::size_t value = monos.size() - rank(rows);
    if (prev && *prev == value) return value;
    prev = value;
  }
  throw Error(ErrorCode::NotStabilized, "local length did not stabilize");
}

BaseLocusReport base_locus(const Polynomial& g1, const Polynomial& g2, int split_bound) {
  const Field& base = g1.field();
  if (!base.is_finite()) throw Error(ErrorCode::PreconditionFailed, "base locus needs a finite field");
  if (g1.nvars() != 3 || g2.nvars() != 3)
    throw Error(ErrorCode::PreconditionFailed, "base locus works in three variables");
  const auto d1 = g1.homogeneous_degree(), d2 = g2.homogeneous_degree();
  if (!d1 || !d2 || g1.is_zero() || g2.is_zero())
    throw Error(ErrorCode::PreconditionFailed, "base locus needs two nonzero forms");
  const std::size_t bezout = static_cast<std::size_t>(*d1) * static_cast<std::size_t>(*d2);
  {
    GradedIdeal ideal(base, 3, {g1, g2});
    const int top = *d1 + *d2;
    for (int d : {top, top + 1})
      if (ideal.component(d)->quotient_dim() != bezout)
        throw Error(ErrorCode::NotZeroDimensional, "the two forms share a factor");
  }
  const int bound = std::min(split_bound, base.degree() == 1 ? kMaxExtensionDegree : 1);
  std::size_t last_total = 0;
  for (int k = 1; k <= bound; ++k) {
    const Field field = k == 1 ? base : Field::extension(base.characteristic(), k);
    const Polynomial h1 = k == 1 ? g1 : g1.change_field(field);
    const Polynomial h2 = k == 1 ? g2 : g2.change_field(field);
    BaseLocusReport report{field, {}, 0, true, k};
    for (auto& p : common_zeros(h1, h2)) {
      const std::size_t mult = local_length({h1, h2}, p);
      const int fd = point_field_degree(field, p);
      report.points.push_back({std::move(p), mult, fd});
      report.total_length += mult;
      report.reduced = report.reduced && mult == 1;
    }
    last_total = report.total_length;
    if (report.total_length == bezout) {
      report.splitting_degree = 1;
      for (const auto& p : report.points) report.splitting_degree = std::max(report.splitting_degree, p.field_degree);
      return report;
    }
  }
  throw Error(ErrorCode::NotSplit, "found length " + std::to_string(last_total) + " of " +
                                       std::to_string(bezout) + " by degree " +
                                       std::to_string(bound));
}

HesseReport is_hesse_configuration(const std::vector<ProjPoint>& points, const Field& field) {
  HesseReport out;
  const int n = static_cast<int>(points.size());
  out.lines_per_point.assign(n, 0);
  bool too_full = false;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const Vector line = cross(field, points[i].coords, points[j].coords);
      std::vector<int> on;
      for (int k = 0; k < n; ++k)
        if (field.is_zero(dot(field, line, points[k].coords))) on.push_back(k);
      if (on.size() == 2) ++out.bad_pairs;
      if (on.size() > 3) too_full = true;
      // record each 3-point line once, from its first pair
      if (on.size() == 3 && on[0] == i && on[1] == j) {
        out.lines.push_back({on[0], on[1], on[2]});
        for (int k : on) ++out.lines_per_point[k];
      }
    }
  }
  out.is_hesse = n == 9 && !too_full && out.bad_pairs == 0 && out.lines.size() == 12 &&
                 std::all_of(out.lines_per_point.begin(), out.lines_per_point.end(),
                             [](int c) { return c == 4; });
  return out;
}

HesseReport is_hesse_configuration(const BaseLocusReport& report) {
  if (report.splitting_degree != report.field.degree() && report.field.degree() != 1)
    throw Error(ErrorCode::NotSplit, "points are not defined over the base field");
  if (report.field.degree() > 1)
    throw Error(ErrorCode::NotSplit, "base locus only splits over " + report.field.name());
  std::vector<ProjPoint> pts;
  for (const auto& p : report.points) pts.push_back(p.point);
  HesseReport out = is_hesse_configuration(pts, report.field);
  out.is_hesse = out.is_hesse && report.reduced;
  return out;
}

std::array<FieldElement, 3> hesse_pencil_normal_form(const Polynomial& g1, const Polynomial& g2) {
  const Field& f = g1.field();
  if (f.characteristic() == 3)
    throw Error(ErrorCode::PreconditionFailed, "normal form is not defined in characteristic 3");
  if (g1.homogeneous_degree() != 3 || g2.homogeneous_degree() != 3)
    throw Error(ErrorCode::PreconditionFailed, "normal form needs two cubics");
  const auto& basis = MonomialBasis::get(3, 3);
  const std::size_t ixyz = basis.index_of(Monomial{1, 1, 1});
  ExactMatrix span = ExactMatrix::from_rows(f, basis.size(),
                                            {coefficient_row(g1, 3), coefficient_row(g2, 3)});
  if (rank(span) != 2) throw Error(ErrorCode::NotInNormalFormOrbit, "the cubics are dependent");
  Vector xyz(basis.size(), f.zero());
  xyz[ixyz] = f.one();
  if (rank(span.stacked(ExactMatrix::from_rows(f, basis.size(), {xyz}))) != 2)
    throw Error(ErrorCode::NotInNormalFormOrbit, "xyz is not in the pencil");
  // a generator not proportional to xyz, with its xyz part removed
  Vector other = coefficient_row(g1, 3);
  if (rank(ExactMatrix::from_rows(f, basis.size(), {other, xyz})) < 2) other = coefficient_row(g2, 3);
  other[ixyz] = f.zero();
  std::array<FieldElement, 3> abc;
  const std::array<Monomial, 3> cubes{Monomial{3, 0, 0}, Monomial{0, 3, 0}, Monomial{0, 0, 3}};
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const bool is_cube = std::find(cubes.begin(), cubes.end(), basis[i]) != cubes.end();
    if (!is_cube && !f.is_zero(other[i]))
      throw Error(ErrorCode::NotInNormalFormOrbit, "pencil has terms beyond x^3, y^3, z^3, xyz");
  }
  for (int i = 0; i < 3; ++i) {
    abc[i] = other[basis.index_of(cubes[i])];
    if (f.is_zero(abc[i]))
      throw Error(ErrorCode::NotInNormalFormOrbit, "a cube coefficient vanishes");
  }
  return abc;
}

namespace {

struct ImageScan {
  Field field;
  std::vector<ProjPoint> points;
  std::vector<ProjPoint> images;
};

void check_cubic_system(const std::vector<Polynomial>& cubics) {
  if (cubics.size() != 4) throw Error(ErrorCode::PreconditionFailed, "need four cubics");
  const Field& f = cubics.front().field();
  if (!f.is_finite()) throw Error(ErrorCode::PreconditionFailed, "fiber scan needs a finite field");
  std::vector<Vector> rows;
  for (const auto& c : cubics) {
    if (c.nvars() != 3 || c.homogeneous_degree() != 3)
      throw Error(ErrorCode::PreconditionFailed, "the system must consist of cubics in x, y, z");
    rows.push_back(coefficient_row(c, 3));
  }
  if (rank(ExactMatrix::from_rows(f, 10, rows)) != 4)
    throw Error(ErrorCode::PreconditionFailed, "the cubics are linearly dependent");
}

ImageScan scan_images(const std::vector<Polynomial>& cubics) {
  check_cubic_system(cubics);
  ImageScan scan{cubics.front().field(), {}, {}};
  const Field& f = scan.field;
  scan.points = enumerate_p2(f);
  scan.images.reserve(scan.points.size());
  for (const auto& p : scan.points) {
    Vector v;
    for (const auto& c : cubics) v.push_back(c.evaluate(p.coords));
    if (std::all_of(v.begin(), v.end(), [&](const auto& e) { return f.is_zero(e); }))
      throw Error(ErrorCode::BasePointFound, "all cubics vanish at " + p.to_string(f));
    scan.images.push_back(ProjPoint::normalized(f, std::move(v)));
  }
  try {
    is_artinian(GradedIdeal(f, 3, cubics));
  } catch (const Error&) {
    throw Error(ErrorCode::BasePointFound, "the cubics have a common zero over an extension");
  }
  return scan;
}

}  // namespace

FiberReport morphism_fibers(const std::vector<Polynomial>& cubics, int samples,
                            std::uint64_t seed) {
  const ImageScan scan = scan_images(cubics);
  std::unordered_map<ProjPoint, std::size_t, ProjPointHash> counts;
  for (const auto& img : scan.images) ++counts[img];
  FiberReport out;
  Rng rng(seed);
  const int n = samples > 0 ? samples : 1;
  for (int s = 0; s < n; ++s) {
    const std::size_t idx = rng.below(scan.points.size());
    ++out.fiber_table[counts.at(scan.images[idx])];
  }
  out.samples = static_cast<std::size_t>(n);
  std::size_t best = 0;
  for (const auto& [size, count] : out.fiber_table) {
    if (count > best) {
      best = count;
      out.generic_fiber_size = size;
    }
  }
  out.image_degree = out.generic_fiber_size && 9 % out.generic_fiber_size == 0
                         ? 9 / out.generic_fiber_size
                         : 0;
  return out;
}

FiberDecomposition fiber_decomposition(const std::vector<Polynomial>& cubics, std::uint64_t seed,
                                       int retry_budget) {
  const ImageScan scan = scan_images(cubics);
  const Field& f = scan.field;
  Rng rng(seed);
  for (int attempt = 1; attempt <= retry_budget; ++attempt) {
    const std::size_t i1 = rng.below(scan.points.size()), i2 = rng.below(scan.points.size());
    const ProjPoint& v1 = scan.images[i1];
    const ProjPoint& v2 = scan.images[i2];
    if (v1 == v2) continue;
    // the two hyperplanes through the line
    const auto planes =
        kernel_basis(ExactMatrix::from_rows(f, 4, {v1.coords, v2.coords}));
    std::map<std::size_t, std::vector<std::size_t>> by_image;  // first index -> members
    std::unordered_map<ProjPoint, std::size_t, ProjPointHash> first;
    std::size_t preimage = 0;
    for (std::size_t k = 0; k < scan.points.size(); ++k) {
      const auto& w = scan.images[k].coords;
      if (!f.is_zero(dot(f, planes[0], w)) || !f.is_zero(dot(f, planes[1], w))) continue;
      ++preimage;
      auto [it, fresh] = first.emplace(scan.images[k], k);
      by_image[it->second].push_back(k);
    }
    if (preimage != 9 || by_image.size() != 3) continue;
    if (!std::all_of(by_image.begin(), by_image.end(),
                     [](const auto& kv) { return kv.second.size() == 3; }))
      continue;
    FiberDecomposition out;
    out.attempts = attempt;
    int s = 0;
    for (const auto& [key, members] : by_image) {
      for (auto k : members) out.sigmas[s].push_back(scan.points[k]);
      out.images[s] = scan.images[key];
      ExactMatrix eval(f, 4, 3);
      for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 3; ++c) eval.at(r, c) = cubics[r].evaluate(out.sigmas[s][c].coords);
      out.conditions[s] = rank(eval);
      ++s;
    }
    bool ok = true;
    for (int a = 0; a < 3 && ok; ++a) {
      for (int b = a + 1; b < 3 && ok; ++b) {
        const int c = 3 - a - b;
        for (const auto& p : out.sigmas[a]) {
          for (const auto& q : out.sigmas[b]) {
            const Vector line = cross(f, p.coords, q.coords);
            const bool hit = std::any_of(out.sigmas[c].begin(), out.sigmas[c].end(),
                                         [&](const ProjPoint& r) {
                                           return f.is_zero(dot(f, line, r.coords));
                                         });
            ok = ok && hit;
          }
        }
      }
    }
    out.collinearity = ok;
    return out;
  }
  throw Error(ErrorCode::LineNotSplit,
              "no line split into three rational fibers after " + std::to_string(retry_budget) +
                  " attempts");
}

GradedIdeal points_ideal(const std::vector<ProjPoint>& points, const Field& field) {
  const int top = static_cast<int>(points.size()) + 1;
  std::vector<ExactMatrix> spans;
  for (int d = 0; d <= top; ++d) {
    const auto& basis = MonomialBasis::get(3, d);
    ExactMatrix eval(field, points.size(), basis.size());
    for (std::size_t r = 0; r < points.size(); ++r)
      for (std::size_t c = 0; c < basis.size(); ++c)
        eval.at(r, c) = Polynomial::term(field, basis[c], field.one()).evaluate(points[r].coords);
    ExactMatrix span(field, 0, basis.size());
    for (const auto& v : kernel_basis(eval)) span.append_row(v);
    spans.push_back(std::move(span));
  }
  return GradedIdeal::from_components(field, 3, spans);
}

bool has_six_on_conic(const std::vector<ProjPoint>& points, const Field& field) {
  const std::size_t n = points.size();
  if (n < 6) return false;
  const auto& basis = MonomialBasis::get(3, 2);
  std::vector<Vector> veronese;
  for (const auto& p : points) {
    Vector row;
    for (std::size_t c = 0; c < basis.size(); ++c)
      row.push_back(Polynomial::term(field, basis[c], field.one()).evaluate(p.coords));
    veronese.push_back(std::move(row));
  }
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + 6, true);
  do {
    std::vector<Vector> rows;
    for (std::size_t i = 0; i < n; ++i)
      if (pick[i]) rows.push_back(veronese[i]);
    if (rank(ExactMatrix::from_rows(field, basis.size(), rows)) < 6) return true;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return false;
}

HbReport hb_analysis(const GradedIdeal& ideal_x, std::uint64_t seed) {
  const Field& f = ideal_x.field();
  if (ideal_x.nvars() != 3) throw Error(ErrorCode::PreconditionFailed, "expected three variables");
  HbReport out;
  const auto hf = hilbert_function(ideal_x, 5);
  const std::vector<std::size_t> expected{1, 3, 6, 7, 7, 7};
  if (hf != expected) throw Error(ErrorCode::WrongHVector, "Hilbert function is not (1,3,6,7,7,...)");
  out.length = stabilized_length(ideal_x);
  if (out.length != 7) throw Error(ErrorCode::WrongHVector, "length is not 7");
  out.cubics = rows_to_forms(ideal_x.component(3)->basis(), 3, 3);

  const auto syz = syzygies_in_degree(out.cubics, 4);
  if (syz.empty()) throw Error(ErrorCode::NoLinearSyzygies, "no linear syzygy among the cubics");
  out.linear_column = syz.front();
  std::vector<Vector> rows;
  for (const auto& l : out.linear_column) rows.push_back(coefficient_row(l, 1));
  out.linear_part_rank = rank(ExactMatrix::from_rows(f, 3, rows));
  out.independent = out.linear_part_rank == 3;

  // J = I_X + (f) for a cubic f that is a nonzerodivisor on S/I_X.
  const HVector j_expected{{1, 3, 6, 6, 4, 1}};
  const HVector g_expected{{1, 3, 6, 6, 3, 1}};
  Rng rng(seed);
  std::optional<GradedIdeal> j;
  for (int attempt = 0; attempt < 20 && !j; ++attempt) {
    Polynomial cubic = Polynomial::random_form(f, 3, 3, rng);
    GradedIdeal candidate = ideal_x.with_generators({cubic});
    try {
      if (hvector(candidate) == j_expected) {
        out.nonzerodivisor = cubic;
        j = std::move(candidate);
      }
    } catch (const Error&) {
    }
  }
  if (!j) return out;

  // the unique dual form of degree 5 killed by J_5
  const auto perp = kernel_basis(j->component(5)->basis());
  if (perp.size() != 1) return out;
  const GradedIdeal g_ideal = annihilator(DualForm::from_coefficients(f, 3, 5, perp.front()));
  if (hvector(g_ideal) != g_expected) return out;
  const auto g4 = g_ideal.component(4);
  const auto j4 = j->component(4);
  for (std::size_t r = 0; r < g4->dim(); ++r) {
    if (j4->contains(g4->basis().row(r))) continue;
    GradedIdeal completion =
        j->with_generators({Polynomial::from_coefficients(f, 3, 4, g4->basis().row(r))});
    bool same = true;
    for (int d = 0; d <= 6 && same; ++d)
      same = completion.component(d)->basis() == g_ideal.component(d)->basis();
    if (same) out.completion = std::move(completion);
    break;
  }
  return out;
}

namespace {

using PolyMatrix = std::vector<std::vector<Polynomial>>;

PolyMatrix poly_mul(const PolyMatrix& a, const PolyMatrix& b, const Field& f, int nvars) {
  const std::size_t n = a.size(), m = b.front().size(), k = b.size();
  PolyMatrix out(n, std::vector<Polynomial>(m, Polynomial(f, nvars)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t t = 0; t < k; ++t)
        if (!a[i][t].is_zero() && !b[t][j].is_zero()) out[i][j] += a[i][t] * b[t][j];
  return out;
}

Polynomial linear_form(const Field& f, const Vector& c) {
  return Polynomial::from_coefficients(f, 3, 1, c);
}

Polynomial combine(const Field& f, const Vector& a, const std::vector<Polynomial>& forms) {
  Polynomial out(f, 3);
  for (std::size_t i = 0; i < a.size(); ++i) out += forms[i].scaled(a[i]);
  return out;
}

Vector random_in_span(const Field& f, const std::vector<Vector>& basis, Rng& rng, std::size_t len) {
  Vector v(len, f.zero());
  for (const auto& b : basis) {
    const FieldElement t = f.random(rng);
    for (std::size_t i = 0; i < len; ++i) v[i] = f.add(v[i], f.mul(t, b[i]));
  }
  return v;
}

// Congruence by P = [[A, v], [0, 1]] bringing entry (1,2) and l4 to zero.
std::optional<SkewPolyMatrix> reduce_be(const SkewPolyMatrix& m, Rng& rng) {
  const Field& f = m.field();
  std::vector<Polynomial> ell;
  for (int i = 0; i < 4; ++i) ell.push_back(m.at(i, 4));
  std::vector<Vector> lrows;
  for (const auto& l : ell) lrows.push_back(coefficient_row(l, 1));
  const auto dependencies = left_kernel_basis(ExactMatrix::from_rows(f, 3, lrows));
  if (dependencies.empty()) return std::nullopt;
  const Vector c = dependencies.front();

  for (int attempt = 0; attempt < 200; ++attempt) {
    Vector p{f.random(rng), f.random(rng), f.random(rng)};
    if (std::all_of(p.begin(), p.end(), [&](const auto& e) { return f.is_zero(e); })) continue;
    Vector lp;
    for (const auto& l : ell) lp.push_back(l.evaluate(p));
    ExactMatrix qp(f, 4, 4);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) qp.at(i, j) = m.at(i, j).evaluate(p);
    const auto u = kernel_basis(ExactMatrix::from_rows(f, 4, {lp}));
    const Vector a1 = random_in_span(f, u, rng, 4);
    Vector qa1 = qp.transpose().apply(a1);  // a1^T Q(p)
    Vector cond;
    for (const auto& b : u) cond.push_back(dot(f, qa1, b));
    std::vector<Vector> k_coeffs = kernel_basis(ExactMatrix::from_rows(f, u.size(), {cond}));
    std::vector<Vector> k;
    for (const auto& t : k_coeffs) {
      Vector v(4, f.zero());
      for (std::size_t j = 0; j < u.size(); ++j)
        for (int i = 0; i < 4; ++i) v[i] = f.add(v[i], f.mul(t[j], u[j][i]));
      k.push_back(std::move(v));
    }
    const Vector a2 = random_in_span(f, k, rng, 4);
    const Vector a3{f.random(rng), f.random(rng), f.random(rng), f.random(rng)};
    ExactMatrix a = ExactMatrix::from_rows(f, 4, {a1, a2, a3, c});
    if (rank(a) != 4) continue;
    const Polynomial l1 = combine(f, a1, ell), l2 = combine(f, a2, ell);
    if (rank(ExactMatrix::from_rows(f, 3, {coefficient_row(l1, 1), coefficient_row(l2, 1)})) != 2)
      continue;
    // s = a1^T Q4 a2 must equal v1 l2 - l1 v2
    Polynomial s(f, 3);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        if (!m.at(i, j).is_zero()) s += m.at(i, j).scaled(f.mul(a1[i], a2[j]));
    ExactMatrix system(f, 6, 7);
    for (int t = 0; t < 3; ++t) {
      const Polynomial x = Polynomial::variable(f, 3, t);
      const Vector c1 = coefficient_row(x * l2, 2), c2 = coefficient_row(-(l1 * x), 2);
      for (int r = 0; r < 6; ++r) {
        system.at(r, t) = c1[r];
        system.at(r, 3 + t) = c2[r];
      }
    }
    const Vector sc = coefficient_row(s, 2);
    for (int r = 0; r < 6; ++r) system.at(r, 6) = sc[r];
    std::optional<Vector> sol;
    for (const auto& w : kernel_basis(system)) {
      if (f.is_zero(w[6])) continue;
      const FieldElement scale = f.neg(f.inv(w[6]));
      Vector t(6);
      for (int i = 0; i < 6; ++i) t[i] = f.mul(w[i], scale);
      sol = t;
      break;
    }
    if (!sol) continue;
    const Polynomial v1 = linear_form(f, {(*sol)[0], (*sol)[1], (*sol)[2]});
    const Polynomial v2 = linear_form(f, {(*sol)[3], (*sol)[4], (*sol)[5]});

    PolyMatrix pm(5, std::vector<Polynomial>(5, Polynomial(f, 3)));
    const std::array<Vector, 4> arows{a1, a2, a3, c};
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) pm[i][j] = Polynomial::constant(f, 3, arows[i][j]);
    pm[0][4] = v1;
    pm[1][4] = v2;
    pm[4][4] = Polynomial::constant(f, 3, f.one());
    PolyMatrix pt(5, std::vector<Polynomial>(5, Polynomial(f, 3)));
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) pt[i][j] = pm[j][i];
    PolyMatrix q(5, std::vector<Polynomial>(5, Polynomial(f, 3)));
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) q[i][j] = m.at(i, j);
    const PolyMatrix r = poly_mul(poly_mul(pm, q, f, 3), pt, f, 3);
    if (!r[0][1].is_zero() || !r[3][4].is_zero()) continue;
    SkewPolyMatrix out(f, 3, 5);
    for (int i = 0; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j) out.set(i, j, r[i][j]);
    return out;
  }
  return std::nullopt;
}

}  // namespace

LinkageReport linkage_check(const SkewPolyMatrix& matrix, std::uint64_t seed) {
  if (matrix.size() != 5 || matrix.nvars() != 3)
    throw Error(ErrorCode::StructureMismatch, "expected a 5x5 matrix in three variables");
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      const auto d = matrix.at(i, j).homogeneous_degree();
      if (!matrix.at(i, j).is_zero() && d != 2)
        throw Error(ErrorCode::StructureMismatch, "leading block entries must be quadrics");
    }
    const auto d = matrix.at(i, 4).homogeneous_degree();
    if (!matrix.at(i, 4).is_zero() && d != 1)
      throw Error(ErrorCode::StructureMismatch, "last column must be linear");
  }
  const Field& f = matrix.field();
  std::optional<SkewPolyMatrix> reduced;
  if (matrix.at(0, 1).is_zero() && matrix.at(3, 4).is_zero()) {
    reduced = matrix;
  } else {
    Rng rng(seed);
    reduced = reduce_be(matrix, rng);
  }
  if (!reduced) throw Error(ErrorCode::StructureMismatch, "could not reach the reduced block form");
  const SkewPolyMatrix& m = *reduced;
  const Polynomial &q2 = m.at(0, 2), &q3 = m.at(1, 2), &q4 = m.at(0, 3), &q5 = m.at(1, 3),
                   &q6 = m.at(2, 3), &l1 = m.at(0, 4), &l2 = m.at(1, 4), &l3 = m.at(2, 4);
  const Polynomial common = q4 * l2 - q5 * l1;
  GradedIdeal ix(f, 3, {common, q4 * l3 - q6 * l1, q5 * l3 - q6 * l2});
  GradedIdeal iy(f, 3, {q2 * q5 - q3 * q4, q2 * l2 - q3 * l1, common});
  const Polynomial zero(f, 3);
  const Polynomial quintic = polynomial_determinant({{q2, q4, l1}, {q3, q5, l2}, {zero, q6, l3}});
  GradedIdeal ci(f, 3, {common, quintic});

  LinkageReport out{m, ix, iy, ci};
  try {
    out.degree_x = stabilized_length(ix);
    out.degree_y = stabilized_length(iy);
    out.ci_degree = stabilized_length(ci);
  } catch (const Error& e) {
    throw Error(ErrorCode::StructureMismatch, std::string("minors are degenerate: ") + e.what());
  }
  const auto dc = common.homogeneous_degree(), dq = quintic.homogeneous_degree();
  if (common.is_zero() || quintic.is_zero() || !dc || !dq)
    throw Error(ErrorCode::StructureMismatch, "complete intersection is degenerate");
  out.ci_type = {*dc, *dq};
  out.product_in_ci = true;
  for (const auto& gx : ix.generators()) {
    for (const auto& gy : iy.generators()) {
      const Polynomial p = gx * gy;
      if (p.is_zero()) continue;
      const int d = *p.homogeneous_degree();
      if (!ci.component(d)->contains(coefficient_row(p, d))) out.product_in_ci = false;
    }
  }
  return out;
}

}  // namespace artin
