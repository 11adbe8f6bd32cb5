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

#include "artin/matrix.hpp"

#include <sstream>

namespace artin {

ExactMatrix::ExactMatrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {}

ExactMatrix ExactMatrix::identity(const Field& field, std::size_t n) {
  ExactMatrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = field.one();
  return m;
}

ExactMatrix ExactMatrix::from_rows(const Field& field, std::size_t cols,
                                   const std::vector<Vector>& rows) {
  ExactMatrix m(field, 0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

ExactMatrix ExactMatrix::from_ints(const Field& field,
                                   const std::vector<std::vector<std::int64_t>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  ExactMatrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error(ErrorCode::PreconditionFailed, "ragged matrix");
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = field.from_int(rows[r][c]);
  }
  return m;
}

ExactMatrix ExactMatrix::random(const Field& field, std::size_t rows, std::size_t cols,
                                Rng& rng) {
  ExactMatrix m(field, rows, cols);
  for (auto& x : m.data_) x = field.random(rng);
  return m;
}

std::vector<Vector> ExactMatrix::row_vectors() const {
  std::vector<Vector> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row_vector(r));
  return out;
}

void ExactMatrix::append_row(std::span<const FieldElement> values) {
  if (values.size() != cols_) throw Error(ErrorCode::PreconditionFailed, "row length mismatch");
  for (const auto& v : values) field_.check(v);
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& other) const {
  if (!(field_ == other.field_)) throw Error(ErrorCode::FieldMismatch, "matrix product");
  if (cols_ != other.rows_) throw Error(ErrorCode::PreconditionFailed, "shape mismatch");
  ExactMatrix out(field_, rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const auto& a = at(i, k);
      if (field_.is_zero(a)) continue;
      for (std::size_t j = 0; j < other.cols_; ++j)
        out.at(i, j) = field_.fma(out.at(i, j), a, other.at(k, j));
    }
  return out;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& other) const {
  if (!(field_ == other.field_)) throw Error(ErrorCode::FieldMismatch, "matrix sum");
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw Error(ErrorCode::PreconditionFailed, "shape mismatch");
  ExactMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_.add(data_[i], other.data_[i]);
  return out;
}

Vector ExactMatrix::apply(std::span<const FieldElement> v) const {
  if (v.size() != cols_) throw Error(ErrorCode::PreconditionFailed, "shape mismatch");
  Vector out(rows_, field_.zero());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i] = field_.fma(out[i], at(i, j), v[j]);
  return out;
}

ExactMatrix ExactMatrix::stacked(const ExactMatrix& other) const {
  if (!(field_ == other.field_)) throw Error(ErrorCode::FieldMismatch, "stacking");
  if (cols_ != other.cols_) throw Error(ErrorCode::PreconditionFailed, "shape mismatch");
  ExactMatrix out = *this;
  out.data_.insert(out.data_.end(), other.data_.begin(), other.data_.end());
  out.rows_ += other.rows_;
  return out;
}

bool ExactMatrix::is_zero() const {
  for (const auto& x : data_)
    if (!field_.is_zero(x)) return false;
  return true;
}

std::string ExactMatrix::to_string() const {
  std::ostringstream os;
  for (std::size_t r = 0; r < rows_; ++r) {
    os << "[";
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << field_.to_string(at(r, c));
    os << "]\n";
  }
  return os.str();
}

bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

namespace {

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  std::uint64_t r = 1, n = p - 2;
  while (n) {
    if (n & 1) r = r * a % p;
    a = a * a % p;
    n >>= 1;
  }
  return r;
}

// Elimination on raw residues for GF(p); the hot path of every rank query.
RrefResult rref_prime(const ExactMatrix& m) {
  const std::uint64_t p = m.field().characteristic();
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::uint32_t> a(rows * cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) a[r * cols + c] = m.at(r, c).residue().c[0];
  RrefResult res;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t pr = row;
    while (pr < rows && a[pr * cols + col] == 0) ++pr;
    if (pr == rows) continue;
    if (pr != row)
      for (std::size_t c = 0; c < cols; ++c) std::swap(a[pr * cols + c], a[row * cols + c]);
    std::uint32_t* prow = &a[row * cols];
    const std::uint64_t inv = inv_mod(prow[col], p);
    for (std::size_t c = col; c < cols; ++c) prow[c] = static_cast<std::uint32_t>(prow[c] * inv % p);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row) continue;
      std::uint32_t* cur = &a[r * cols];
      const std::uint64_t f = cur[col];
      if (!f) continue;
      const std::uint64_t nf = p - f;
      for (std::size_t c = col; c < cols; ++c)
        if (prow[c]) cur[c] = static_cast<std::uint32_t>((cur[c] + nf * prow[c]) % p);
    }
    res.pivot_cols.push_back(col);
    ++row;
  }
  res.rank = row;
  res.reduced = ExactMatrix(m.field(), rows, cols);
  const Field& f = m.field();
  for (std::size_t r = 0; r < row; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (a[r * cols + c]) res.reduced.at(r, c) = f.from_int(a[r * cols + c]);
  return res;
}

RrefResult rref_generic(const ExactMatrix& m) {
  const Field& f = m.field();
  RrefResult res;
  res.reduced = m;
  ExactMatrix& a = res.reduced;
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t pr = row;
    while (pr < rows && f.is_zero(a.at(pr, col))) ++pr;
    if (pr == rows) continue;
    if (pr != row)
      for (std::size_t c = 0; c < cols; ++c) std::swap(a.at(pr, c), a.at(row, c));
    const FieldElement inv = f.inv(a.at(row, col));
    for (std::size_t c = col; c < cols; ++c) a.at(row, c) = f.mul(a.at(row, c), inv);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row || f.is_zero(a.at(r, col))) continue;
      const FieldElement factor = f.neg(a.at(r, col));
      for (std::size_t c = col; c < cols; ++c)
        if (!f.is_zero(a.at(row, c))) a.at(r, c) = f.fma(a.at(r, c), factor, a.at(row, c));
    }
    res.pivot_cols.push_back(col);
    ++row;
  }
  res.rank = row;
  return res;
}

}  // namespace

RrefResult rref(const ExactMatrix& m) {
  if (m.field().kind() == FieldKind::Prime) return rref_prime(m);
  return rref_generic(m);
}

std::size_t rank(const ExactMatrix& m) { return rref(m).rank; }

ExactMatrix row_basis(const ExactMatrix& m) {
  auto r = rref(m);
  ExactMatrix out(m.field(), 0, m.cols());
  for (std::size_t i = 0; i < r.rank; ++i) out.append_row(r.reduced.row(i));
  return out;
}

std::vector<Vector> kernel_basis(const ExactMatrix& m) {
  const Field& f = m.field();
  auto r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : r.pivot_cols) is_pivot[c] = true;
  std::vector<Vector> out;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols(), f.zero());
    v[free] = f.one();
    for (std::size_t i = 0; i < r.rank; ++i) v[r.pivot_cols[i]] = f.neg(r.reduced.at(i, free));
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<Vector> left_kernel_basis(const ExactMatrix& m) {
  return kernel_basis(m.transpose());
}

ExactMatrix row_space_intersection(const ExactMatrix& a, const ExactMatrix& b) {
  if (!(a.field() == b.field())) throw Error(ErrorCode::FieldMismatch, "row space intersection");
  if (a.cols() != b.cols()) throw Error(ErrorCode::PreconditionFailed, "column mismatch");
  const Field& f = a.field();
  // Vectors (x, y) with x A = y B; the intersection is spanned by x A.
  ExactMatrix ra = row_basis(a), rb = row_basis(b);
  ExactMatrix neg_b(f, rb.rows(), rb.cols());
  for (std::size_t i = 0; i < rb.rows(); ++i)
    for (std::size_t j = 0; j < rb.cols(); ++j) neg_b.at(i, j) = f.neg(rb.at(i, j));
  ExactMatrix stacked = ra.stacked(neg_b);
  ExactMatrix out(f, 0, a.cols());
  for (const auto& coeffs : left_kernel_basis(stacked)) {
    Vector v(a.cols(), f.zero());
    for (std::size_t i = 0; i < ra.rows(); ++i) {
      if (f.is_zero(coeffs[i])) continue;
      for (std::size_t j = 0; j < a.cols(); ++j) v[j] = f.fma(v[j], coeffs[i], ra.at(i, j));
    }
    out.append_row(v);
  }
  return row_basis(out);
}

FieldElement determinant(const ExactMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::PreconditionFailed, "determinant of non-square");
  const Field& f = m.field();
  ExactMatrix a = m;
  const std::size_t n = m.rows();
  FieldElement det = f.one();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pr = col;
    while (pr < n && f.is_zero(a.at(pr, col))) ++pr;
    if (pr == n) return f.zero();
    if (pr != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a.at(pr, c), a.at(col, c));
      det = f.neg(det);
    }
    det = f.mul(det, a.at(col, col));
    const FieldElement inv = f.inv(a.at(col, col));
    for (std::size_t r = col + 1; r < n; ++r) {
      if (f.is_zero(a.at(r, col))) continue;
      const FieldElement factor = f.neg(f.mul(a.at(r, col), inv));
      for (std::size_t c = col; c < n; ++c) a.at(r, c) = f.fma(a.at(r, c), factor, a.at(col, c));
    }
  }
  return det;
}

}  // namespace artin
