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

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "artin/field.hpp"

namespace artin {

using Vector = std::vector<FieldElement>;

// Dense row-major matrix over an exact field.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(Field field, std::size_t rows, std::size_t cols);

  static ExactMatrix identity(const Field& field, std::size_t n);
  static ExactMatrix from_rows(const Field& field, std::size_t cols,
                               const std::vector<Vector>& rows);
  static ExactMatrix from_ints(const Field& field,
                               const std::vector<std::vector<std::int64_t>>& rows);
  static ExactMatrix random(const Field& field, std::size_t rows, std::size_t cols, Rng& rng);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0; }

  const FieldElement& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  FieldElement& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::span<const FieldElement> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  Vector row_vector(std::size_t r) const { return {row(r).begin(), row(r).end()}; }
  std::vector<Vector> row_vectors() const;

  void append_row(std::span<const FieldElement> values);
  ExactMatrix transpose() const;
  ExactMatrix operator*(const ExactMatrix& other) const;
  ExactMatrix operator+(const ExactMatrix& other) const;
  Vector apply(std::span<const FieldElement> v) const;
  // Rows of *this followed by rows of other.
  ExactMatrix stacked(const ExactMatrix& other) const;
  bool is_zero() const;

  std::string to_string() const;

  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b);

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<FieldElement> data_;
};

struct RrefResult {
  ExactMatrix reduced;                   // same shape as the input
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;   // one per nonzero row, increasing
};

// Gauss-Jordan with leftmost pivot columns and first suitable row.
RrefResult rref(const ExactMatrix& m);
std::size_t rank(const ExactMatrix& m);
// Nonzero rows of the RREF.
ExactMatrix row_basis(const ExactMatrix& m);

// Right null space; one vector per free column, with that column set to 1.
std::vector<Vector> kernel_basis(const ExactMatrix& m);
// Left null space (vectors y with y M = 0).
std::vector<Vector> left_kernel_basis(const ExactMatrix& m);

// RREF basis of rowspace(a) intersected with rowspace(b).
ExactMatrix row_space_intersection(const ExactMatrix& a, const ExactMatrix& b);

// Determinant of a square matrix.
FieldElement determinant(const ExactMatrix& m);

}  // namespace artin
