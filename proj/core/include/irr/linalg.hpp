// Copyright 2026 The irr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#ifndef IRR_LINALG_HPP
#define IRR_LINALG_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "irr/scalar.hpp"

namespace irr {

using Vector = std::vector<Scalar>;

Vector zero_vector(Field f, std::size_t n);
Vector unit_vector(Field f, std::size_t n, std::size_t i);
bool is_zero(const Vector& v);
/// v += c * w
void axpy(Vector& v, const Scalar& c, const Vector& w);

/// Dense row-major matrix over a Field.
class Matrix {
 public:
  Matrix(Field f, std::size_t rows, std::size_t cols);
  static Matrix identity(Field f, std::size_t n);

  Field field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  const Scalar& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  void set_column(std::size_t c, const Vector& v);

  Vector apply(const Vector& v) const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix scaled(const Scalar& c) const;
  bool is_zero() const;

  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

/// Brings \p rows to reduced row echelon form in place, dropping zero rows.
/// Returns the pivot column of each remaining row.
std::vector<std::size_t> row_reduce(std::vector<Vector>& rows,
                                    std::size_t width);

std::size_t rank(const Matrix& m);

/// Basis of {v : m v = 0}.
std::vector<Vector> kernel(const Matrix& m);

/// Basis of the common kernel of all maps (each with the same domain).
std::vector<Vector> common_kernel(std::span<const Matrix> maps);

/// Linear subspace of k^n, stored canonically in reduced echelon form so
/// that equal subspaces have identical representations.
class Subspace {
 public:
  Subspace(Field f, std::size_t ambient_dimension);

  static Subspace span(Field f, std::size_t ambient_dimension,
                       std::span<const Vector> vectors);
  static Subspace whole(Field f, std::size_t ambient_dimension);

  Field field() const noexcept { return field_; }
  std::size_t ambient_dimension() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  const std::vector<Vector>& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  /// Canonical representative of v modulo the subspace (zero on pivots).
  Vector reduce(Vector v) const;
  bool contains(const Vector& v) const;
  bool contains(const Subspace& o) const;

  Subspace operator+(const Subspace& o) const;
  Subspace intersect(const Subspace& o) const;

  friend bool operator==(const Subspace& a, const Subspace& b);

 private:
  Field field_;
  std::size_t ambient_;
  std::vector<Vector> basis_;
  std::vector<std::size_t> pivots_;
};

}  // namespace irr

#endif  // IRR_LINALG_HPP
