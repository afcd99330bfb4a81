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
#include "irr/linalg.hpp"

#include <algorithm>

#include "irr/error.hpp"

namespace irr {

Vector zero_vector(Field f, std::size_t n) {
  return Vector(n, Scalar::zero(f));
}

Vector unit_vector(Field f, std::size_t n, std::size_t i) {
  Vector v = zero_vector(f, n);
  v.at(i) = Scalar::one(f);
  return v;
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(),
                     [](const Scalar& s) { return s.is_zero(); });
}

void axpy(Vector& v, const Scalar& c, const Vector& w) {
  if (v.size() != w.size()) throw MismatchError("vector length mismatch");
  if (c.is_zero()) return;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!w[i].is_zero()) v[i] += c * w[i];
}

Matrix::Matrix(Field f, std::size_t rows, std::size_t cols)
    : field_(f),
      rows_(rows),
      cols_(cols),
      data_(rows * cols, Scalar::zero(f)) {}

Matrix Matrix::identity(Field f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(f);
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
}

Vector Matrix::column(std::size_t c) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
  return v;
}

void Matrix::set_column(std::size_t c, const Vector& v) {
  if (v.size() != rows_) throw MismatchError("column length mismatch");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

Vector Matrix::apply(const Vector& v) const {
  if (v.size() != cols_) throw MismatchError("matrix-vector size mismatch");
  Vector out = zero_vector(field_, rows_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (v[c].is_zero()) continue;
    for (std::size_t r = 0; r < rows_; ++r) {
      const Scalar& a = (*this)(r, c);
      if (!a.is_zero()) out[r] += a * v[c];
    }
  }
  return out;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw MismatchError("matrix product size mismatch");
  Matrix out(field_, rows_, o.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(r, k);
      if (a.is_zero()) continue;
      for (std::size_t c = 0; c < o.cols_; ++c) {
        const Scalar& b = o(k, c);
        if (!b.is_zero()) out(r, c) += a * b;
      }
    }
  return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw MismatchError("matrix sum size mismatch");
  Matrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += o.data_[i];
  return out;
}

Matrix Matrix::scaled(const Scalar& c) const {
  Matrix out = *this;
  for (auto& x : out.data_) x *= c;
  return out;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](const Scalar& s) { return s.is_zero(); });
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::vector<std::size_t> row_reduce(std::vector<Vector>& rows,
                                    std::size_t width) {
  std::vector<std::size_t> pivots;
  std::size_t next = 0;
  for (std::size_t col = 0; col < width && next < rows.size(); ++col) {
    std::size_t pick = next;
    while (pick < rows.size() && rows[pick][col].is_zero()) ++pick;
    if (pick == rows.size()) continue;
    std::swap(rows[next], rows[pick]);
    const Scalar inv = rows[next][col].inverse();
    for (std::size_t c = col; c < width; ++c)
      if (!rows[next][c].is_zero()) rows[next][c] *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == next || rows[r][col].is_zero()) continue;
      const Scalar factor = -rows[r][col];
      axpy(rows[r], factor, rows[next]);
    }
    pivots.push_back(col);
    ++next;
  }
  rows.resize(next);
  return pivots;
}

std::size_t rank(const Matrix& m) {
  std::vector<Vector> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
  return row_reduce(rows, m.cols()).size();
}

std::vector<Vector> kernel(const Matrix& m) {
  const Matrix maps[] = {m};
  return common_kernel(maps);
}

std::vector<Vector> common_kernel(std::span<const Matrix> maps) {
  if (maps.empty()) throw PreconditionError("common kernel of no maps");
  const Field f = maps.front().field();
  const std::size_t n = maps.front().cols();
  std::vector<Vector> rows;
  for (const auto& m : maps) {
    if (m.cols() != n) throw MismatchError("maps with different domains");
    for (std::size_t r = 0; r < m.rows(); ++r) {
      Vector row = m.row(r);
      if (!is_zero(row)) rows.push_back(std::move(row));
    }
  }
  const auto pivots = row_reduce(rows, n);
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vector v = zero_vector(f, n);
    v[free] = Scalar::one(f);
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = -rows[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

Subspace::Subspace(Field f, std::size_t ambient_dimension)
    : field_(f), ambient_(ambient_dimension) {}

Subspace Subspace::span(Field f, std::size_t ambient_dimension,
                        std::span<const Vector> vectors) {
  Subspace s(f, ambient_dimension);
  for (const auto& v : vectors) {
    if (v.size() != ambient_dimension)
      throw MismatchError("vector length differs from ambient dimension");
    if (!is_zero(v)) s.basis_.push_back(v);
  }
  s.pivots_ = row_reduce(s.basis_, ambient_dimension);
  return s;
}

Subspace Subspace::whole(Field f, std::size_t ambient_dimension) {
  Subspace s(f, ambient_dimension);
  for (std::size_t i = 0; i < ambient_dimension; ++i) {
    s.basis_.push_back(unit_vector(f, ambient_dimension, i));
    s.pivots_.push_back(i);
  }
  return s;
}

Vector Subspace::reduce(Vector v) const {
  if (v.size() != ambient_)
    throw MismatchError("vector length differs from ambient dimension");
  for (std::size_t r = 0; r < basis_.size(); ++r) {
    const Scalar c = v[pivots_[r]];
    if (!c.is_zero()) axpy(v, -c, basis_[r]);
  }
  return v;
}

bool Subspace::contains(const Vector& v) const { return is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& o) const {
  return std::all_of(o.basis_.begin(), o.basis_.end(),
                     [&](const Vector& v) { return contains(v); });
}

Subspace Subspace::operator+(const Subspace& o) const {
  if (ambient_ != o.ambient_) throw MismatchError("ambient dimension mismatch");
  std::vector<Vector> all = basis_;
  all.insert(all.end(), o.basis_.begin(), o.basis_.end());
  return span(field_, ambient_, all);
}

Subspace Subspace::intersect(const Subspace& o) const {
  if (ambient_ != o.ambient_) throw MismatchError("ambient dimension mismatch");
  if (basis_.empty() || o.basis_.empty()) return Subspace(field_, ambient_);
  // u = sum a_i u_i lies in o iff sum a_i o.reduce(u_i) = 0.
  Matrix m(field_, ambient_, basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i)
    m.set_column(i, o.reduce(basis_[i]));
  std::vector<Vector> out;
  for (const auto& coeffs : kernel(m)) {
    Vector u = zero_vector(field_, ambient_);
    for (std::size_t i = 0; i < coeffs.size(); ++i) axpy(u, coeffs[i], basis_[i]);
    out.push_back(std::move(u));
  }
  return span(field_, ambient_, out);
}

bool operator==(const Subspace& a, const Subspace& b) {
  return a.field_ == b.field_ && a.ambient_ == b.ambient_ &&
         a.basis_ == b.basis_;
}

}  // namespace irr
