// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The qft-infocalc Authors
#include "qic/complex_matrix.hpp"

#include <algorithm>
#include <cmath>

#include "qic/errors.hpp"

namespace qic {

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::zero(std::size_t rows, std::size_t cols) {
  return ComplexMatrix(rows, cols);
}

ComplexMatrix ComplexMatrix::from_rows(
    std::initializer_list<std::initializer_list<Complex>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  ComplexMatrix m(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) throw input_error("from_rows: ragged row lengths");
    std::size_t j = 0;
    for (const auto& v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(const std::vector<double>& d) {
  ComplexMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

ComplexMatrix ComplexMatrix::column(const CVector& v) {
  ComplexMatrix m(v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
  return m;
}

ComplexMatrix ComplexMatrix::operator+(const ComplexMatrix& o) const {
  if (!same_shape(o)) throw input_error("matrix addition: shape mismatch");
  ComplexMatrix r(rows_, cols_);
  for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] + o.a_[k];
  return r;
}

ComplexMatrix ComplexMatrix::operator-(const ComplexMatrix& o) const {
  if (!same_shape(o)) throw input_error("matrix subtraction: shape mismatch");
  ComplexMatrix r(rows_, cols_);
  for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] - o.a_[k];
  return r;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& o) const {
  if (cols_ != o.rows_) throw input_error("matrix product: inner dimension mismatch");
  ComplexMatrix r(rows_, o.cols_);
  // i-k-j loop order streams contiguous rows of both operands.
  for (std::size_t i = 0; i < rows_; ++i) {
    Complex* ri = &r.a_[i * o.cols_];
    for (std::size_t k = 0; k < cols_; ++k) {
      const Complex aik = a_[i * cols_ + k];
      if (aik == Complex(0.0, 0.0)) continue;  // exact-zero rows cost nothing
      const Complex* ok = &o.a_[k * o.cols_];
      for (std::size_t j = 0; j < o.cols_; ++j) ri[j] += aik * ok[j];
    }
  }
  return r;
}

ComplexMatrix ComplexMatrix::operator*(Complex s) const {
  ComplexMatrix r(rows_, cols_);
  for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = s * a_[k];
  return r;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(j, i) = std::conj((*this)(i, j));
  return r;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

ComplexMatrix ComplexMatrix::conjugate() const {
  ComplexMatrix r(rows_, cols_);
  for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = std::conj(a_[k]);
  return r;
}

Complex ComplexMatrix::trace() const {
  if (!is_square()) throw input_error("trace: matrix not square");
  Complex t = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

CVector ComplexMatrix::apply(const CVector& v) const {
  if (v.size() != cols_) throw input_error("apply: vector length mismatch");
  CVector r(rows_, Complex(0.0, 0.0));
  for (std::size_t i = 0; i < rows_; ++i) {
    Complex s = 0.0;
    const Complex* row = &a_[i * cols_];
    for (std::size_t j = 0; j < cols_; ++j) s += row[j] * v[j];
    r[i] = s;
  }
  return r;
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& v : a_) m = std::max(m, std::abs(v));
  return m;
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& o) const {
  if (!same_shape(o)) throw input_error("max_abs_diff: shape mismatch");
  double m = 0.0;
  for (std::size_t k = 0; k < a_.size(); ++k)
    m = std::max(m, std::abs(a_[k] - o.a_[k]));
  return m;
}

bool ComplexMatrix::is_hermitian(double tol) const {
  if (!is_square()) return false;
  const double scale = std::max(1.0, max_abs());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i; j < cols_; ++j)
      if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > tol * scale)
        return false;
  return true;
}

Complex inner(const CVector& a, const CVector& b) {
  if (a.size() != b.size()) throw input_error("inner: length mismatch");
  Complex s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

double norm2(const CVector& v) {
  double s = 0.0;
  for (const auto& x : v) s += std::norm(x);
  return std::sqrt(s);
}

CVector normalized(const CVector& v) {
  const double n = norm2(v);
  if (n == 0.0) throw input_error("normalized: zero vector");
  CVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] / n;
  return r;
}

}  // namespace qic
