// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The qft-infocalc Authors
#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace qic {

using Complex = std::complex<double>;
using CVector = std::vector<Complex>;

// Dense complex matrix, row-major storage. The numerical substrate for every
// other module; deliberately small and dependency-free.
class ComplexMatrix {
 public:
  ComplexMatrix() : rows_(0), cols_(0) {}
  ComplexMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, Complex(0.0, 0.0)) {}

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix zero(std::size_t rows, std::size_t cols);
  // Row-major literal; throws input_error on ragged rows.
  static ComplexMatrix from_rows(
      std::initializer_list<std::initializer_list<Complex>> rows);
  static ComplexMatrix diagonal(const std::vector<double>& d);
  static ComplexMatrix column(const CVector& v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Complex& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const {
    return a_[i * cols_ + j];
  }
  const CVector& data() const { return a_; }

  ComplexMatrix operator+(const ComplexMatrix& o) const;
  ComplexMatrix operator-(const ComplexMatrix& o) const;
  ComplexMatrix operator*(const ComplexMatrix& o) const;
  ComplexMatrix operator*(Complex s) const;
  friend ComplexMatrix operator*(Complex s, const ComplexMatrix& m) { return m * s; }

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  ComplexMatrix conjugate() const;
  Complex trace() const;

  CVector apply(const CVector& v) const;  // matrix-vector product

  double max_abs() const;                 // max entrywise modulus
  double max_abs_diff(const ComplexMatrix& o) const;
  bool is_hermitian(double tol = 1e-12) const;  // tol scaled by max(1, max_abs)

  bool same_shape(const ComplexMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_;
  }

 private:
  std::size_t rows_, cols_;
  CVector a_;
};

// Dot product <a|b> (conjugate-linear in the first argument) and 2-norm.
Complex inner(const CVector& a, const CVector& b);
double norm2(const CVector& v);
CVector normalized(const CVector& v);

}  // namespace qic
