// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The qft-infocalc Authors
#include "qic/states.hpp"

#include <cmath>
#include <utility>

#include "qic/errors.hpp"
#include "qic/linalg.hpp"

namespace qic {

namespace {

constexpr double kNormTol = 1e-8;

void check_norm(double norm_sq, const char* who) {
  if (std::abs(norm_sq - 1.0) > kNormTol)
    throw input_error(std::string(who) + ": state not normalized");
}

}  // namespace

QubitState::QubitState(Complex psi0, Complex psi1) : psi0_(psi0), psi1_(psi1) {
  check_norm(std::norm(psi0_) + std::norm(psi1_), "QubitState");
}

DensityMatrix::DensityMatrix(ComplexMatrix matrix, std::vector<std::size_t> dims)
    : matrix_(std::move(matrix)), dims_(std::move(dims)) {
  std::size_t total = 1;
  for (std::size_t d : dims_) {
    if (d == 0) throw input_error("DensityMatrix: zero subsystem dimension");
    total *= d;
  }
  if (dims_.empty() || !matrix_.is_square() || total != matrix_.rows())
    throw input_error("DensityMatrix: dims product does not match matrix size");
  if (!matrix_.is_hermitian(1e-12)) throw input_error("DensityMatrix: matrix not Hermitian");
  if (std::abs(matrix_.trace().real() - 1.0) > 1e-10 ||
      std::abs(matrix_.trace().imag()) > 1e-10)
    throw input_error("DensityMatrix: trace is not 1");
  const Spectrum s = herm_eig(matrix_);
  if (s.eigenvalues.front() < -1e-10)
    throw input_error("DensityMatrix: matrix has a negative eigenvalue");
}

DensityMatrix DensityMatrix::reduced(const std::vector<std::size_t>& keep) const {
  ComplexMatrix r = partial_trace(matrix_, dims_, keep);
  std::vector<std::size_t> rd;
  for (std::size_t p : keep) rd.push_back(dims_[p]);
  return DensityMatrix(r, rd);
}

DensityMatrix density_of(const QubitState& q) {
  ComplexMatrix m(2, 2);
  m(0, 0) = std::norm(q.psi0());
  m(0, 1) = q.psi0() * std::conj(q.psi1());
  m(1, 0) = std::conj(q.psi0()) * q.psi1();
  m(1, 1) = std::norm(q.psi1());
  return DensityMatrix(m, {2});
}

DensityMatrix density_from_statevector(const CVector& amplitudes,
                                       const std::vector<std::size_t>& dims) {
  double norm_sq = 0.0;
  for (const auto& a : amplitudes) norm_sq += std::norm(a);
  check_norm(norm_sq, "density_from_statevector");
  const std::size_t n = amplitudes.size();
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m(i, j) = amplitudes[i] * std::conj(amplitudes[j]);
  return DensityMatrix(m, dims);
}

// The Bell and GHZ projectors have exactly representable entries (0 and 1/2),
// so they are laid out directly rather than squared out of 1/sqrt(2)
// amplitudes, which would put the corners one ulp off 1/2.
DensityMatrix bell_state() {
  ComplexMatrix m = ComplexMatrix::zero(4, 4);
  m(0, 0) = m(0, 3) = m(3, 0) = m(3, 3) = Complex(0.5, 0.0);
  return DensityMatrix(std::move(m), {2, 2});
}

DensityMatrix ghz_state() {
  ComplexMatrix m = ComplexMatrix::zero(8, 8);
  m(0, 0) = m(0, 7) = m(7, 0) = m(7, 7) = Complex(0.5, 0.0);
  return DensityMatrix(std::move(m), {2, 2, 2});
}

ComplexMatrix projector0() {
  return ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, 0.0}});
}

ComplexMatrix projector1() {
  return ComplexMatrix::from_rows({{0.0, 0.0}, {0.0, 1.0}});
}

MeasureResult measure(const QubitState& q) {
  const double p0 = std::norm(q.psi0());
  const double p1 = std::norm(q.psi1());
  // Renormalized projections P_k|psi> / sqrt(p_k); basis kets on null branches.
  QubitState c0 = p0 > 0.0 ? QubitState(q.psi0() / std::sqrt(p0), 0.0)
                           : QubitState(1.0, 0.0);
  QubitState c1 = p1 > 0.0 ? QubitState(0.0, q.psi1() / std::sqrt(p1))
                           : QubitState(0.0, 1.0);
  return MeasureResult{p0, p1, c0, c1};
}

}  // namespace qic
