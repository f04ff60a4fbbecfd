// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The qft-infocalc Authors
#include "qic/random.hpp"

#include <cmath>

#include "qic/errors.hpp"

namespace qic {

double Rng::uniform01() {
  return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
}

double Rng::gaussian() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double u1 = 1.0 - uniform01();  // (0, 1], keeps the log finite
  const double u2 = uniform01();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double a = 2.0 * 3.14159265358979323846 * u2;
  spare_ = r * std::sin(a);
  has_spare_ = true;
  return r * std::cos(a);
}

Complex Rng::complex_gaussian() {
  const double re = gaussian();
  return Complex(re, gaussian());
}

std::size_t Rng::pick(const std::vector<double>& weights) {
  if (weights.empty()) throw input_error("pick: empty weight vector");
  double total = 0.0;
  for (double w : weights) {
    if (w < 0.0) throw input_error("pick: negative weight");
    total += w;
  }
  if (total <= 0.0) throw input_error("pick: weights sum to zero");
  const double x = uniform01() * total;
  double acc = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    acc += weights[i];
    if (x < acc) return i;
  }
  return weights.size() - 1;
}

CVector Rng::random_state(std::size_t dim) {
  if (dim == 0) throw input_error("random_state: dimension must be positive");
  CVector v(dim);
  for (auto& z : v) z = complex_gaussian();
  return normalized(v);
}

ComplexMatrix Rng::random_unitary2() {
  // A unit quaternion column (a, b) yields the Haar measure on SU(2).
  CVector col{complex_gaussian(), complex_gaussian()};
  col = normalized(col);
  ComplexMatrix u(2, 2);
  u(0, 0) = col[0];
  u(1, 0) = col[1];
  u(0, 1) = -std::conj(col[1]);
  u(1, 1) = std::conj(col[0]);
  return u;
}

ComplexMatrix Rng::random_density_full_rank(std::size_t dim, double floor) {
  if (dim == 0) throw input_error("random_density_full_rank: dimension must be positive");
  if (floor <= 0.0) throw input_error("random_density_full_rank: floor must be positive");
  ComplexMatrix g(dim, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) g(i, j) = complex_gaussian();
  ComplexMatrix w = g * g.adjoint();
  for (std::size_t i = 0; i < dim; ++i) w(i, i) += floor;
  const double tr = w.trace().real();
  return w * Complex(1.0 / tr, 0.0);
}

}  // namespace qic
