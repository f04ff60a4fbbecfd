// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The qft-infocalc Authors
#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "qic/complex_matrix.hpp"

namespace qic {

// Seeded generator with hand-rolled variate transforms. The standard
// distributions are implementation-defined, so uniform and Gaussian draws are
// built directly on the mt19937_64 bit stream to keep every seeded output
// reproducible across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  // Uniform in [0, 1), 53 random bits.
  double uniform01();

  // Standard normal via Box-Muller; the spare draw is cached.
  double gaussian();

  // Independent standard-normal real and imaginary parts.
  Complex complex_gaussian();

  // Index drawn from a finite distribution (entries >= 0, any positive sum).
  std::size_t pick(const std::vector<double>& weights);

  // Haar-distributed pure state of the given dimension.
  CVector random_state(std::size_t dim);

  // Haar-distributed 2x2 special unitary.
  ComplexMatrix random_unitary2();

  // Full-rank density matrix: normalized Wishart plus an identity floor that
  // keeps the smallest eigenvalue well away from the support cutoff.
  ComplexMatrix random_density_full_rank(std::size_t dim, double floor = 0.05);

 private:
  std::mt19937_64 eng_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace qic
