// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The qft-infocalc Authors
#pragma once

#include <cstddef>
#include <vector>

#include "qic/complex_matrix.hpp"

namespace qic {

// Normalized two-component state psi0|0> + psi1|1>. Construction rejects
// unnormalized amplitudes (callers fix their bugs; nothing is silently
// rescaled).
class QubitState {
 public:
  // Defaults to |0>.
  QubitState() : psi0_(1.0), psi1_(0.0) {}
  QubitState(Complex psi0, Complex psi1);

  Complex psi0() const { return psi0_; }
  Complex psi1() const { return psi1_; }
  CVector amplitudes() const { return {psi0_, psi1_}; }

 private:
  Complex psi0_, psi1_;
};

// Trace-one positive-semidefinite Hermitian matrix with an ordered list of
// subsystem dimensions. Validated on construction.
class DensityMatrix {
 public:
  DensityMatrix(ComplexMatrix matrix, std::vector<std::size_t> dims);

  const ComplexMatrix& matrix() const { return matrix_; }
  const std::vector<std::size_t>& dims() const { return dims_; }
  std::size_t dim() const { return matrix_.rows(); }

  // Reduced state over the kept subsystems (ascending index list).
  DensityMatrix reduced(const std::vector<std::size_t>& keep) const;

 private:
  ComplexMatrix matrix_;
  std::vector<std::size_t> dims_;
};

// |psi><psi| for a single qubit: [[|psi0|^2, psi0 psi1*], [psi0* psi1, |psi1|^2]].
DensityMatrix density_of(const QubitState& q);

// |psi><psi| for an arbitrary normalized state vector over the given dims.
DensityMatrix density_from_statevector(const CVector& amplitudes,
                                       const std::vector<std::size_t>& dims);

// (|00> + |11>)/sqrt(2), dims (2,2). The leftmost ket label is the first
// tensor factor throughout: |10> = |1> (x) |0>.
DensityMatrix bell_state();

// (|000> + |111>)/sqrt(2), dims (2,2,2).
DensityMatrix ghz_state();

// Projectors onto |0> and |1>: diag(1,0) and diag(0,1). They satisfy
// P0 + P1 = I and P0 P1 = 0 exactly.
ComplexMatrix projector0();
ComplexMatrix projector1();

// Projective measurement in the computational basis. A zero-probability
// branch reports the corresponding basis ket as its collapsed state.
struct MeasureResult {
  double prob0, prob1;
  QubitState collapsed0, collapsed1;
};
MeasureResult measure(const QubitState& q);

}  // namespace qic
