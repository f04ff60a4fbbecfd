// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The qft-infocalc Authors
#include "qic/channels.hpp"

#include <cmath>

#include "qic/errors.hpp"

namespace qic {

DensityMatrix decohere(const DensityMatrix& rho, const DecoherenceParams& params) {
  if (rho.matrix().rows() != 2)
    throw input_error("decohere: expected a single-qubit density matrix");
  if (!(params.tau > 0.0)) throw input_error("decohere: tau must be positive");
  if (!(params.t >= 0.0)) throw input_error("decohere: t must be non-negative");
  const double damp = std::exp(-params.t / params.tau);
  ComplexMatrix m = rho.matrix();
  m(0, 1) *= damp;
  m(1, 0) *= damp;
  return DensityMatrix(m, rho.dims());
}

PauliErrorResult pauli_error(int k, const QubitState& q) {
  // Error operators in the real-representative convention: the bit+phase
  // flip is written as i * (bit flip)(phase flip), so its i is reported as a
  // global phase and the stored amplitudes stay a real combination of the
  // input's.
  switch (k) {
    case 1:  // bit flip
      return PauliErrorResult{QubitState(q.psi1(), q.psi0()), Complex(1.0, 0.0)};
    case 2:  // bit+phase flip
      return PauliErrorResult{QubitState(-q.psi1(), q.psi0()), Complex(0.0, 1.0)};
    case 3:  // phase flip
      return PauliErrorResult{QubitState(q.psi0(), -q.psi1()), Complex(1.0, 0.0)};
    default:
      throw input_error("pauli_error: k must be 1, 2, or 3");
  }
}

}  // namespace qic
