// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The qft-infocalc Authors
//
// Single-qubit error processes: exponential phase decoherence acting on
// density matrices, and the discrete Pauli error set acting on pure states.
#pragma once

#include "qic/complex_matrix.hpp"
#include "qic/states.hpp"

namespace qic {

struct DecoherenceParams {
  double t = 0.0;    // elapsed time; must be >= 0
  double tau = 1.0;  // decoherence time constant; must be > 0
};

// Phase decoherence on a single-qubit density matrix: diagonal entries are
// untouched, off-diagonal entries are scaled by exp(-t/tau). Forms a
// semigroup in t: decohere(t1) then decohere(t2) equals decohere(t1+t2).
DensityMatrix decohere(const DensityMatrix& rho, const DecoherenceParams& params);

struct PauliErrorResult {
  QubitState state;            // the corrupted state, normalized
  Complex global_phase{1.0};   // phase factor pulled out so `state` keeps
                               // the representative amplitude convention
};

// Applies the k-th Pauli error (k in {1,2,3}: bit flip, bit+phase flip,
// phase flip) to a pure qubit state. Each error is an involution up to the
// reported global phase.
PauliErrorResult pauli_error(int k, const QubitState& q);

}  // namespace qic
