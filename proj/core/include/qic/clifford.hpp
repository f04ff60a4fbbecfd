// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The qft-infocalc Authors
#pragma once

#include "qic/complex_matrix.hpp"
#include "qic/states.hpp"

namespace qic {

// Two-dimensional Dirac representation: gamma0 = i sigma_2, gamma1 = sigma_3,
// gamma5 = gamma0 gamma1, metric eta = diag(-1, 1).
struct GammaRep {
  ComplexMatrix gamma0, gamma1, gamma5, eta;
};

GammaRep make_gamma_rep();

struct AlgebraReport {
  double max_deviation;
  bool pass;  // deviation within the stated bound (0 for the canonical reps)
};

// Verifies {gamma^mu, gamma^nu} = 2 eta^{mu nu} I over all index pairs.
// The canonical representation has integer entries, so the deviation is
// exactly zero.
AlgebraReport check_clifford(const GammaRep& rep);

// Dirac-adjoint image of a qubit: a covector stored as coefficients
// (coefficient of <0|, coefficient of <1|) = (-psi1*, psi0*).
struct Antiqubit {
  Complex coeff_bra0, coeff_bra1;
};

Antiqubit dirac_adjoint(const QubitState& q);

// Natural embedding of the covector back into a ket (component k of the ket
// is the coefficient of <k|). Applying dirac_adjoint twice through this
// embedding gives exactly -psi.
QubitState antiqubit_as_ket(const Antiqubit& a);

// Density matrix of the adjoint state: the qubit density matrix with both
// off-diagonal entries negated (= sigma_3 rho sigma_3, spectrum unchanged).
DensityMatrix antiqubit_density(const QubitState& q);

// Verifies Phi_j Phi_k = delta_jk I + i eps_jk^l Phi_l for a triple of 2x2
// observables. The Pauli triple passes with deviation exactly zero; any
// common unitary rotation of it passes within 1e-12.
AlgebraReport check_qubit_field_algebra(const ComplexMatrix& f1,
                                        const ComplexMatrix& f2,
                                        const ComplexMatrix& f3);

}  // namespace qic
