// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The qft-infocalc Authors
#include "qic/clifford.hpp"

#include <algorithm>
#include <cmath>

#include "qic/errors.hpp"
#include "qic/linalg.hpp"

namespace qic {

GammaRep make_gamma_rep() {
  GammaRep rep;
  rep.gamma0 = ComplexMatrix::from_rows({{0.0, 1.0}, {-1.0, 0.0}});  // i sigma_2
  rep.gamma1 = pauli(3);
  rep.gamma5 = rep.gamma0 * rep.gamma1;
  rep.eta = ComplexMatrix::from_rows({{-1.0, 0.0}, {0.0, 1.0}});
  return rep;
}

AlgebraReport check_clifford(const GammaRep& rep) {
  const ComplexMatrix* g[2] = {&rep.gamma0, &rep.gamma1};
  const ComplexMatrix id = ComplexMatrix::identity(2);
  double dev = 0.0;
  for (int mu = 0; mu < 2; ++mu)
    for (int nu = 0; nu < 2; ++nu) {
      const ComplexMatrix anti = (*g[mu]) * (*g[nu]) + (*g[nu]) * (*g[mu]);
      const ComplexMatrix expected = id * (2.0 * rep.eta(mu, nu));
      dev = std::max(dev, anti.max_abs_diff(expected));
    }
  return AlgebraReport{dev, dev == 0.0};
}

Antiqubit dirac_adjoint(const QubitState& q) {
  // psi-bar = psi^dagger gamma0: row vector (psi0*, psi1*) [[0,1],[-1,0]]
  // = (-psi1*, psi0*) in the (<0|, <1|) basis.
  return Antiqubit{-std::conj(q.psi1()), std::conj(q.psi0())};
}

QubitState antiqubit_as_ket(const Antiqubit& a) {
  return QubitState(a.coeff_bra0, a.coeff_bra1);
}

DensityMatrix antiqubit_density(const QubitState& q) {
  ComplexMatrix m = density_of(q).matrix();
  m(0, 1) = -m(0, 1);
  m(1, 0) = -m(1, 0);
  return DensityMatrix(m, {2});
}

AlgebraReport check_qubit_field_algebra(const ComplexMatrix& f1,
                                        const ComplexMatrix& f2,
                                        const ComplexMatrix& f3) {
  const ComplexMatrix* f[3] = {&f1, &f2, &f3};
  for (const auto* m : f)
    if (m->rows() != 2 || m->cols() != 2 || !m->is_hermitian(1e-12))
      throw input_error("check_qubit_field_algebra: observables must be Hermitian 2x2");
  const ComplexMatrix id = ComplexMatrix::identity(2);
  const Complex i_unit(0.0, 1.0);
  auto levi_civita = [](int j, int k, int l) -> double {
    if (j == k || k == l || j == l) return 0.0;
    // parity of the permutation (j,k,l) of (0,1,2)
    return ((k - j + 3) % 3 == 1) ? 1.0 : -1.0;
  };
  double dev = 0.0;
  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 3; ++k) {
      ComplexMatrix expected = j == k ? id : ComplexMatrix::zero(2, 2);
      for (int l = 0; l < 3; ++l) {
        const double eps = levi_civita(j, k, l);
        if (eps != 0.0) expected = expected + (*f[l]) * (i_unit * eps);
      }
      dev = std::max(dev, ((*f[j]) * (*f[k])).max_abs_diff(expected));
    }
  return AlgebraReport{dev, dev <= 1e-12};
}

}  // namespace qic
