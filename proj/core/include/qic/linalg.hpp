// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The qft-infocalc Authors
#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "qic/complex_matrix.hpp"

namespace qic {

// Eigendecomposition of a Hermitian matrix. Eigenvalues ascending; eigenvector
// k is column k of `eigenvectors`. Deterministic for identical input:
// fixed sweep order, tie-broken ordering, canonical phases.
struct Spectrum {
  std::vector<double> eigenvalues;
  ComplexMatrix eigenvectors;

  CVector eigenvector(std::size_t k) const;
};

// Relative support cutoff: eigenvalues at or below this fraction of the
// largest |eigenvalue| count as off the support.
inline constexpr double kSupportCutoffRel = 1e-12;

// Pauli matrices sigma_1, sigma_2, sigma_3 (k in {1,2,3}).
ComplexMatrix pauli(int k);

// Kronecker product; the first factor is the most significant index block:
// (a (x) b)[(i*rows_b + k), (j*cols_b + l)] = a[i,j] * b[k,l].
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);
CVector tensor(const CVector& a, const CVector& b);

// Reduced matrix over the kept subsystems; trace preserved. `dims` are the
// subsystem dimensions in tensor order, `keep` the (sorted, nonempty) indices
// of subsystems to retain.
ComplexMatrix partial_trace(const ComplexMatrix& m,
                            const std::vector<std::size_t>& dims,
                            const std::vector<std::size_t>& keep);

// Cyclic-Jacobi eigensolver for Hermitian matrices, with a fast path for
// matrices whose entries are all real (real-symmetric rotation arithmetic).
// Throws input_error when the input is not Hermitian within 1e-12 (scaled by
// max(1, max|entry|)).
Spectrum herm_eig(const ComplexMatrix& m);

// f applied to eigenvalues strictly greater than support_cutoff; eigenvalues
// at or below the cutoff map to 0 (the 0*log 0 = 0 convention). When
// require_psd is set, an eigenvalue below -1e-10 raises input_error.
ComplexMatrix matrix_func_on_support(const ComplexMatrix& m,
                                     const std::function<double(double)>& f,
                                     double support_cutoff,
                                     bool require_psd = false);

// Same, with the default cutoff 1e-12 relative to the largest |eigenvalue|.
ComplexMatrix matrix_func_on_support(const ComplexMatrix& m,
                                     const std::function<double(double)>& f,
                                     bool require_psd = false);

// Number of eigenvalues above the default relative support cutoff.
std::size_t support_rank(const Spectrum& s);

// exp(m) for Hermitian m: every eigenvalue is mapped (cutoff -infinity), so
// exp of the zero matrix is the identity.
ComplexMatrix matrix_exp_hermitian(const ComplexMatrix& m);

}  // namespace qic
