// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The qft-infocalc Authors
//
// Entropy measures for density matrices: von Neumann entropy, conditional
// entropy (with an operator-based cross-check), mutual information and its
// conditional/ternary extensions, an entropy chain-rule diagnostic, and the
// holographic area bound on information content.
#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "qic/complex_matrix.hpp"
#include "qic/states.hpp"

namespace qic {

// Shannon entropy in bits of a probability vector. Entries must be
// non-negative and sum to 1 within 1e-10. Zero entries contribute zero.
double shannon_entropy(const std::vector<double>& probs);

// Von Neumann entropy in bits: S(rho) = -Tr[rho log2 rho], computed from the
// eigenvalue spectrum. Eigenvalues below the support cutoff contribute zero.
double von_neumann_entropy(const DensityMatrix& rho);

// How a conditional entropy value was obtained.
enum class EntropyMethod {
  spectral_difference,  // S(A|B) = S(AB) - S(B) from eigenvalue spectra
  conditional_operator  // Tr[rho sigma]/ln 2 with sigma the conditional
                        // entropy operator (full-rank states only)
};

struct EntropyReport {
  double value = 0.0;          // conditional entropy in bits (authoritative)
  EntropyMethod method = EntropyMethod::spectral_difference;
  std::size_t support_rank = 0;  // rank of the joint state's support
  // Operator-form value Tr[rho sigma]/ln 2, present only when the joint state
  // is full rank so the conditional entropy operator exists.
  std::optional<double> operator_value;
};

// Conditional entropy operator sigma = I (x) ln rho_B - ln rho_AB (natural
// logs), for a bipartite state. `condition_on` selects which subsystem plays
// the role of B (the conditioner): 0 or 1 indexing rho's dims, which must
// have exactly two factors. Throws input_error if the joint state is
// rank-deficient; rank-deficient states have a well-defined conditional
// entropy via conditional_entropy() but no conditional amplitude operator.
ComplexMatrix conditional_entropy_operator(const DensityMatrix& rho_ab,
                                           std::size_t condition_on);

// Conditional amplitude operator exp(-sigma). Same preconditions as
// conditional_entropy_operator.
ComplexMatrix conditional_amplitude_operator(const DensityMatrix& rho_ab,
                                             std::size_t condition_on);

// S(A|B) = S(AB) - S(B) in bits for a bipartite state. `condition_on`
// selects the conditioning subsystem B. The spectral difference is always the
// returned value; when the joint state is full rank the operator-form value
// is also computed and reported for cross-checking.
EntropyReport conditional_entropy(const DensityMatrix& rho_ab,
                                  std::size_t condition_on);

// Mutual information S(A) + S(B) - S(AB) in bits for a bipartite state.
double mutual_entropy(const DensityMatrix& rho_ab);

// Conditional mutual information S(U|S) + S(D|S) - S(UD|S) in bits, i.e.
// S(US) + S(DS) - S(S) - S(UDS), for a tripartite state with subsystem
// indices u, d, s into rho's dims.
double conditional_mutual_entropy(const DensityMatrix& rho, std::size_t u,
                                  std::size_t d, std::size_t s);

// Ternary mutual information
//   S(U)+S(D)+S(S) - S(UD)-S(US)-S(DS) + S(UDS), in bits.
// Vanishes for pure tripartite states.
double ternary_mutual_entropy(const DensityMatrix& rho, std::size_t u,
                              std::size_t d, std::size_t s);

struct ChainRuleReport {
  // |S(UDS) - S(U) - S(D|U) - S(S|UD)|: the telescoping chain rule, an
  // identity for every state.
  double telescoping_residual = 0.0;
  // |S(UDS) - S(U) - S(D) - S(S|UD)|: the same expression with the
  // unconditioned S(D) in place of S(D|U). Vanishes only when U and D are
  // uncorrelated; its size measures the U-D correlations.
  double printed_form_residual = 0.0;
};

// Evaluates both chain-rule residuals for a tripartite state.
ChainRuleReport chain_rule_check(const DensityMatrix& rho, std::size_t u,
                                 std::size_t d, std::size_t s);

// Maximum information content in bits of a region bounded by `area_m2`
// square meters: A / (4 l_p^2 ln 2) with the Planck length from CODATA
// constants. Throws input_error for negative area.
double holographic_bound_bits(double area_m2);

}  // namespace qic
