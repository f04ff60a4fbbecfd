// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The qft-infocalc Authors
#include "qic/entropy.hpp"

#include <cmath>
#include <numeric>

#include "qic/errors.hpp"
#include "qic/linalg.hpp"

namespace qic {

namespace {

constexpr double kLn2 = 0.69314718055994530941723212145818;

// Eigenvalues of a density matrix, clipped to the support: entries at or
// below the relative support cutoff are dropped.
std::vector<double> support_eigenvalues(const DensityMatrix& rho) {
  const Spectrum spec = herm_eig(rho.matrix());
  double max_abs = 0.0;
  for (double lam : spec.eigenvalues) max_abs = std::max(max_abs, std::abs(lam));
  const double cutoff = kSupportCutoffRel * max_abs;
  std::vector<double> out;
  out.reserve(spec.eigenvalues.size());
  for (double lam : spec.eigenvalues)
    if (lam > cutoff) out.push_back(lam);
  return out;
}

double entropy_bits_from_eigenvalues(const std::vector<double>& lams) {
  double s = 0.0;
  for (double lam : lams) s -= lam * std::log(lam);
  return s / kLn2;
}

void require_bipartite(const DensityMatrix& rho, std::size_t condition_on,
                       const char* who) {
  if (rho.dims().size() != 2)
    throw input_error(std::string(who) + ": state must be bipartite (two subsystem dims)");
  if (condition_on > 1)
    throw input_error(std::string(who) + ": condition_on must be 0 or 1");
}

void require_subsystems(const DensityMatrix& rho, std::size_t u, std::size_t d,
                        std::size_t s, const char* who) {
  const std::size_t k = rho.dims().size();
  if (u >= k || d >= k || s >= k)
    throw input_error(std::string(who) + ": subsystem index out of range");
  if (u == d || u == s || d == s)
    throw input_error(std::string(who) + ": subsystem indices must be distinct");
}

// Natural-log matrix logarithm on the support; throws if the matrix is
// rank-deficient relative to its largest eigenvalue.
ComplexMatrix log_full_rank(const ComplexMatrix& m, const char* who) {
  const Spectrum spec = herm_eig(m);
  double max_abs = 0.0;
  for (double lam : spec.eigenvalues) max_abs = std::max(max_abs, std::abs(lam));
  const double cutoff = kSupportCutoffRel * max_abs;
  for (double lam : spec.eigenvalues)
    if (lam <= cutoff)
      throw input_error(std::string(who) +
                        ": state is rank-deficient, so the conditional operator does not "
                        "exist; use conditional_entropy, which handles rank-deficient "
                        "states via the spectral difference");
  return matrix_func_on_support(m, [](double x) { return std::log(x); }, cutoff);
}

}  // namespace

double shannon_entropy(const std::vector<double>& probs) {
  if (probs.empty()) throw input_error("shannon_entropy: empty probability vector");
  double sum = 0.0;
  for (double p : probs) {
    if (!(p >= 0.0)) throw input_error("shannon_entropy: probabilities must be non-negative");
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-10)
    throw input_error("shannon_entropy: probabilities must sum to 1");
  double s = 0.0;
  for (double p : probs)
    if (p > 0.0) s -= p * std::log(p);
  return s / kLn2;
}

double von_neumann_entropy(const DensityMatrix& rho) {
  return entropy_bits_from_eigenvalues(support_eigenvalues(rho));
}

ComplexMatrix conditional_entropy_operator(const DensityMatrix& rho_ab,
                                           std::size_t condition_on) {
  require_bipartite(rho_ab, condition_on, "conditional_entropy_operator");
  const DensityMatrix rho_b = rho_ab.reduced({condition_on});
  const ComplexMatrix log_ab = log_full_rank(rho_ab.matrix(), "conditional_entropy_operator");
  const ComplexMatrix log_b = log_full_rank(rho_b.matrix(), "conditional_entropy_operator");
  const std::size_t dim_other = rho_ab.dims()[1 - condition_on];
  const ComplexMatrix id_other = ComplexMatrix::identity(dim_other);
  // sigma = I_A (x) ln rho_B - ln rho_AB, with the identity placed on the
  // non-conditioning slot so the tensor factor ordering matches rho's dims.
  const ComplexMatrix embedded = condition_on == 1 ? tensor(id_other, log_b)
                                                   : tensor(log_b, id_other);
  return embedded - log_ab;
}

ComplexMatrix conditional_amplitude_operator(const DensityMatrix& rho_ab,
                                             std::size_t condition_on) {
  const ComplexMatrix sigma = conditional_entropy_operator(rho_ab, condition_on);
  return matrix_exp_hermitian(sigma * Complex(-1.0, 0.0));
}

EntropyReport conditional_entropy(const DensityMatrix& rho_ab,
                                  std::size_t condition_on) {
  require_bipartite(rho_ab, condition_on, "conditional_entropy");
  const DensityMatrix rho_b = rho_ab.reduced({condition_on});

  const std::vector<double> joint_support = support_eigenvalues(rho_ab);
  EntropyReport report;
  report.value = entropy_bits_from_eigenvalues(joint_support) - von_neumann_entropy(rho_b);
  report.method = EntropyMethod::spectral_difference;
  report.support_rank = joint_support.size();

  if (report.support_rank == rho_ab.matrix().rows()) {
    const ComplexMatrix sigma = conditional_entropy_operator(rho_ab, condition_on);
    report.operator_value = (rho_ab.matrix() * sigma).trace().real() / kLn2;
  }
  return report;
}

double mutual_entropy(const DensityMatrix& rho_ab) {
  if (rho_ab.dims().size() != 2)
    throw input_error("mutual_entropy: state must be bipartite (two subsystem dims)");
  return von_neumann_entropy(rho_ab.reduced({0})) +
         von_neumann_entropy(rho_ab.reduced({1})) - von_neumann_entropy(rho_ab);
}

double conditional_mutual_entropy(const DensityMatrix& rho, std::size_t u,
                                  std::size_t d, std::size_t s) {
  require_subsystems(rho, u, d, s, "conditional_mutual_entropy");
  auto sorted = [](std::size_t a, std::size_t b) {
    return a < b ? std::vector<std::size_t>{a, b} : std::vector<std::size_t>{b, a};
  };
  return von_neumann_entropy(rho.reduced(sorted(u, s))) +
         von_neumann_entropy(rho.reduced(sorted(d, s))) -
         von_neumann_entropy(rho.reduced({s})) - von_neumann_entropy(rho);
}

double ternary_mutual_entropy(const DensityMatrix& rho, std::size_t u,
                              std::size_t d, std::size_t s) {
  require_subsystems(rho, u, d, s, "ternary_mutual_entropy");
  auto sorted = [](std::size_t a, std::size_t b) {
    return a < b ? std::vector<std::size_t>{a, b} : std::vector<std::size_t>{b, a};
  };
  return von_neumann_entropy(rho.reduced({u})) + von_neumann_entropy(rho.reduced({d})) +
         von_neumann_entropy(rho.reduced({s})) -
         von_neumann_entropy(rho.reduced(sorted(u, d))) -
         von_neumann_entropy(rho.reduced(sorted(u, s))) -
         von_neumann_entropy(rho.reduced(sorted(d, s))) + von_neumann_entropy(rho);
}

ChainRuleReport chain_rule_check(const DensityMatrix& rho, std::size_t u,
                                 std::size_t d, std::size_t s) {
  require_subsystems(rho, u, d, s, "chain_rule_check");
  auto sorted = [](std::size_t a, std::size_t b) {
    return a < b ? std::vector<std::size_t>{a, b} : std::vector<std::size_t>{b, a};
  };
  const double s_uds = von_neumann_entropy(rho);
  const double s_u = von_neumann_entropy(rho.reduced({u}));
  const double s_d = von_neumann_entropy(rho.reduced({d}));
  const double s_ud = von_neumann_entropy(rho.reduced(sorted(u, d)));
  // Conditional pieces expressed as entropy differences.
  const double s_d_given_u = s_ud - s_u;
  const double s_s_given_ud = s_uds - s_ud;
  ChainRuleReport report;
  report.telescoping_residual = std::abs(s_uds - s_u - s_d_given_u - s_s_given_ud);
  report.printed_form_residual = std::abs(s_uds - s_u - s_d - s_s_given_ud);
  return report;
}

double holographic_bound_bits(double area_m2) {
  if (!(area_m2 >= 0.0)) throw input_error("holographic_bound_bits: area must be non-negative");
  constexpr double kHbar = 1.054571817e-34;   // J s
  constexpr double kG = 6.67430e-11;          // m^3 kg^-1 s^-2
  constexpr double kC = 299792458.0;          // m s^-1
  const double planck_length_sq = kHbar * kG / (kC * kC * kC);
  return area_m2 / (4.0 * planck_length_sq * kLn2);
}

}  // namespace qic
