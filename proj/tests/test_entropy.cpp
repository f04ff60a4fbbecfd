// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The qft-infocalc Authors
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qic/entropy.hpp"
#include "qic/errors.hpp"
#include "qic/linalg.hpp"
#include "qic/random.hpp"
#include "qic/states.hpp"

using namespace qic;

namespace {

DensityMatrix random_pure(Rng& rng, std::size_t dim, std::vector<std::size_t> dims) {
  return density_from_statevector(rng.random_state(dim), std::move(dims));
}

DensityMatrix random_two_qubit_full_rank(Rng& rng) {
  return DensityMatrix(rng.random_density_full_rank(4), {2, 2});
}

// Werner state: p * Bell + (1-p)/4 * I
DensityMatrix werner(double p) {
  ComplexMatrix m = bell_state().matrix() * Complex(p, 0.0) +
                    ComplexMatrix::identity(4) * Complex((1.0 - p) / 4.0, 0.0);
  return DensityMatrix(std::move(m), {2, 2});
}

}  // namespace

TEST_CASE("shannon_entropy: oracles and validation") {
  CHECK(shannon_entropy({1.0}) == 0.0);
  CHECK(shannon_entropy({0.5, 0.5}) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(shannon_entropy({0.25, 0.25, 0.25, 0.25}) ==
        doctest::Approx(2.0).epsilon(1e-14));
  CHECK(shannon_entropy({0.5, 0.5, 0.0}) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK_THROWS_AS(shannon_entropy({}), input_error);
  CHECK_THROWS_AS(shannon_entropy({0.5, -0.1, 0.6}), input_error);
  CHECK_THROWS_AS(shannon_entropy({0.5, 0.4}), input_error);
}

TEST_CASE("von Neumann entropy: pure and maximally mixed oracles") {
  CHECK(std::abs(von_neumann_entropy(bell_state())) <= 1e-10);
  CHECK(std::abs(von_neumann_entropy(ghz_state())) <= 1e-10);
  const DensityMatrix mixed(ComplexMatrix::identity(2) * Complex(0.5, 0.0), {2});
  CHECK(von_neumann_entropy(mixed) == doctest::Approx(1.0).epsilon(1e-12));
  // reduced Bell is maximally mixed: entropy exactly one bit
  CHECK(von_neumann_entropy(bell_state().reduced({0})) ==
        doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("von Neumann entropy is unitarily invariant") {
  Rng rng(41);
  for (int rep = 0; rep < 10; ++rep) {
    const DensityMatrix rho = random_two_qubit_full_rank(rng);
    const ComplexMatrix u = tensor(rng.random_unitary2(), rng.random_unitary2());
    const DensityMatrix rotated(u * rho.matrix() * u.adjoint(), {2, 2});
    CHECK(von_neumann_entropy(rotated) ==
          doctest::Approx(von_neumann_entropy(rho)).epsilon(1e-9));
  }
}

TEST_CASE("conditional entropy of a Bell pair is minus one bit") {
  for (std::size_t cond : {0u, 1u}) {
    const EntropyReport r = conditional_entropy(bell_state(), cond);
    CHECK(std::abs(r.value - (-1.0)) <= 1e-10);
    CHECK(r.method == EntropyMethod::spectral_difference);
    CHECK(r.support_rank == 1);
    CHECK_FALSE(r.operator_value.has_value());  // rank-deficient: no operator form
  }
}

TEST_CASE("conditional entropy of the symmetric Werner state (frozen value)") {
  const EntropyReport r = conditional_entropy(werner(0.5), 1);
  CHECK(r.value == doctest::Approx(0.548794940695).epsilon(1e-9));
  CHECK(r.support_rank == 4);
  REQUIRE(r.operator_value.has_value());
  CHECK(std::abs(*r.operator_value - r.value) <= 1e-8);
}

TEST_CASE("operator form agrees with spectral difference on full-rank states") {
  Rng rng(42);
  for (int rep = 0; rep < 100; ++rep) {
    const DensityMatrix rho = random_two_qubit_full_rank(rng);
    for (std::size_t cond : {0u, 1u}) {
      const EntropyReport r = conditional_entropy(rho, cond);
      REQUIRE(r.operator_value.has_value());
      CHECK(std::abs(*r.operator_value - r.value) <= 1e-8);
    }
  }
}

TEST_CASE("conditional amplitude operator exists only on full support") {
  Rng rng(43);
  const DensityMatrix full = random_two_qubit_full_rank(rng);
  const ComplexMatrix amp = conditional_amplitude_operator(full, 1);
  // exp(-sigma) is Hermitian positive definite
  CHECK(amp.is_hermitian());
  const Spectrum s = herm_eig(amp);
  CHECK(s.eigenvalues.front() > 0.0);
  // and log(amp) recovers -sigma
  const ComplexMatrix sigma = conditional_entropy_operator(full, 1);
  const ComplexMatrix back =
      matrix_func_on_support(amp, [](double x) { return std::log(x); }, true) *
      Complex(-1.0, 0.0);
  CHECK(back.max_abs_diff(sigma) <= 1e-9);

  CHECK_THROWS_AS(conditional_amplitude_operator(bell_state(), 1), input_error);
  CHECK_THROWS_AS(conditional_entropy_operator(bell_state(), 1), input_error);
}

TEST_CASE("mutual entropy: Bell pair carries two bits, product states none") {
  CHECK(mutual_entropy(bell_state()) == doctest::Approx(2.0).epsilon(1e-10));
  Rng rng(44);
  const ComplexMatrix a = rng.random_density_full_rank(2);
  const ComplexMatrix b = rng.random_density_full_rank(2);
  const DensityMatrix prod(tensor(a, b), {2, 2});
  CHECK(std::abs(mutual_entropy(prod)) <= 1e-9);
}

TEST_CASE("mutual entropy is non-negative on random states") {
  Rng rng(45);
  for (int rep = 0; rep < 30; ++rep) {
    CHECK(mutual_entropy(random_two_qubit_full_rank(rng)) >= -1e-9);
    CHECK(mutual_entropy(random_pure(rng, 4, {2, 2})) >= -1e-9);
  }
}

TEST_CASE("GHZ tripartite bookkeeping") {
  const DensityMatrix ghz = ghz_state();
  // ternary mutual entropy vanishes
  CHECK(std::abs(ternary_mutual_entropy(ghz, 0, 1, 2)) <= 1e-10);
  // conditional mutual entropy is one bit
  CHECK(conditional_mutual_entropy(ghz, 0, 1, 2) ==
        doctest::Approx(1.0).epsilon(1e-10));
  const ChainRuleReport chain = chain_rule_check(ghz, 0, 1, 2);
  // the telescoping chain rule is an identity
  CHECK(chain.telescoping_residual <= 1e-12);
  // replacing S(d|u) by S(d) misses exactly the one bit of u-d correlation
  CHECK(chain.printed_form_residual == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("ternary mutual entropy vanishes for pure tripartite states") {
  Rng rng(46);
  for (int rep = 0; rep < 200; ++rep) {
    const DensityMatrix rho = random_pure(rng, 8, {2, 2, 2});
    CHECK(std::abs(ternary_mutual_entropy(rho, 0, 1, 2)) <= 1e-8);
  }
}

TEST_CASE("pure-state marginal pairs have equal entropy") {
  Rng rng(47);
  for (int rep = 0; rep < 50; ++rep) {
    const DensityMatrix rho = random_pure(rng, 8, {2, 2, 2});
    const double s_u = von_neumann_entropy(rho.reduced({0}));
    const double s_d = von_neumann_entropy(rho.reduced({1}));
    const double s_s = von_neumann_entropy(rho.reduced({2}));
    const double s_ud = von_neumann_entropy(rho.reduced({0, 1}));
    const double s_us = von_neumann_entropy(rho.reduced({0, 2}));
    const double s_ds = von_neumann_entropy(rho.reduced({1, 2}));
    CHECK(std::abs(s_ud - s_s) <= 1e-8);
    CHECK(std::abs(s_us - s_d) <= 1e-8);
    CHECK(std::abs(s_ds - s_u) <= 1e-8);
  }
}

TEST_CASE("chain rule telescopes exactly on random tripartite states") {
  Rng rng(48);
  for (int rep = 0; rep < 20; ++rep) {
    const DensityMatrix rho = random_pure(rng, 8, {2, 2, 2});
    CHECK(chain_rule_check(rho, 0, 1, 2).telescoping_residual <= 1e-10);
  }
}

TEST_CASE("conditional entropy input validation") {
  CHECK_THROWS_AS(conditional_entropy(bell_state(), 2), input_error);
  const DensityMatrix single(ComplexMatrix::diagonal({0.5, 0.5}), {2});
  CHECK_THROWS_AS(conditional_entropy(single, 0), input_error);  // not bipartite
  CHECK_THROWS_AS(ternary_mutual_entropy(bell_state(), 0, 1, 2), input_error);
  CHECK_THROWS_AS(conditional_mutual_entropy(ghz_state(), 0, 1, 1), input_error);
}

TEST_CASE("holographic bound: one square meter (frozen value)") {
  const double bits = holographic_bound_bits(1.0);
  CHECK(bits == doctest::Approx(1.380686e69).epsilon(1e-6));
  CHECK(holographic_bound_bits(0.0) == 0.0);
  CHECK(holographic_bound_bits(2.0) == doctest::Approx(2.0 * bits).epsilon(1e-14));
  CHECK_THROWS_AS(holographic_bound_bits(-1.0), input_error);
}
