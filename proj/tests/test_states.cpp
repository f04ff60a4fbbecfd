// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The qft-infocalc Authors
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qic/errors.hpp"
#include "qic/linalg.hpp"
#include "qic/random.hpp"
#include "qic/states.hpp"

using namespace qic;

TEST_CASE("QubitState enforces normalization") {
  CHECK_NOTHROW(QubitState(Complex(0.6), Complex(0.8)));
  CHECK_NOTHROW(QubitState(Complex(0.0, 1.0), Complex(0.0)));
  CHECK_THROWS_AS(QubitState(Complex(1.0), Complex(1.0)), input_error);
  CHECK_THROWS_AS(QubitState(Complex(0.0), Complex(0.0)), input_error);
  const QubitState def;  // default is |0>
  CHECK(def.psi0() == Complex(1.0));
  CHECK(def.psi1() == Complex(0.0));
}

TEST_CASE("DensityMatrix validates hermiticity, trace, and positivity") {
  ComplexMatrix not_herm = ComplexMatrix::zero(2, 2);
  not_herm(0, 0) = Complex(0.5);
  not_herm(1, 1) = Complex(0.5);
  not_herm(0, 1) = Complex(0.3);
  not_herm(1, 0) = Complex(-0.3);
  CHECK_THROWS_AS(DensityMatrix(not_herm, {2}), input_error);

  CHECK_THROWS_AS(DensityMatrix(ComplexMatrix::identity(2), {2}), input_error);  // trace 2

  CHECK_THROWS_AS(DensityMatrix(ComplexMatrix::diagonal({1.5, -0.5}), {2}),
                  input_error);  // negative eigenvalue

  CHECK_THROWS_AS(DensityMatrix(ComplexMatrix::diagonal({0.5, 0.5}), {3}),
                  input_error);  // dims product mismatch

  CHECK_NOTHROW(DensityMatrix(ComplexMatrix::diagonal({0.5, 0.5}), {2}));
}

TEST_CASE("bell_state has the maximally entangled structure") {
  const DensityMatrix bell = bell_state();
  REQUIRE(bell.dims() == std::vector<std::size_t>{2, 2});
  CHECK(bell.matrix()(0, 0) == Complex(0.5));
  CHECK(bell.matrix()(0, 3) == Complex(0.5));
  CHECK(bell.matrix()(3, 0) == Complex(0.5));
  CHECK(bell.matrix()(3, 3) == Complex(0.5));
  CHECK(bell.matrix()(1, 1) == Complex(0.0));
  CHECK(bell.matrix()(2, 2) == Complex(0.0));
  CHECK(support_rank(herm_eig(bell.matrix())) == 1);  // pure
}

TEST_CASE("ghz_state is the three-party analogue") {
  const DensityMatrix ghz = ghz_state();
  REQUIRE(ghz.dims() == std::vector<std::size_t>{2, 2, 2});
  CHECK(ghz.matrix()(0, 0) == Complex(0.5));
  CHECK(ghz.matrix()(0, 7) == Complex(0.5));
  CHECK(ghz.matrix()(7, 0) == Complex(0.5));
  CHECK(ghz.matrix()(7, 7) == Complex(0.5));
  CHECK(ghz.matrix()(3, 3) == Complex(0.0));
  CHECK(support_rank(herm_eig(ghz.matrix())) == 1);
}

TEST_CASE("reduced state of a Bell pair is maximally mixed") {
  const DensityMatrix bell = bell_state();
  for (std::size_t keep : {0u, 1u}) {
    const DensityMatrix r = bell.reduced({keep});
    REQUIRE(r.dims() == std::vector<std::size_t>{2});
    CHECK(r.matrix()(0, 0) == Complex(0.5));
    CHECK(r.matrix()(1, 1) == Complex(0.5));
    CHECK(r.matrix()(0, 1) == Complex(0.0));
  }
  // GHZ two-party marginal is the classically correlated mixture
  const DensityMatrix pair = ghz_state().reduced({0, 1});
  CHECK(pair.matrix()(0, 0) == Complex(0.5));
  CHECK(pair.matrix()(3, 3) == Complex(0.5));
  CHECK(pair.matrix()(0, 3) == Complex(0.0));
}

TEST_CASE("density_of builds a rank-1 projector") {
  Rng rng(21);
  for (int rep = 0; rep < 20; ++rep) {
    const CVector v = rng.random_state(2);
    const QubitState q(v[0], v[1]);
    const DensityMatrix rho = density_of(q);  // construction enforces invariants
    CHECK(std::abs(rho.matrix().trace() - Complex(1.0)) <= 1e-12);
    const Spectrum s = herm_eig(rho.matrix());
    CHECK(std::abs(s.eigenvalues[0]) <= 1e-10);  // rank 1
    CHECK(s.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("density_from_statevector reproduces the built-in Bell state") {
  const double r = 1.0 / std::sqrt(2.0);
  const DensityMatrix rho = density_from_statevector(
      {Complex(r), Complex(0.0), Complex(0.0), Complex(r)}, {2, 2});
  CHECK(rho.matrix().max_abs_diff(bell_state().matrix()) <= 1e-15);
  CHECK_THROWS_AS(density_from_statevector({Complex(1.0)}, {2}), input_error);
}

TEST_CASE("projectors are exact and complementary") {
  const ComplexMatrix p0 = projector0();
  const ComplexMatrix p1 = projector1();
  CHECK((p0 + p1).max_abs_diff(ComplexMatrix::identity(2)) == 0.0);
  CHECK(p0.operator*(p1).max_abs() == 0.0);
  CHECK(p0.operator*(p0).max_abs_diff(p0) == 0.0);
  CHECK(p1.operator*(p1).max_abs_diff(p1) == 0.0);
}

TEST_CASE("measure reports Born probabilities and normalized branches") {
  const QubitState q(Complex(0.6), Complex(0.0, 0.8));
  const MeasureResult m = measure(q);
  CHECK(m.prob0 == doctest::Approx(0.36).epsilon(1e-12));
  CHECK(m.prob1 == doctest::Approx(0.64).epsilon(1e-12));
  CHECK(m.prob0 + m.prob1 == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(norm2(m.collapsed0.amplitudes()) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(norm2(m.collapsed1.amplitudes()) == doctest::Approx(1.0).epsilon(1e-12));

  // zero-probability branch collapses to the basis ket
  const MeasureResult z = measure(QubitState(Complex(1.0), Complex(0.0)));
  CHECK(z.prob1 == 0.0);
  CHECK(z.collapsed1.psi1() == Complex(1.0));
}

TEST_CASE("measurement probabilities sum to one for random states") {
  Rng rng(22);
  for (int rep = 0; rep < 50; ++rep) {
    const CVector v = rng.random_state(2);
    const MeasureResult m = measure(QubitState(v[0], v[1]));
    CHECK(std::abs(m.prob0 + m.prob1 - 1.0) <= 1e-12);
  }
}
