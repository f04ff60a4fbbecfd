// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The qft-infocalc Authors
#include <benchmark/benchmark.h>

#include <numbers>

#include "qic/entropy.hpp"
#include "qic/linalg.hpp"
#include "qic/protocols.hpp"
#include "qic/random.hpp"
#include "qic/sigma_lattice.hpp"
#include "qic/states.hpp"
#include "qic/susyqm.hpp"

using namespace qic;

namespace {

ComplexMatrix random_hermitian(Rng& rng, std::size_t n) {
  ComplexMatrix a = ComplexMatrix::zero(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = rng.complex_gaussian();
  return (a + a.adjoint()) * Complex(0.5, 0.0);
}

void bm_herm_eig_complex(benchmark::State& state) {
  Rng rng(1);
  const ComplexMatrix h = random_hermitian(rng, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(herm_eig(h));
}
BENCHMARK(bm_herm_eig_complex)->Arg(16)->Arg(64);

void bm_herm_eig_real(benchmark::State& state) {
  // real-symmetric input exercises the solver's real fast path
  Rng rng(2);
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  ComplexMatrix a = ComplexMatrix::zero(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      const Complex v(rng.gaussian(), 0.0);
      a(i, j) = v;
      a(j, i) = v;
    }
  for (auto _ : state) benchmark::DoNotOptimize(herm_eig(a));
}
BENCHMARK(bm_herm_eig_real)->Arg(100)->Arg(200);

void bm_conditional_entropy(benchmark::State& state) {
  Rng rng(3);
  const DensityMatrix rho(rng.random_density_full_rank(4), {2, 2});
  for (auto _ : state) benchmark::DoNotOptimize(conditional_entropy(rho, 1));
}
BENCHMARK(bm_conditional_entropy);

void bm_teleport_branches(benchmark::State& state) {
  Rng rng(4);
  const CVector v = rng.random_state(2);
  const QubitState q(v[0], v[1]);
  for (auto _ : state) benchmark::DoNotOptimize(teleport_branches(q));
}
BENCHMARK(bm_teleport_branches);

void bm_sigma_step(benchmark::State& state) {
  const std::size_t sites = static_cast<std::size_t>(state.range(0));
  const double dx = 2.0 * std::numbers::pi / static_cast<double>(sites);
  LatticeField f = spin_wave_field(sites, dx, 0.1 * dx, 1, 0.1);
  for (auto _ : state) {
    f = step(f);
    benchmark::DoNotOptimize(f);
  }
}
BENCHMARK(bm_sigma_step)->Arg(64)->Arg(1024);

void bm_build_susy_model(benchmark::State& state) {
  const auto v = make_superpotential(PotentialKind::tanh);
  const GridSpec grid{-8.0, 8.0, static_cast<std::size_t>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(build_model(v, grid));
}
BENCHMARK(bm_build_susy_model)->Arg(64)->Arg(200);

void bm_sector_spectrum(benchmark::State& state) {
  const SusyModel m = build_model(make_superpotential(PotentialKind::linear),
                                  GridSpec{-8.0, 8.0, static_cast<std::size_t>(state.range(0))});
  for (auto _ : state) benchmark::DoNotOptimize(sector_spectrum(m, 1));
}
BENCHMARK(bm_sector_spectrum)->Arg(64)->Arg(120);

}  // namespace

BENCHMARK_MAIN();
