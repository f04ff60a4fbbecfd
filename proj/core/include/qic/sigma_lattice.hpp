// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The qft-infocalc Authors
//
// Bosonic O(3) sigma model on a periodic 1-D lattice: unit 3-vector fields
// phi_i with equation of motion  phi'' = Lap(phi) + lambda * phi, the
// Lagrange multiplier enforcing |phi_i| = 1. Integration is a constrained
// leapfrog (SHAKE position projection plus RATTLE velocity projection), so
// the sphere constraint holds to machine precision at every step and energy
// drift is second order in the time step.
#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace qic {

using Vec3 = std::array<double, 3>;

struct LatticeField {
  std::size_t sites = 0;  // periodic lattice size
  double dx = 0.0;        // lattice spacing
  double dt = 0.0;        // integration time step (must satisfy dt < dx)
  std::vector<Vec3> phi;     // unit 3-vector per site
  std::vector<Vec3> phidot;  // tangent velocity per site
};

// Validates sizes, the CFL bound dt < dx, the sphere constraint
// |phi_i|^2 = 1 and the tangency phi_i . phidot_i = 0 (both within 1e-8).
// Throws input_error on violation.
void validate_field(const LatticeField& f);

// Validating constructor for caller-supplied data.
LatticeField make_lattice_field(std::size_t sites, double dx, double dt,
                                std::vector<Vec3> phi, std::vector<Vec3> phidot);

// --- Initial-condition presets ---

// Everything aligned with the north pole, zero velocity: a static solution.
LatticeField uniform_field(std::size_t sites, double dx, double dt);

// Standing transverse spin wave: phi = (a sin(kx), 0, sqrt(1 - a^2 sin^2 kx))
// with k = 2*pi*k_mode / (sites*dx), zero initial velocity. Oscillates at the
// lattice dispersion frequency omega(k) = (2/dx) sin(k dx/2) for small a.
LatticeField spin_wave_field(std::size_t sites, double dx, double dt,
                             std::size_t k_mode, double amplitude);

// Uniformly precessing traveling wave: phi traces a cone around the north
// pole with phase kx, velocities set for rotation at the lattice dispersion
// frequency. A near-exact discrete orbit; carries nonzero field momentum.
LatticeField traveling_wave_field(std::size_t sites, double dx, double dt,
                                  std::size_t k_mode, double amplitude);

// Seeded random data: unit-normalized Gaussian directions with tangent
// Gaussian velocities of the given scale.
LatticeField random_tangent_field(std::size_t sites, double dx, double dt,
                                  std::uint64_t seed, double velocity_scale = 0.1);

// --- Evolution and diagnostics ---

// One constrained-leapfrog step. Pure: returns the advanced field. The
// input must satisfy the field invariants; the output satisfies them to
// machine precision by construction.
LatticeField step(const LatticeField& f);

// Discrete energy  sum_i [ |phidot_i|^2 / 2 + |phi_{i+1} - phi_i|^2 / (2 dx^2) ] dx.
double energy(const LatticeField& f);

// Discrete field momentum  sum_i phidot_i . (phi_{i+1} - phi_{i-1}) / (2 dx),
// conserved by the smooth dynamics through lattice translation symmetry.
double momentum(const LatticeField& f);

// max_i | phi_i . phi_i - 1 |
double max_constraint_residual(const LatticeField& f);

// max_i | phi_i . phidot_i |
double max_tangency_residual(const LatticeField& f);

}  // namespace qic
