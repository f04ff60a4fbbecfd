// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The qft-infocalc Authors
#include "qic/sigma_lattice.hpp"

#include <cmath>
#include <numbers>

#include "qic/errors.hpp"
#include "qic/random.hpp"

namespace qic {

namespace {

constexpr double kInvariantTol = 1e-8;

double dot(const Vec3& a, const Vec3& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

void check_geometry(std::size_t sites, double dx, double dt) {
  if (sites < 3) throw input_error("lattice field: need at least 3 sites");
  if (!(dx > 0.0)) throw input_error("lattice field: dx must be positive");
  if (!(dt > 0.0)) throw input_error("lattice field: dt must be positive");
  if (!(dt < dx))
    throw input_error("lattice field: time step must satisfy dt < dx (CFL bound)");
}

std::vector<Vec3> laplacian(const LatticeField& f) {
  const std::size_t n = f.sites;
  const double inv_dx2 = 1.0 / (f.dx * f.dx);
  std::vector<Vec3> lap(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vec3& left = f.phi[(i + n - 1) % n];
    const Vec3& mid = f.phi[i];
    const Vec3& right = f.phi[(i + 1) % n];
    for (int a = 0; a < 3; ++a)
      lap[i][a] = (right[a] - 2.0 * mid[a] + left[a]) * inv_dx2;
  }
  return lap;
}

}  // namespace

void validate_field(const LatticeField& f) {
  check_geometry(f.sites, f.dx, f.dt);
  if (f.phi.size() != f.sites || f.phidot.size() != f.sites)
    throw input_error("lattice field: phi/phidot size must equal the site count");
  for (std::size_t i = 0; i < f.sites; ++i) {
    if (std::abs(dot(f.phi[i], f.phi[i]) - 1.0) > kInvariantTol)
      throw input_error("lattice field: |phi| = 1 violated");
    if (std::abs(dot(f.phi[i], f.phidot[i])) > kInvariantTol)
      throw input_error("lattice field: velocity not tangent to the sphere");
  }
}

LatticeField make_lattice_field(std::size_t sites, double dx, double dt,
                                std::vector<Vec3> phi, std::vector<Vec3> phidot) {
  LatticeField f{sites, dx, dt, std::move(phi), std::move(phidot)};
  validate_field(f);
  return f;
}

LatticeField uniform_field(std::size_t sites, double dx, double dt) {
  check_geometry(sites, dx, dt);
  return LatticeField{sites, dx, dt, std::vector<Vec3>(sites, Vec3{0.0, 0.0, 1.0}),
                      std::vector<Vec3>(sites, Vec3{0.0, 0.0, 0.0})};
}

LatticeField spin_wave_field(std::size_t sites, double dx, double dt,
                             std::size_t k_mode, double amplitude) {
  check_geometry(sites, dx, dt);
  if (!(amplitude >= 0.0 && amplitude < 1.0))
    throw input_error("spin_wave_field: amplitude must lie in [0, 1)");
  const double k = 2.0 * std::numbers::pi * static_cast<double>(k_mode) /
                   (static_cast<double>(sites) * dx);
  LatticeField f{sites, dx, dt, std::vector<Vec3>(sites),
                 std::vector<Vec3>(sites, Vec3{0.0, 0.0, 0.0})};
  for (std::size_t i = 0; i < sites; ++i) {
    const double s = amplitude * std::sin(k * dx * static_cast<double>(i));
    f.phi[i] = Vec3{s, 0.0, std::sqrt(1.0 - s * s)};
  }
  return f;
}

LatticeField traveling_wave_field(std::size_t sites, double dx, double dt,
                                  std::size_t k_mode, double amplitude) {
  check_geometry(sites, dx, dt);
  if (!(amplitude >= 0.0 && amplitude < 1.0))
    throw input_error("traveling_wave_field: amplitude must lie in [0, 1)");
  const double k = 2.0 * std::numbers::pi * static_cast<double>(k_mode) /
                   (static_cast<double>(sites) * dx);
  const double omega = (2.0 / dx) * std::sin(0.5 * k * dx);
  LatticeField f{sites, dx, dt, std::vector<Vec3>(sites), std::vector<Vec3>(sites)};
  for (std::size_t i = 0; i < sites; ++i) {
    const double x = dx * static_cast<double>(i);
    f.phi[i] = Vec3{amplitude * std::cos(k * x), amplitude * std::sin(k * x),
                    std::sqrt(1.0 - amplitude * amplitude)};
    f.phidot[i] = Vec3{amplitude * omega * std::sin(k * x),
                       -amplitude * omega * std::cos(k * x), 0.0};
  }
  return f;
}

LatticeField random_tangent_field(std::size_t sites, double dx, double dt,
                                  std::uint64_t seed, double velocity_scale) {
  check_geometry(sites, dx, dt);
  Rng rng(seed);
  LatticeField f{sites, dx, dt, std::vector<Vec3>(sites), std::vector<Vec3>(sites)};
  for (std::size_t i = 0; i < sites; ++i) {
    double norm_sq = 0.0;
    do {
      for (int a = 0; a < 3; ++a) f.phi[i][a] = rng.gaussian();
      norm_sq = dot(f.phi[i], f.phi[i]);
    } while (norm_sq < 1e-12);
    const double inv = 1.0 / std::sqrt(norm_sq);
    for (int a = 0; a < 3; ++a) f.phi[i][a] *= inv;
  }
  for (std::size_t i = 0; i < sites; ++i) {
    for (int a = 0; a < 3; ++a) f.phidot[i][a] = velocity_scale * rng.gaussian();
    const double along = dot(f.phi[i], f.phidot[i]);
    for (int a = 0; a < 3; ++a) f.phidot[i][a] -= along * f.phi[i][a];
  }
  return f;
}

LatticeField step(const LatticeField& f) {
  validate_field(f);
  const std::size_t n = f.sites;
  const double dt = f.dt;

  LatticeField out{f.sites, f.dx, f.dt, std::vector<Vec3>(n), std::vector<Vec3>(n)};

  // Half-kick with the Laplacian force, then drift.
  const std::vector<Vec3> lap0 = laplacian(f);
  std::vector<Vec3> w(n);
  for (std::size_t i = 0; i < n; ++i)
    for (int a = 0; a < 3; ++a) w[i][a] = f.phidot[i][a] + 0.5 * dt * lap0[i][a];

  for (std::size_t i = 0; i < n; ++i) {
    Vec3 y;
    for (int a = 0; a < 3; ++a) y[a] = f.phi[i][a] + dt * w[i][a];
    // Lagrange-multiplier projection back to the sphere along phi_i:
    // solve |y + lambda*phi|^2 = 1, taking the stable small root.
    const double b = dot(y, f.phi[i]);
    const double c = dot(y, y) - 1.0;
    const double disc = b * b - c;
    if (disc < 0.0)
      throw numeric_error("sigma step: sphere projection lost the constraint "
                          "surface (time step too large for this data)");
    const double sgn = b >= 0.0 ? 1.0 : -1.0;
    const double lambda = -c / (b + sgn * std::sqrt(disc));
    for (int a = 0; a < 3; ++a) {
      out.phi[i][a] = y[a] + lambda * f.phi[i][a];
      // The constraint force also acts on the half-step velocity.
      w[i][a] += (lambda / dt) * f.phi[i][a];
    }
  }

  // Second half-kick with the updated positions, then project the velocity
  // onto the tangent plane of the new sphere point.
  const std::vector<Vec3> lap1 = laplacian(out);
  for (std::size_t i = 0; i < n; ++i) {
    Vec3 u;
    for (int a = 0; a < 3; ++a) u[a] = w[i][a] + 0.5 * dt * lap1[i][a];
    const double along = dot(out.phi[i], u);
    for (int a = 0; a < 3; ++a) out.phidot[i][a] = u[a] - along * out.phi[i][a];
  }
  return out;
}

double energy(const LatticeField& f) {
  const std::size_t n = f.sites;
  double kinetic = 0.0;
  double gradient = 0.0;
  const double inv_dx = 1.0 / f.dx;
  for (std::size_t i = 0; i < n; ++i) {
    kinetic += dot(f.phidot[i], f.phidot[i]);
    const Vec3& next = f.phi[(i + 1) % n];
    Vec3 d;
    for (int a = 0; a < 3; ++a) d[a] = (next[a] - f.phi[i][a]) * inv_dx;
    gradient += dot(d, d);
  }
  return 0.5 * (kinetic + gradient) * f.dx;
}

double momentum(const LatticeField& f) {
  const std::size_t n = f.sites;
  double p = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec3& next = f.phi[(i + 1) % n];
    const Vec3& prev = f.phi[(i + n - 1) % n];
    for (int a = 0; a < 3; ++a) p += f.phidot[i][a] * (next[a] - prev[a]);
  }
  return p / (2.0 * f.dx);
}

double max_constraint_residual(const LatticeField& f) {
  double worst = 0.0;
  for (std::size_t i = 0; i < f.sites; ++i)
    worst = std::max(worst, std::abs(dot(f.phi[i], f.phi[i]) - 1.0));
  return worst;
}

double max_tangency_residual(const LatticeField& f) {
  double worst = 0.0;
  for (std::size_t i = 0; i < f.sites; ++i)
    worst = std::max(worst, std::abs(dot(f.phi[i], f.phidot[i])));
  return worst;
}

}  // namespace qic
