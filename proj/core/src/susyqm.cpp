// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The qft-infocalc Authors
#include "qic/susyqm.hpp"

#include <algorithm>
#include <cmath>

#include "qic/errors.hpp"

namespace qic {

namespace {

constexpr double kAlgebraTol = 1e-12;

}  // namespace

const char* potential_kind_name(PotentialKind kind) {
  switch (kind) {
    case PotentialKind::linear: return "linear";
    case PotentialKind::tanh: return "tanh";
    case PotentialKind::cubic: return "cubic";
  }
  throw input_error("potential_kind_name: unknown kind");
}

PotentialKind potential_kind_from_name(const std::string& name) {
  if (name == "linear") return PotentialKind::linear;
  if (name == "tanh") return PotentialKind::tanh;
  if (name == "cubic") return PotentialKind::cubic;
  throw input_error("unknown potential '" + name + "' (expected linear, tanh, or cubic)");
}

std::function<double(double)> make_superpotential(PotentialKind kind, double cubic_c) {
  switch (kind) {
    case PotentialKind::linear:
      return [](double x) { return x; };
    case PotentialKind::tanh:
      return [](double x) { return std::tanh(x); };
    case PotentialKind::cubic:
      return [cubic_c](double x) { return x * x * x - cubic_c * x; };
  }
  throw input_error("make_superpotential: unknown kind");
}

SusyModel build_model(const std::function<double(double)>& v, const GridSpec& grid) {
  if (grid.n < 16) throw input_error("build_model: grid must have at least 16 interior points");
  if (!(grid.x_min < grid.x_max)) throw input_error("build_model: x_min must be below x_max");

  SusyModel m;
  m.grid = grid;
  m.dx = grid.dx();
  const std::size_t n = grid.n;

  m.nodes.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    m.nodes[i] = grid.x_min + static_cast<double>(i + 1) * m.dx;
  m.midpoints.resize(n - 1);
  m.v_mid.resize(n - 1);
  for (std::size_t j = 0; j < n - 1; ++j) {
    m.midpoints[j] = 0.5 * (m.nodes[j] + m.nodes[j + 1]);
    m.v_mid[j] = v(m.midpoints[j]);
    if (!std::isfinite(m.v_mid[j]))
      throw input_error("build_model: superpotential is not finite on the grid");
  }

  m.D = ComplexMatrix::zero(n - 1, n);
  m.Aplus = ComplexMatrix::zero(n - 1, n);
  const double inv_dx = 1.0 / m.dx;
  for (std::size_t j = 0; j < n - 1; ++j) {
    m.D(j, j) = -inv_dx;
    m.D(j, j + 1) = inv_dx;
    m.Aplus(j, j) = -inv_dx + 0.5 * m.v_mid[j];
    m.Aplus(j, j + 1) = inv_dx + 0.5 * m.v_mid[j];
  }
  m.Aminus = m.Aplus.transpose();
  m.H0 = m.Aplus * m.Aminus;
  m.H1 = m.Aminus * m.Aplus;

  const std::size_t total = 2 * n - 1;  // sector 0 block first, then sector 1
  m.Qplus = ComplexMatrix::zero(total, total);
  m.Qminus = ComplexMatrix::zero(total, total);
  for (std::size_t j = 0; j < n - 1; ++j)
    for (std::size_t i = 0; i < n; ++i) {
      m.Qplus(j, (n - 1) + i) = m.Aplus(j, i);
      m.Qminus((n - 1) + i, j) = m.Aminus(i, j);
    }
  m.Q = m.Qplus + m.Qminus;
  m.S = ComplexMatrix::zero(total, total);
  for (std::size_t i = 0; i < total; ++i) m.S(i, i) = i < n - 1 ? 1.0 : -1.0;

  m.zero_tol = 10.0 * m.dx * m.dx;
  return m;
}

SuperalgebraReport check_superalgebra(const SusyModel& m) {
  const std::size_t n = m.grid.n;
  const std::size_t total = 2 * n - 1;

  // Block Hamiltonian assembled from the stored partner Hamiltonians.
  ComplexMatrix h = ComplexMatrix::zero(total, total);
  for (std::size_t i = 0; i < n - 1; ++i)
    for (std::size_t j = 0; j < n - 1; ++j) h(i, j) = m.H0(i, j);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) h((n - 1) + i, (n - 1) + j) = m.H1(i, j);

  SuperalgebraReport report;
  report.qplus_squared = (m.Qplus * m.Qplus).max_abs();
  report.qminus_squared = (m.Qminus * m.Qminus).max_abs();
  report.q_squared_vs_h = (m.Q * m.Q).max_abs_diff(h);
  report.anticommutator_vs_h = (m.Qplus * m.Qminus + m.Qminus * m.Qplus).max_abs_diff(h);
  report.s_h_commutator = (m.S * h - h * m.S).max_abs();
  report.s_q_anticommutator = (m.S * m.Q + m.Q * m.S).max_abs();

  const ComplexMatrix left = m.H0 * m.Aplus;
  const ComplexMatrix right = m.Aplus * m.H1;
  const double scale = std::max(1.0, left.max_abs());
  const ComplexMatrix left2 = m.Aminus * m.H0;
  const ComplexMatrix right2 = m.H1 * m.Aminus;
  const double scale2 = std::max(1.0, left2.max_abs());
  report.intertwining = std::max(left.max_abs_diff(right) / scale,
                                 left2.max_abs_diff(right2) / scale2);

  report.pass = report.qplus_squared <= kAlgebraTol &&
                report.qminus_squared <= kAlgebraTol &&
                report.q_squared_vs_h <= kAlgebraTol &&
                report.anticommutator_vs_h <= kAlgebraTol &&
                report.s_h_commutator <= kAlgebraTol &&
                report.s_q_anticommutator <= kAlgebraTol &&
                report.intertwining <= kAlgebraTol;
  return report;
}

Spectrum sector_spectrum(const SusyModel& m, int sector) {
  if (sector != 0 && sector != 1)
    throw input_error("sector_spectrum: sector must be 0 or 1");
  return herm_eig(sector == 0 ? m.H0 : m.H1);
}

SpectrumPairing pair_spectra(const SusyModel& m, std::size_t k,
                             std::optional<double> zero_tol) {
  if (k > m.grid.n) throw input_error("pair_spectra: k exceeds the model's level count");
  const double tol = zero_tol.value_or(m.zero_tol);

  SpectrumPairing out;
  out.levels0 = sector_spectrum(m, 0).eigenvalues;
  out.levels1 = sector_spectrum(m, 1).eigenvalues;

  std::vector<double> pos0, pos1;
  for (double e : out.levels0)
    (std::abs(e) <= tol ? out.zero_modes0 : pos0).push_back(e);
  for (double e : out.levels1)
    (std::abs(e) <= tol ? out.zero_modes1 : pos1).push_back(e);

  if (k > pos0.size() || k > pos1.size())
    throw input_error("pair_spectra: k exceeds the available positive levels");

  // Greedy nearest matching, lowest energies first. Both lists are
  // ascending, so scan pos1 for the closest unused level.
  std::vector<bool> used(pos1.size(), false);
  for (std::size_t i = 0; i < k; ++i) {
    std::size_t best = pos1.size();
    double best_gap = 0.0;
    for (std::size_t j = 0; j < pos1.size(); ++j) {
      if (used[j]) continue;
      const double gap = std::abs(pos0[i] - pos1[j]);
      if (best == pos1.size() || gap < best_gap) {
        best = j;
        best_gap = gap;
      }
    }
    used[best] = true;
    out.pairs.push_back(LevelPair{i, pos0[i], pos1[best], best_gap});
    out.max_gap = std::max(out.max_gap, best_gap);
  }
  return out;
}

MappedState supercharge_map(const SusyModel& m, int sector, std::size_t eigenindex) {
  if (sector != 0 && sector != 1)
    throw input_error("supercharge_map: sector must be 0 or 1");
  const Spectrum spec = sector_spectrum(m, sector);
  if (eigenindex >= spec.eigenvalues.size())
    throw input_error("supercharge_map: eigenindex out of range");
  const double energy = spec.eigenvalues[eigenindex];
  if (std::abs(energy) <= m.zero_tol)
    throw input_error(
        "supercharge_map: zero-mode input; the supercharge annihilates zero "
        "modes, so they have no partner-sector image");

  const CVector state = spec.eigenvector(eigenindex);
  // A+ carries sector 1 to sector 0; A- carries sector 0 to sector 1.
  const ComplexMatrix& map = sector == 1 ? m.Aplus : m.Aminus;
  const ComplexMatrix& h_other = sector == 1 ? m.H0 : m.H1;

  MappedState result;
  result.sector_in = sector;
  result.sector_out = 1 - sector;
  result.eigenvalue = energy;
  result.image = normalized(map.apply(state));

  const CVector h_image = h_other.apply(result.image);
  double residual_sq = 0.0;
  for (std::size_t i = 0; i < result.image.size(); ++i) {
    const Complex r = h_image[i] - energy * result.image[i];
    residual_sq += std::norm(r);
  }
  result.residual = std::sqrt(residual_sq);
  return result;
}

SqrtNotReport sqrt_not() {
  SqrtNotReport report;
  report.u = ComplexMatrix::zero(2, 2);
  report.u(0, 0) = Complex(0.5, -0.5);
  report.u(0, 1) = Complex(0.5, 0.5);
  report.u(1, 0) = Complex(0.5, 0.5);
  report.u(1, 1) = Complex(0.5, -0.5);
  report.unitarity_deviation =
      (report.u * report.u.adjoint()).max_abs_diff(ComplexMatrix::identity(2));
  report.square_deviation = (report.u * report.u).max_abs_diff(pauli(1));
  report.pass = report.unitarity_deviation == 0.0 && report.square_deviation == 0.0;
  return report;
}

}  // namespace qic
