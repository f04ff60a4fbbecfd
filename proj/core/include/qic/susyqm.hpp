// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The qft-infocalc Authors
//
// Discretized supersymmetric quantum mechanics. A superpotential v(x) on a
// truncated line generates first-order operators A± = ±d/dx + v and partner
// Hamiltonians H0 = A+A-, H1 = A-A+ whose positive spectra coincide; the
// block supercharges square exactly to the block Hamiltonian.
//
// Discretization: the two sectors live on staggered grids. Sector-1
// functions sit on the n interior nodes of a Dirichlet grid; sector-0
// functions sit on the n-1 midpoints between them. A+ maps nodes to
// midpoints via the centered two-point difference plus the midpoint value of
// v times the two-point average, and A- is its exact transpose. The
// staggering keeps the superalgebra exact at machine precision while giving
// each sector its own spectrum (a square one-grid difference operator would
// force the two sectors to be exactly isospectral, zero modes included,
// which is wrong for confining superpotentials).
#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qic/complex_matrix.hpp"
#include "qic/linalg.hpp"

namespace qic {

struct GridSpec {
  double x_min = -8.0;
  double x_max = 8.0;
  std::size_t n = 400;  // sector-1 interior node count

  double dx() const { return (x_max - x_min) / static_cast<double>(n + 1); }
};

enum class PotentialKind { linear, tanh, cubic };

const char* potential_kind_name(PotentialKind kind);
PotentialKind potential_kind_from_name(const std::string& name);  // throws input_error

// Named superpotentials: linear v(x) = x, tanh v(x) = tanh(x), and
// cubic v(x) = x^3 - c x with tunable c.
std::function<double(double)> make_superpotential(PotentialKind kind, double cubic_c = 2.0);

struct SusyModel {
  GridSpec grid;
  double dx = 0.0;
  std::vector<double> nodes;      // sector-1 sample points x_1..x_n
  std::vector<double> midpoints;  // sector-0 sample points between them
  std::vector<double> v_mid;      // superpotential sampled at the midpoints

  ComplexMatrix D;       // (n-1) x n two-point difference operator
  ComplexMatrix Aplus;   // D + (midpoint v) * (two-point average)
  ComplexMatrix Aminus;  // transpose of Aplus, exactly
  ComplexMatrix H0;      // Aplus * Aminus, (n-1) x (n-1)
  ComplexMatrix H1;      // Aminus * Aplus, n x n
  ComplexMatrix Qplus;   // block supercharge with Aplus in the 0<-1 block
  ComplexMatrix Qminus;  // transpose: Aminus in the 1<-0 block
  ComplexMatrix Q;       // Qplus + Qminus
  ComplexMatrix S;       // grading operator: +1 on sector 0, -1 on sector 1

  // Eigenvalues at or below this magnitude count as zero modes. Default
  // 10 * dx^2 (ten times the grid-refinement error scale); override per call
  // in pair_spectra when a tighter classification is needed.
  double zero_tol = 0.0;
};

// Builds every operator for the given superpotential. Preconditions:
// n >= 16, x_min < x_max, v finite at every midpoint.
SusyModel build_model(const std::function<double(double)>& v, const GridSpec& grid);

struct SuperalgebraReport {
  double qplus_squared = 0.0;         // max |(Q+)^2|
  double qminus_squared = 0.0;        // max |(Q-)^2|
  double q_squared_vs_h = 0.0;        // max |Q^2 - H|
  double anticommutator_vs_h = 0.0;   // max |{Q+,Q-} - H|
  double s_h_commutator = 0.0;        // max |[S, H]|
  double s_q_anticommutator = 0.0;    // max |{S, Q}|
  // Intertwining H0 A+ = A+ H1 (equivalently [H, Q±] = 0), measured
  // relative to the magnitude of H0 A+ since the raw entries grow as 1/dx^3.
  double intertwining = 0.0;
  bool pass = false;  // all of the above <= 1e-12
};

SuperalgebraReport check_superalgebra(const SusyModel& m);

// Eigen-decomposition of one sector's Hamiltonian (sector 0 or 1),
// eigenvalues ascending.
Spectrum sector_spectrum(const SusyModel& m, int sector);

struct LevelPair {
  std::size_t index = 0;  // pair index, by ascending energy
  double e0 = 0.0;
  double e1 = 0.0;
  double gap = 0.0;  // |e0 - e1|
};

struct SpectrumPairing {
  std::vector<double> levels0;      // all eigenvalues of H0, ascending
  std::vector<double> levels1;      // all eigenvalues of H1, ascending
  std::vector<LevelPair> pairs;     // greedy nearest matching of positive levels
  std::vector<double> zero_modes0;  // unpaired levels within the zero tolerance
  std::vector<double> zero_modes1;
  double max_gap = 0.0;  // largest |e0 - e1| over the reported pairs
};

// Pairs the lowest k positive levels of the two sectors by greedy nearest
// matching; levels within the zero tolerance are listed separately as zero
// modes. Throws input_error if fewer than k positive levels are available in
// either sector. `zero_tol` overrides the model default when provided.
SpectrumPairing pair_spectra(const SusyModel& m, std::size_t k,
                             std::optional<double> zero_tol = std::nullopt);

struct MappedState {
  int sector_in = 0;
  int sector_out = 0;
  double eigenvalue = 0.0;  // energy of the input eigenvector
  CVector image;            // normalized image in the partner sector
  double residual = 0.0;    // ||H_other * image - E * image|| with image normalized
};

// Maps the eigenindex-th eigenvector (ascending) of the given sector into
// the partner sector with the appropriate supercharge block (A+ maps sector
// 1 to sector 0; A- maps sector 0 to sector 1). The image is an eigenvector
// of the partner Hamiltonian at the same energy. Throws input_error for
// zero-mode inputs, which the supercharge annihilates.
MappedState supercharge_map(const SusyModel& m, int sector, std::size_t eigenindex);

struct SqrtNotReport {
  ComplexMatrix u;                  // (1/2) [[1-i, 1+i], [1+i, 1-i]]
  double unitarity_deviation = 0.0; // max |U U^dagger - I|
  double square_deviation = 0.0;    // max |U^2 - bit flip|
  bool pass = false;                // both exactly 0
};

// The square root of the bit flip: a unitary U with U^2 = sigma_1, the
// one-qubit analog of the supercharge being a square root of the
// Hamiltonian (Q^2 = H).
SqrtNotReport sqrt_not();

}  // namespace qic
