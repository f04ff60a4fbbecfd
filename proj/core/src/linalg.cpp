// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The qft-infocalc Authors
#include "qic/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>

#include "qic/errors.hpp"

namespace qic {

namespace {

constexpr int kMaxSweeps = 64;

double sign_or_one(double x) { return x < 0.0 ? -1.0 : 1.0; }

// Jacobi rotation parameters zeroing a 2x2 Hermitian block with diagonals
// (app, aqq) and off-diagonal modulus r > 0.
struct Rotation {
  double c, s;
};

Rotation make_rotation(double app, double aqq, double r) {
  const double tau = (app - aqq) / (2.0 * r);
  const double t = sign_or_one(tau) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  return Rotation{c, t * c};
}

// Cyclic Jacobi on a real symmetric matrix held in full row-major storage.
// Returns eigenvalues in `diag` and accumulates rotations into `vec`.
void jacobi_real(std::vector<double>& a, std::vector<double>& vec, std::size_t n) {
  const double scale = std::max(
      1e-300, std::abs(*std::max_element(a.begin(), a.end(), [](double x, double y) {
        return std::abs(x) < std::abs(y);
      })));
  const double stop = 1e-14 * scale;
  const double skip = 1e-3 * stop;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off = std::max(off, std::abs(a[p * n + q]));
    if (off <= stop) return;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        const double r = std::abs(apq);
        if (r <= skip) continue;
        const double ph = sign_or_one(apq);
        const double app = a[p * n + p], aqq = a[q * n + q];
        const auto [c, s] = make_rotation(app, aqq, r);
        const double sp = s * ph;
        for (std::size_t i = 0; i < n; ++i) {
          if (i == p || i == q) continue;
          const double x = a[i * n + p], y = a[i * n + q];
          a[i * n + p] = a[p * n + i] = c * x + sp * y;
          a[i * n + q] = a[q * n + i] = c * y - sp * x;
        }
        a[p * n + p] = app * c * c + 2.0 * r * s * c + aqq * s * s;
        a[q * n + q] = app * s * s - 2.0 * r * s * c + aqq * c * c;
        a[p * n + q] = a[q * n + p] = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
          const double x = vec[i * n + p], y = vec[i * n + q];
          vec[i * n + p] = c * x + sp * y;
          vec[i * n + q] = c * y - sp * x;
        }
      }
    }
  }
  throw numeric_error("herm_eig: Jacobi sweep limit exceeded (real path)");
}

// Cyclic Jacobi on a complex Hermitian matrix; the off-diagonal phase is
// absorbed into the rotation so the angle computation stays real.
void jacobi_complex(CVector& a, CVector& vec, std::size_t n) {
  double scale = 1e-300;
  for (const auto& z : a) scale = std::max(scale, std::abs(z));
  const double stop = 1e-14 * scale;
  const double skip = 1e-3 * stop;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off = std::max(off, std::abs(a[p * n + q]));
    if (off <= stop) return;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex apq = a[p * n + q];
        const double r = std::abs(apq);
        if (r <= skip) continue;
        const Complex ph = apq / r;          // e^{i phi}
        const Complex phc = std::conj(ph);
        const double app = a[p * n + p].real(), aqq = a[q * n + q].real();
        const auto [c, s] = make_rotation(app, aqq, r);
        for (std::size_t i = 0; i < n; ++i) {
          if (i == p || i == q) continue;
          const Complex x = a[i * n + p], y = a[i * n + q];
          a[i * n + p] = c * x + s * (phc * y);
          a[i * n + q] = c * y - s * (ph * x);
          a[p * n + i] = std::conj(a[i * n + p]);
          a[q * n + i] = std::conj(a[i * n + q]);
        }
        a[p * n + p] = app * c * c + 2.0 * r * s * c + aqq * s * s;
        a[q * n + q] = app * s * s - 2.0 * r * s * c + aqq * c * c;
        a[p * n + q] = a[q * n + p] = Complex(0.0, 0.0);
        for (std::size_t i = 0; i < n; ++i) {
          const Complex x = vec[i * n + p], y = vec[i * n + q];
          vec[i * n + p] = c * x + s * (phc * y);
          vec[i * n + q] = c * y - s * (ph * x);
        }
      }
    }
  }
  throw numeric_error("herm_eig: Jacobi sweep limit exceeded (complex path)");
}

// Deterministic ordering: ascending eigenvalue; near-degenerate eigenvalues
// tie-broken lexicographically on eigenvector components rounded to 1e-9.
std::vector<std::size_t> sorted_order(const std::vector<double>& ev,
                                      const ComplexMatrix& vecs, double scale) {
  const std::size_t n = ev.size();
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  const double tie = 1e-12 * std::max(1.0, scale);
  auto rounded_less = [&](std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < n; ++i) {
      const auto za = vecs(i, a), zb = vecs(i, b);
      const auto ra = std::llround(za.real() * 1e9), rb = std::llround(zb.real() * 1e9);
      if (ra != rb) return ra < rb;
      const auto ia = std::llround(za.imag() * 1e9), ib = std::llround(zb.imag() * 1e9);
      if (ia != ib) return ia < ib;
    }
    return false;
  };
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    if (std::abs(ev[a] - ev[b]) > tie) return ev[a] < ev[b];
    return rounded_less(a, b);
  });
  return idx;
}

// Canonical phase: the largest-modulus component of each eigenvector is made
// real and positive (first index wins ties within 1e-12).
void fix_phases(ComplexMatrix& v) {
  const std::size_t n = v.rows();
  for (std::size_t k = 0; k < v.cols(); ++k) {
    std::size_t best = 0;
    double mag = -1.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double m = std::abs(v(i, k));
      if (m > mag + 1e-12) {
        mag = m;
        best = i;
      }
    }
    if (mag <= 0.0) continue;
    const Complex ph = v(best, k) / std::abs(v(best, k));
    const Complex phc = std::conj(ph);
    for (std::size_t i = 0; i < n; ++i) v(i, k) *= phc;
  }
}

}  // namespace

CVector Spectrum::eigenvector(std::size_t k) const {
  if (k >= eigenvectors.cols()) throw input_error("eigenvector index out of range");
  CVector v(eigenvectors.rows());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = eigenvectors(i, k);
  return v;
}

ComplexMatrix pauli(int k) {
  switch (k) {
    case 1:
      return ComplexMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}});
    case 2:
      return ComplexMatrix::from_rows({{0.0, Complex(0.0, -1.0)}, {Complex(0.0, 1.0), 0.0}});
    case 3:
      return ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, -1.0}});
    default:
      throw input_error("pauli: index must be 1, 2, or 3");
  }
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Complex aij = a(i, j);
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          r(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
    }
  return r;
}

CVector tensor(const CVector& a, const CVector& b) {
  CVector r(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k) r[i * b.size() + k] = a[i] * b[k];
  return r;
}

ComplexMatrix partial_trace(const ComplexMatrix& m,
                            const std::vector<std::size_t>& dims,
                            const std::vector<std::size_t>& keep) {
  if (!m.is_square()) throw input_error("partial_trace: matrix not square");
  std::size_t total = 1;
  for (std::size_t d : dims) {
    if (d == 0) throw input_error("partial_trace: zero subsystem dimension");
    total *= d;
  }
  if (total != m.rows())
    throw input_error("partial_trace: dims product does not match matrix size");
  if (keep.empty()) throw input_error("partial_trace: keep set is empty");
  for (std::size_t i = 0; i + 1 < keep.size(); ++i)
    if (keep[i] >= keep[i + 1])
      throw input_error("partial_trace: keep set must be strictly ascending");
  if (keep.back() >= dims.size())
    throw input_error("partial_trace: keep index out of range");

  std::vector<std::size_t> traced;
  for (std::size_t p = 0, k = 0; p < dims.size(); ++p) {
    if (k < keep.size() && keep[k] == p)
      ++k;
    else
      traced.push_back(p);
  }
  // stride of subsystem p in the flattened index
  std::vector<std::size_t> stride(dims.size(), 1);
  for (std::size_t p = dims.size(); p-- > 1;) stride[p - 1] = stride[p] * dims[p];

  std::size_t kept_dim = 1;
  for (std::size_t p : keep) kept_dim *= dims[p];
  std::size_t traced_dim = 1;
  for (std::size_t p : traced) traced_dim *= dims[p];

  auto base_index = [&](std::size_t kept_multi, std::size_t traced_multi) {
    std::size_t idx = 0;
    for (std::size_t k = keep.size(); k-- > 0;) {
      const std::size_t p = keep[k];
      idx += (kept_multi % dims[p]) * stride[p];
      kept_multi /= dims[p];
    }
    for (std::size_t k = traced.size(); k-- > 0;) {
      const std::size_t p = traced[k];
      idx += (traced_multi % dims[p]) * stride[p];
      traced_multi /= dims[p];
    }
    return idx;
  };

  ComplexMatrix out(kept_dim, kept_dim);
  for (std::size_t i = 0; i < kept_dim; ++i)
    for (std::size_t j = 0; j < kept_dim; ++j) {
      Complex s = 0.0;
      for (std::size_t t = 0; t < traced_dim; ++t)
        s += m(base_index(i, t), base_index(j, t));
      out(i, j) = s;
    }
  return out;
}

Spectrum herm_eig(const ComplexMatrix& m) {
  if (!m.is_square() || m.rows() == 0)
    throw input_error("herm_eig: matrix must be square and nonempty");
  if (!m.is_hermitian(1e-12)) throw input_error("herm_eig: matrix not Hermitian");
  const std::size_t n = m.rows();

  bool all_real = true;
  for (const auto& z : m.data())
    if (z.imag() != 0.0) {
      all_real = false;
      break;
    }

  std::vector<double> ev(n);
  ComplexMatrix vecs(n, n);
  if (all_real) {
    std::vector<double> a(n * n), v(n * n, 0.0);
    for (std::size_t k = 0; k < n * n; ++k) a[k] = m.data()[k].real();
    // symmetrize exactly so rotations preserve symmetry bit-for-bit
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) a[j * n + i] = a[i * n + j];
    for (std::size_t i = 0; i < n; ++i) v[i * n + i] = 1.0;
    jacobi_real(a, v, n);
    for (std::size_t i = 0; i < n; ++i) ev[i] = a[i * n + i];
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) vecs(i, j) = v[i * n + j];
  } else {
    CVector a = m.data(), v(n * n, Complex(0.0, 0.0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) a[j * n + i] = std::conj(a[i * n + j]);
    for (std::size_t i = 0; i < n; ++i) a[i * n + i] = Complex(a[i * n + i].real(), 0.0);
    for (std::size_t i = 0; i < n; ++i) v[i * n + i] = 1.0;
    jacobi_complex(a, v, n);
    for (std::size_t i = 0; i < n; ++i) ev[i] = a[i * n + i].real();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) vecs(i, j) = v[i * n + j];
  }

  const auto order = sorted_order(ev, vecs, m.max_abs());
  Spectrum s;
  s.eigenvalues.resize(n);
  s.eigenvectors = ComplexMatrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    s.eigenvalues[k] = ev[order[k]];
    for (std::size_t i = 0; i < n; ++i) s.eigenvectors(i, k) = vecs(i, order[k]);
  }
  fix_phases(s.eigenvectors);
  return s;
}

ComplexMatrix matrix_func_on_support(const ComplexMatrix& m,
                                     const std::function<double(double)>& f,
                                     double support_cutoff, bool require_psd) {
  const Spectrum s = herm_eig(m);
  if (require_psd) {
    for (double ev : s.eigenvalues)
      if (ev < -1e-10)
        throw input_error("matrix_func_on_support: matrix not positive semidefinite");
  }
  const std::size_t n = m.rows();
  std::vector<double> g(n);
  for (std::size_t k = 0; k < n; ++k)
    g[k] = s.eigenvalues[k] > support_cutoff ? f(s.eigenvalues[k]) : 0.0;
  ComplexMatrix scaled = s.eigenvectors;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) scaled(i, k) *= g[k];
  return scaled * s.eigenvectors.adjoint();
}

ComplexMatrix matrix_func_on_support(const ComplexMatrix& m,
                                     const std::function<double(double)>& f,
                                     bool require_psd) {
  const Spectrum s = herm_eig(m);
  double peak = 0.0;
  for (double ev : s.eigenvalues) peak = std::max(peak, std::abs(ev));
  return matrix_func_on_support(m, f, kSupportCutoffRel * peak, require_psd);
}

std::size_t support_rank(const Spectrum& s) {
  double peak = 0.0;
  for (double ev : s.eigenvalues) peak = std::max(peak, std::abs(ev));
  const double cutoff = kSupportCutoffRel * peak;
  std::size_t r = 0;
  for (double ev : s.eigenvalues)
    if (ev > cutoff) ++r;
  return r;
}

ComplexMatrix matrix_exp_hermitian(const ComplexMatrix& m) {
  return matrix_func_on_support(
      m, [](double x) { return std::exp(x); },
      -std::numeric_limits<double>::infinity(), false);
}

}  // namespace qic
