// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.

#include "oplab/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace oplab {

namespace {

constexpr double kSweepThresholdFactor = 1e-13;
constexpr int kMaxSweeps = 60;

double offdiag_norm_sq(const ComplexMatrix& h) {
  double s = 0.0;
  for (std::size_t i = 0; i < h.rows(); ++i)
    for (std::size_t j = 0; j < h.cols(); ++j)
      if (i != j) s += std::norm(h(i, j));
  return s;
}

// One complex Jacobi rotation zeroing H(p,q). The plane rotation is the
// real Jacobi rotation composed with the phase that makes H(p,q) real:
//   J(p,p) = c, J(p,q) = s, J(q,p) = -s*conj(u), J(q,q) = c*conj(u)
// with u = H(p,q)/|H(p,q)|.
void rotate(ComplexMatrix& h, ComplexMatrix& v, std::size_t p, std::size_t q) {
  const cxd hpq = h(p, q);
  const double m = std::abs(hpq);
  const cxd u = hpq / m;
  const double app = h(p, p).real();
  const double aqq = h(q, q).real();

  const double tau = (aqq - app) / (2.0 * m);
  const double t = (tau >= 0.0) ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                : 1.0 / (tau - std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;
  const cxd uc = std::conj(u);

  const std::size_t n = h.rows();
  // H <- H * J (columns p, q)
  for (std::size_t r = 0; r < n; ++r) {
    const cxd hp = h(r, p), hq = h(r, q);
    h(r, p) = c * hp - s * uc * hq;
    h(r, q) = s * hp + c * uc * hq;
  }
  // H <- J^* * H (rows p, q)
  for (std::size_t col = 0; col < n; ++col) {
    const cxd hp = h(p, col), hq = h(q, col);
    h(p, col) = c * hp - s * u * hq;
    h(q, col) = s * hp + c * u * hq;
  }
  // exact zero on the annihilated pair; keep the diagonal real
  h(p, q) = 0.0;
  h(q, p) = 0.0;
  h(p, p) = h(p, p).real();
  h(q, q) = h(q, q).real();

  for (std::size_t r = 0; r < n; ++r) {
    const cxd vp = v(r, p), vq = v(r, q);
    v(r, p) = c * vp - s * uc * vq;
    v(r, q) = s * vp + c * uc * vq;
  }
}

// V * diag(w) * V^* (Hermitian by construction; symmetrized to kill the
// last-ulp drift).
ComplexMatrix reconstruct(const ComplexMatrix& v, const std::vector<double>& w) {
  const std::size_t n = v.rows();
  ComplexMatrix scaled = v;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) scaled(i, k) *= w[k];
  ComplexMatrix out(n, n);
  ComplexMatrix vadj = adjoint(v);
  matmul_into(out, scaled, vadj);
  for (std::size_t i = 0; i < n; ++i) {
    out(i, i) = out(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      const cxd avg = 0.5 * (out(i, j) + std::conj(out(j, i)));
      out(i, j) = avg;
      out(j, i) = std::conj(avg);
    }
  }
  return out;
}

}  // namespace

HermitianEig hermitian_eig(const ComplexMatrix& a, double tol) {
  if (!a.is_square())
    throw std::invalid_argument("hermitian_eig: matrix must be square");
  const std::size_t n = a.rows();
  const double fro = frobenius_norm(a);

  double dev_sq = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      dev_sq += std::norm(a(i, j) - std::conj(a(j, i)));
  if (std::sqrt(dev_sq) > tol * (1.0 + fro))
    throw std::domain_error("hermitian_eig: input not Hermitian within tolerance");

  ComplexMatrix h(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    h(i, i) = a(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      const cxd avg = 0.5 * (a(i, j) + std::conj(a(j, i)));
      h(i, j) = avg;
      h(j, i) = std::conj(avg);
    }
  }

  ComplexMatrix v = ComplexMatrix::identity(n);
  if (n > 1) {
    const double threshold = kSweepThresholdFactor * fro;
    const double skip = threshold / (4.0 * static_cast<double>(n));
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
      if (std::sqrt(offdiag_norm_sq(h)) <= threshold) break;
      for (std::size_t p = 0; p + 1 < n; ++p)
        for (std::size_t q = p + 1; q < n; ++q)
          if (std::abs(h(p, q)) > skip) rotate(h, v, p, q);
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return h(x, x).real() < h(y, y).real();
  });

  HermitianEig out;
  out.eigenvalues.resize(n);
  out.eigenvectors = ComplexMatrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    out.eigenvalues[k] = h(order[k], order[k]).real();
    for (std::size_t r = 0; r < n; ++r)
      out.eigenvectors(r, k) = v(r, order[k]);
  }
  return out;
}

ComplexMatrix psd_power(const ComplexMatrix& p, double t, double tol) {
  if (!(t >= 0.0 && t <= 1.0))
    throw std::invalid_argument("psd_power: t must lie in [0, 1]");
  HermitianEig eig = hermitian_eig(p, tol);
  const std::size_t n = p.rows();
  std::vector<double> lam = eig.eigenvalues;
  for (double& l : lam) {
    if (l < -tol) throw std::domain_error("psd_power: matrix not PSD");
    if (l < 0.0) l = 0.0;
  }
  if (t == 0.0) return ComplexMatrix::identity(n);
  std::vector<double> w(n);
  for (std::size_t i = 0; i < n; ++i)
    w[i] = (lam[i] == 0.0) ? 0.0 : std::pow(lam[i], t);
  return reconstruct(eig.eigenvectors, w);
}

ComplexMatrix pseudoinverse_psd(const ComplexMatrix& p, double rank_tol) {
  HermitianEig eig = hermitian_eig(p, kHermTol);
  const std::size_t n = p.rows();
  double lmax = 0.0;
  for (double l : eig.eigenvalues) lmax = std::max(lmax, l);
  for (double l : eig.eigenvalues)
    if (l < -kHermTol * (1.0 + lmax))
      throw std::domain_error("pseudoinverse_psd: matrix not PSD");
  std::vector<double> w(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double l = eig.eigenvalues[i];
    w[i] = (l > rank_tol * lmax) ? 1.0 / l : 0.0;
  }
  return reconstruct(eig.eigenvectors, w);
}

}  // namespace oplab
