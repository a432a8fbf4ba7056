// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.

#include "oplab/polar.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace oplab {

namespace {

// Shared spectral data for one polar decomposition: T^*T = V diag(lam) V^*,
// singular values sigma = sqrt(lam). All fractional powers of |T| come from
// the same eigenbasis so the family T~(t) is internally consistent.
struct PolarSpectral {
  ComplexMatrix v;             // eigenvectors of T^*T
  ComplexMatrix vadj;          // v^*
  std::vector<double> lambda;  // eigenvalues of T^*T, ascending, clamped >= 0
  std::vector<double> sigma;   // sqrt(lambda)
  double lambda_max = 0.0;
  ComplexMatrix u;             // partial isometry T * |T|^+
};

ComplexMatrix power_from(const PolarSpectral& ps, double t) {
  const std::size_t n = ps.v.rows();
  if (t == 0.0) return ComplexMatrix::identity(n);
  ComplexMatrix scaled = ps.v;
  for (std::size_t k = 0; k < n; ++k) {
    const double w = (ps.sigma[k] == 0.0) ? 0.0 : std::pow(ps.sigma[k], t);
    for (std::size_t i = 0; i < n; ++i) scaled(i, k) *= w;
  }
  ComplexMatrix out(n, n);
  matmul_into(out, scaled, ps.vadj);
  return out;
}

PolarSpectral polar_spectral(const ComplexMatrix& t, double rank_tol) {
  if (!t.is_square())
    throw std::invalid_argument("polar_decompose: matrix must be square");
  const std::size_t n = t.rows();
  ComplexMatrix m(n, n);
  matmul_adjA_into(m, t, t);  // T^* T, Hermitian PSD up to roundoff

  PolarSpectral ps;
  HermitianEig eig = hermitian_eig(m, 1e-6);
  ps.v = std::move(eig.eigenvectors);
  ps.vadj = adjoint(ps.v);
  ps.lambda.resize(n);
  ps.sigma.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    ps.lambda[i] = std::max(eig.eigenvalues[i], 0.0);
    ps.sigma[i] = std::sqrt(ps.lambda[i]);
    ps.lambda_max = std::max(ps.lambda_max, ps.lambda[i]);
  }

  // |T|^+ from the same eigenbasis, then U = T * |T|^+. The kernel cutoff
  // lives in eigenvalue space: eig(T^*T) carries O(eps)*lambda_max noise,
  // which in singular-value space is a sqrt(eps)*sigma_max floor that a
  // relative sigma cutoff of rank_tol would dip below.
  ComplexMatrix scaled = ps.v;
  for (std::size_t k = 0; k < n; ++k) {
    const double w =
        (ps.lambda[k] > rank_tol * ps.lambda_max) ? 1.0 / ps.sigma[k] : 0.0;
    for (std::size_t i = 0; i < n; ++i) scaled(i, k) *= w;
  }
  ComplexMatrix pinv(n, n);
  matmul_into(pinv, scaled, ps.vadj);
  ps.u = matmul(t, pinv);
  return ps;
}

}  // namespace

PolarParts polar_decompose(const ComplexMatrix& t, double rank_tol) {
  PolarSpectral ps = polar_spectral(t, rank_tol);
  PolarParts out;
  out.P = power_from(ps, 1.0);
  out.U = std::move(ps.u);
  return out;
}

ComplexMatrix duggal(const ComplexMatrix& t) {
  PolarSpectral ps = polar_spectral(t, kRankTol);
  return matmul(power_from(ps, 1.0), ps.u);
}

ComplexMatrix aluthge_t(const ComplexMatrix& t, double s) {
  if (!(s >= 0.0 && s <= 1.0))
    throw std::invalid_argument("aluthge_t: t must lie in [0, 1]");
  PolarSpectral ps = polar_spectral(t, kRankTol);
  return matmul(power_from(ps, s), matmul(ps.u, power_from(ps, 1.0 - s)));
}

ComplexMatrix mean_t(const ComplexMatrix& t, double s) {
  if (!(s >= 0.0 && s <= 0.5))
    throw std::invalid_argument("mean_t: t must lie in [0, 1/2]");
  PolarSpectral ps = polar_spectral(t, kRankTol);
  const ComplexMatrix left =
      matmul(power_from(ps, s), matmul(ps.u, power_from(ps, 1.0 - s)));
  const ComplexMatrix right =
      matmul(power_from(ps, 1.0 - s), matmul(ps.u, power_from(ps, s)));
  return cxd{0.5, 0.0} * (left + right);
}

namespace {
ComplexMatrix gram(const ComplexMatrix& u) {
  if (!u.is_square())
    throw std::invalid_argument("isometry check: matrix must be square");
  ComplexMatrix q(u.rows(), u.cols());
  matmul_adjA_into(q, u, u);
  return q;
}
}  // namespace

bool is_partial_isometry(const ComplexMatrix& u, double tol) {
  const ComplexMatrix q = gram(u);
  const double scale = 1.0 + frobenius_norm(q);
  const double herm = frobenius_norm(q - adjoint(q));
  const double idem = frobenius_norm(matmul(q, q) - q);
  return herm <= tol * scale && idem <= tol * scale;
}

bool is_unitary(const ComplexMatrix& u, double tol) {
  const ComplexMatrix q = gram(u);
  const double scale = 1.0 + frobenius_norm(q);
  return frobenius_norm(q - ComplexMatrix::identity(q.rows())) <= tol * scale;
}

}  // namespace oplab
