// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.

#pragma once

#include <vector>

#include "oplab/matrix.hpp"

namespace oplab {

// Relative cutoff separating numerical kernel from numerical range.
inline constexpr double kRankTol = 1e-10;

// Default tolerance for "Hermitian / PSD within tolerance" input checks.
inline constexpr double kHermTol = 1e-10;

// Hermitian eigendecomposition: input = eigenvectors * diag(eigenvalues) *
// eigenvectors^*, eigenvalues ascending, columns orthonormal.
struct HermitianEig {
  std::vector<double> eigenvalues;
  ComplexMatrix eigenvectors;
};

// Cyclic Jacobi on the symmetrized input (A + A^*)/2. Throws
// std::invalid_argument for non-square input and std::domain_error when
// ||A - A^*||_F > tol * (1 + ||A||_F). Deterministic: fixed input bits give
// fixed output bits.
HermitianEig hermitian_eig(const ComplexMatrix& a, double tol = kHermTol);

// P^t for Hermitian PSD P and t in [0, 1], via the eigendecomposition.
// Eigenvalues in [-tol, 0) are clamped to zero; an eigenvalue below -tol
// throws std::domain_error. Conventions: 0^t = 0 for t > 0 and P^0 = I
// (the eigenvalue convention 0^0 = 1), which makes the generalized Aluthge
// family hit both endpoints exactly.
ComplexMatrix psd_power(const ComplexMatrix& p, double t,
                        double tol = kHermTol);

// Moore-Penrose inverse of a Hermitian PSD matrix: eigenvalues above
// rank_tol * lambda_max are inverted, the rest map to zero.
ComplexMatrix pseudoinverse_psd(const ComplexMatrix& p,
                                double rank_tol = kRankTol);

}  // namespace oplab
