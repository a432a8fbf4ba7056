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

#include "oplab/matrix.hpp"
#include "oplab/spectral.hpp"

namespace oplab {

// Scale-aware tolerance used throughout this module:
// eps_polar(T) = 1e-9 * (1 + ||T||_F).
inline constexpr double kPolarTol = 1e-9;

inline double polar_eps(const ComplexMatrix& t) {
  return kPolarTol * (1.0 + frobenius_norm(t));
}

// T = U * P with P = (T^*T)^{1/2} and U a genuine partial isometry
// (U = T * P^+, zero on ker T). U is deliberately NOT extended to a
// unitary: several of the lab's counterexamples live exactly in that gap.
struct PolarParts {
  ComplexMatrix U;
  ComplexMatrix P;
};

PolarParts polar_decompose(const ComplexMatrix& t, double rank_tol = kRankTol);

// |T| * U, the t = 1 endpoint of the generalized Aluthge family.
ComplexMatrix duggal(const ComplexMatrix& t);

// |T|^s * U * |T|^{1-s} for s in [0, 1]. s = 1/2 is the Aluthge transform;
// s = 0 returns T and s = 1 the Duggal transform (P^0 = I convention).
ComplexMatrix aluthge_t(const ComplexMatrix& t, double s);

// (aluthge_t(T, s) + aluthge_t(T, 1-s)) / 2 for s in [0, 1/2]; s = 0 is the
// mean transform (T + T^D)/2.
ComplexMatrix mean_t(const ComplexMatrix& t, double s);

// U^*U Hermitian idempotent / U^*U = I, within tol * (1 + ||U^*U||_F).
bool is_partial_isometry(const ComplexMatrix& u, double tol = kPolarTol);
bool is_unitary(const ComplexMatrix& u, double tol = kPolarTol);

}  // namespace oplab
