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

// Relative tolerance for the modulus comparisons inside the closed-form
// criteria. The criteria are exact algebra; this only absorbs the floating
// point evaluation of |.| and powers.
inline constexpr double kCritTol = 1e-9;

// Finite weighted shift: dimension n >= 2, nonzero weights w_1..w_{n-1},
// acting as the n x n matrix with w_k at position (k, k+1) (1-based).
class WeightedShift {
 public:
  WeightedShift(std::size_t n, std::vector<cxd> weights);

  std::size_t n() const { return n_; }
  const std::vector<cxd>& weights() const { return weights_; }

  // |w_k|, 0-based index k in [0, n-2].
  double modulus(std::size_t k) const;

 private:
  std::size_t n_;
  std::vector<cxd> weights_;
};

ComplexMatrix to_matrix(const WeightedShift& s);

// Diagonal unitary gauge absorbing the weight phases:
// adjoint(D) * to_matrix(s) * D == to_matrix(s') with s' the shift of
// moduli |w_k|. D(0,0) = 1 and D(k,k) accumulates conj(w_j)/|w_j|.
struct GaugeResult {
  ComplexMatrix D;
  WeightedShift positive;
};
GaugeResult unimodular_gauge(const WeightedShift& s);

// Closed-form complex-symmetry criteria for the shift and its transforms.
// All comparisons are on weight moduli, within kCritTol.
//
//   cs_criterion        : |w_i| = |w_{n-i}|          for 1 <= i <= n-1
//   duggal_cs_criterion : |w_i| = |w_{n-1-i}|        for 1 <= i <= n-2
//   aluthge_cs_criterion: |w_i|^t |w_{i+1}|^{1-t} palindromic, t in (0,1]
//   mean_cs_criterion   : the symmetrized power sums palindromic for
//                         t in (0,1/2]; at t = 0 the Zhu test is applied to
//                         the full mean-transform weight vector
//                         (|w_1|/2, (|w_1|+|w_2|)/2, ...), all positive
//   both_cs_criterion   : all moduli equal (T and its Duggal transform CS)
bool cs_criterion(const WeightedShift& s);
bool duggal_cs_criterion(const WeightedShift& s);
bool aluthge_cs_criterion(const WeightedShift& s, double t);
bool mean_cs_criterion(const WeightedShift& s, double t);
bool both_cs_criterion(const WeightedShift& s);

// Weight moduli of the t = 0 mean transform as a full n-dimensional shift:
// (|w_1|/2, (|w_1|+|w_2|)/2, ..., (|w_{n-2}|+|w_{n-1}|)/2).
std::vector<double> mean_shift_moduli(const WeightedShift& s);

}  // namespace oplab
