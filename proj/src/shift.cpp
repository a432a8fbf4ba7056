// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.

#include "oplab/shift.hpp"

#include <cmath>
#include <stdexcept>

#include "oplab/spectral.hpp"

namespace oplab {

namespace {
// |a - b| <= tol * max(1, |a|, |b|): relative on O(1)-or-larger moduli,
// absolute below 1.
bool close(double a, double b) {
  return std::abs(a - b) <= kCritTol * std::max({1.0, std::abs(a), std::abs(b)});
}
}  // namespace

WeightedShift::WeightedShift(std::size_t n, std::vector<cxd> weights)
    : n_(n), weights_(std::move(weights)) {
  if (n_ < 2) throw std::invalid_argument("WeightedShift: dimension must be >= 2");
  if (weights_.size() != n_ - 1)
    throw std::invalid_argument("WeightedShift: expected n-1 weights");
  for (const cxd& w : weights_) {
    if (!std::isfinite(w.real()) || !std::isfinite(w.imag()))
      throw std::invalid_argument("WeightedShift: non-finite weight");
    if (std::abs(w) <= kRankTol)
      throw std::invalid_argument("WeightedShift: weights must be nonzero");
  }
}

double WeightedShift::modulus(std::size_t k) const {
  return std::abs(weights_[k]);
}

ComplexMatrix to_matrix(const WeightedShift& s) {
  ComplexMatrix m(s.n(), s.n());
  for (std::size_t k = 0; k + 1 < s.n(); ++k) m(k, k + 1) = s.weights()[k];
  return m;
}

GaugeResult unimodular_gauge(const WeightedShift& s) {
  const std::size_t n = s.n();
  ComplexMatrix d(n, n);
  d(0, 0) = 1.0;
  cxd phase = 1.0;
  std::vector<cxd> moduli(n - 1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    const cxd w = s.weights()[k];
    const double m = std::abs(w);
    phase *= std::conj(w) / m;
    d(k + 1, k + 1) = phase;
    moduli[k] = m;
  }
  return {std::move(d), WeightedShift(n, std::move(moduli))};
}

bool cs_criterion(const WeightedShift& s) {
  const std::size_t n = s.n();
  for (std::size_t i = 1; i <= n - 1; ++i)
    if (!close(s.modulus(i - 1), s.modulus(n - i - 1))) return false;
  return true;
}

bool duggal_cs_criterion(const WeightedShift& s) {
  const std::size_t n = s.n();
  for (std::size_t i = 1; i + 1 <= n - 1; ++i)
    if (!close(s.modulus(i - 1), s.modulus(n - 1 - i - 1))) return false;
  return true;
}

bool aluthge_cs_criterion(const WeightedShift& s, double t) {
  if (!(t > 0.0 && t <= 1.0))
    throw std::invalid_argument("aluthge_cs_criterion: t must lie in (0, 1]");
  const std::size_t n = s.n();
  for (std::size_t i = 1; i + 1 <= n - 1; ++i) {
    const double lhs =
        std::pow(s.modulus(i - 1), t) * std::pow(s.modulus(i), 1.0 - t);
    const double rhs = std::pow(s.modulus(n - 1 - i - 1), t) *
                       std::pow(s.modulus(n - i - 1), 1.0 - t);
    if (!close(lhs, rhs)) return false;
  }
  return true;
}

std::vector<double> mean_shift_moduli(const WeightedShift& s) {
  const std::size_t n = s.n();
  std::vector<double> w(n - 1);
  w[0] = 0.5 * s.modulus(0);
  for (std::size_t k = 1; k + 1 < n; ++k)
    w[k] = 0.5 * (s.modulus(k - 1) + s.modulus(k));
  return w;
}

bool mean_cs_criterion(const WeightedShift& s, double t) {
  if (!(t >= 0.0 && t <= 0.5))
    throw std::invalid_argument("mean_cs_criterion: t must lie in [0, 1/2]");
  const std::size_t n = s.n();
  if (t == 0.0) {
    // The t = 0 transform is a full shift with positive weights, so the Zhu
    // test applies to it directly.
    const std::vector<double> w = mean_shift_moduli(s);
    for (std::size_t i = 1; i <= n - 1; ++i)
      if (!close(w[i - 1], w[n - i - 1])) return false;
    return true;
  }
  for (std::size_t i = 1; i + 1 <= n - 1; ++i) {
    const double a = s.modulus(i - 1), b = s.modulus(i);
    const double c = s.modulus(n - 1 - i - 1), d = s.modulus(n - i - 1);
    const double lhs =
        std::pow(a, t) * std::pow(b, 1.0 - t) + std::pow(a, 1.0 - t) * std::pow(b, t);
    const double rhs =
        std::pow(c, t) * std::pow(d, 1.0 - t) + std::pow(c, 1.0 - t) * std::pow(d, t);
    if (!close(lhs, rhs)) return false;
  }
  return true;
}

bool both_cs_criterion(const WeightedShift& s) {
  for (std::size_t k = 1; k + 1 < s.n(); ++k)
    if (!close(s.modulus(k), s.modulus(0))) return false;
  return true;
}

}  // namespace oplab
