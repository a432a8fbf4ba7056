// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.

#include "oplab/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "oplab/kernels.hpp"

namespace oplab {

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::from_rows(
    std::initializer_list<std::initializer_list<cxd>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r ? rows.begin()->size() : 0;
  ComplexMatrix m(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) throw std::invalid_argument("ragged row list");
    std::size_t j = 0;
    for (const cxd& v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

void ComplexMatrix::set_zero() { std::fill(e_.begin(), e_.end(), cxd{}); }

void matmul_into(ComplexMatrix& out, const ComplexMatrix& a,
                 const ComplexMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matmul: dimension mismatch");
  if (out.rows() != a.rows() || out.cols() != b.cols())
    throw std::invalid_argument("matmul_into: bad output shape");
  out.set_zero();
  const std::size_t n = b.cols();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    cxd* crow = out.row_ptr(i);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const cxd s = a(i, k);
      if (s.real() == 0.0 && s.imag() == 0.0) continue;
      kern::caxpy(crow, s, b.row_ptr(k), n);
    }
  }
}

void matmul_adjA_into(ComplexMatrix& out, const ComplexMatrix& a,
                      const ComplexMatrix& b) {
  if (a.rows() != b.rows())
    throw std::invalid_argument("matmul_adjA_into: dimension mismatch");
  if (out.rows() != a.cols() || out.cols() != b.cols())
    throw std::invalid_argument("matmul_adjA_into: bad output shape");
  out.set_zero();
  const std::size_t n = b.cols();
  for (std::size_t k = 0; k < a.rows(); ++k) {
    const cxd* arow = a.row_ptr(k);
    const cxd* brow = b.row_ptr(k);
    for (std::size_t i = 0; i < a.cols(); ++i) {
      const cxd s = std::conj(arow[i]);
      if (s.real() == 0.0 && s.imag() == 0.0) continue;
      kern::caxpy(out.row_ptr(i), s, brow, n);
    }
  }
}

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows(), b.cols());
  matmul_into(out, a, b);
  return out;
}

ComplexMatrix adjoint(const ComplexMatrix& a) {
  ComplexMatrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = std::conj(a(i, j));
  return out;
}

ComplexMatrix transpose(const ComplexMatrix& a) {
  ComplexMatrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
  return out;
}

ComplexMatrix conj(const ComplexMatrix& a) {
  ComplexMatrix out(a.rows(), a.cols());
  kern::conj_copy(out.data(), a.data(), a.rows() * a.cols());
  return out;
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (!a.is_square() || !b.is_square() || a.rows() != b.rows())
    throw std::invalid_argument("commutator: needs equal square operands");
  return matmul(a, b) - matmul(b, a);
}

double frobenius_norm(const ComplexMatrix& a) {
  return std::sqrt(kern::norm_sq(a.data(), a.rows() * a.cols()));
}

ComplexMatrix direct_sum(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      out(a.rows() + i, a.cols() + j) = b(i, j);
  return out;
}

namespace {
void check_same_shape(const ComplexMatrix& a, const ComplexMatrix& b,
                      const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument(std::string(what) + ": shape mismatch");
}
}  // namespace

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
  check_same_shape(a, b, "operator+");
  ComplexMatrix out = a;
  kern::caxpy(out.data(), 1.0, b.data(), b.rows() * b.cols());
  return out;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
  check_same_shape(a, b, "operator-");
  ComplexMatrix out = a;
  kern::caxpy(out.data(), -1.0, b.data(), b.rows() * b.cols());
  return out;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  return matmul(a, b);
}

ComplexMatrix operator*(cxd s, const ComplexMatrix& a) {
  ComplexMatrix out = a;
  kern::cscale(out.data(), s, a.rows() * a.cols());
  return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  check_same_shape(a, b, "max_abs_diff");
  double m = 0.0;
  const cxd* pa = a.data();
  const cxd* pb = b.data();
  for (std::size_t i = 0; i < a.rows() * a.cols(); ++i)
    m = std::max(m, std::abs(pa[i] - pb[i]));
  return m;
}

bool all_finite(const ComplexMatrix& a) {
  const cxd* p = a.data();
  for (std::size_t i = 0; i < a.rows() * a.cols(); ++i)
    if (!std::isfinite(p[i].real()) || !std::isfinite(p[i].imag())) return false;
  return true;
}

}  // namespace oplab
