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

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace oplab {

using cxd = std::complex<double>;

// Dense complex matrix, row-major. The universal operator carrier of the
// lab: everything (moduli, partial isometries, transforms, conjugation
// matrices) is one of these. Degenerate shapes (0x0, 1x1, 0xk) are legal.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), e_(rows * cols) {}

  static ComplexMatrix identity(std::size_t n);

  // Row-wise brace construction for tests and fixtures.
  static ComplexMatrix from_rows(
      std::initializer_list<std::initializer_list<cxd>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  cxd& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const cxd& operator()(std::size_t i, std::size_t j) const {
    return e_[i * cols_ + j];
  }

  cxd* data() { return e_.data(); }
  const cxd* data() const { return e_.data(); }
  cxd* row_ptr(std::size_t i) { return e_.data() + i * cols_; }
  const cxd* row_ptr(std::size_t i) const { return e_.data() + i * cols_; }

  void set_zero();

  bool operator==(const ComplexMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cxd> e_;
};

// out = a * b; out must be preallocated to a.rows x b.cols and must not
// alias either operand. Allocation-free building block for hot loops.
void matmul_into(ComplexMatrix& out, const ComplexMatrix& a,
                 const ComplexMatrix& b);

// out = adjoint(a) * b without forming the adjoint.
void matmul_adjA_into(ComplexMatrix& out, const ComplexMatrix& a,
                      const ComplexMatrix& b);

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix adjoint(const ComplexMatrix& a);
ComplexMatrix transpose(const ComplexMatrix& a);
ComplexMatrix conj(const ComplexMatrix& a);

// a*b - b*a; both operands square of equal size.
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

double frobenius_norm(const ComplexMatrix& a);

// Block diagonal [a 0; 0 b]; an empty operand yields the other one.
ComplexMatrix direct_sum(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(cxd s, const ComplexMatrix& a);

// max_ij |a_ij - b_ij|, for tolerance checks; shapes must match.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

bool all_finite(const ComplexMatrix& a);

}  // namespace oplab
