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

// Complex double-precision inner-loop kernels. Every entry point dispatches
// at runtime to the best ISA variant detected on the host (AVX2+FMA on
// x86-64, scalar reference everywhere else). The reference implementations
// stay visible under kern::ref so the dispatched paths can be
// equivalence-tested against them.
//
// Rounding caveat: the AVX2 variants use FMA contractions, so results may
// differ from the scalar path in the last few ulps. Per fixed ISA path the
// kernels are bitwise deterministic.

namespace oplab::kern {

using cxd = std::complex<double>;

enum class Isa { Scalar, Avx2 };

// ISA the dispatched entry points currently route to.
Isa active_isa();

// Pin dispatch to the scalar reference path (true) or restore autodetection
// (false). Intended for tests and A/B timing.
void force_scalar(bool on);

// y[0..n) += a * x[0..n)
void caxpy(cxd* y, cxd a, const cxd* x, std::size_t n);

// y[0..n) += a * conj(x[0..n))
void caxpy_conj(cxd* y, cxd a, const cxd* x, std::size_t n);

// x[0..n) *= a
void cscale(cxd* x, cxd a, std::size_t n);

// y[0..n) = conj(x[0..n))
void conj_copy(cxd* y, const cxd* x, std::size_t n);

// sum_i |x_i|^2
double norm_sq(const cxd* x, std::size_t n);

namespace ref {
void caxpy(cxd* y, cxd a, const cxd* x, std::size_t n);
void caxpy_conj(cxd* y, cxd a, const cxd* x, std::size_t n);
void cscale(cxd* x, cxd a, std::size_t n);
void conj_copy(cxd* y, const cxd* x, std::size_t n);
double norm_sq(const cxd* x, std::size_t n);
}  // namespace ref

#if defined(__x86_64__) || defined(_M_X64)
namespace avx2 {
void caxpy(cxd* y, cxd a, const cxd* x, std::size_t n);
void caxpy_conj(cxd* y, cxd a, const cxd* x, std::size_t n);
void cscale(cxd* x, cxd a, std::size_t n);
void conj_copy(cxd* y, const cxd* x, std::size_t n);
double norm_sq(const cxd* x, std::size_t n);
}  // namespace avx2
#endif

}  // namespace oplab::kern
