// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.

#include "oplab/kernels.hpp"

#include <atomic>

namespace oplab::kern {

// std::complex<double> is layout-compatible with double[2]; the reference
// kernels spell the complex arithmetic out on the real coordinates so the
// compiler is free to vectorize and no libcall (__muldc3) is emitted.

namespace ref {

void caxpy(cxd* y_, cxd a, const cxd* x_, std::size_t n) {
  const double ar = a.real(), ai = a.imag();
  double* y = reinterpret_cast<double*>(y_);
  const double* x = reinterpret_cast<const double*>(x_);
  for (std::size_t i = 0; i < 2 * n; i += 2) {
    const double xr = x[i], xi = x[i + 1];
    y[i] += ar * xr - ai * xi;
    y[i + 1] += ar * xi + ai * xr;
  }
}

void caxpy_conj(cxd* y_, cxd a, const cxd* x_, std::size_t n) {
  const double ar = a.real(), ai = a.imag();
  double* y = reinterpret_cast<double*>(y_);
  const double* x = reinterpret_cast<const double*>(x_);
  for (std::size_t i = 0; i < 2 * n; i += 2) {
    const double xr = x[i], xi = -x[i + 1];
    y[i] += ar * xr - ai * xi;
    y[i + 1] += ar * xi + ai * xr;
  }
}

void cscale(cxd* x_, cxd a, std::size_t n) {
  const double ar = a.real(), ai = a.imag();
  double* x = reinterpret_cast<double*>(x_);
  for (std::size_t i = 0; i < 2 * n; i += 2) {
    const double xr = x[i], xi = x[i + 1];
    x[i] = ar * xr - ai * xi;
    x[i + 1] = ar * xi + ai * xr;
  }
}

void conj_copy(cxd* y_, const cxd* x_, std::size_t n) {
  double* y = reinterpret_cast<double*>(y_);
  const double* x = reinterpret_cast<const double*>(x_);
  for (std::size_t i = 0; i < 2 * n; i += 2) {
    y[i] = x[i];
    y[i + 1] = -x[i + 1];
  }
}

double norm_sq(const cxd* x_, std::size_t n) {
  const double* x = reinterpret_cast<const double*>(x_);
  double s = 0.0;
  for (std::size_t i = 0; i < 2 * n; ++i) s += x[i] * x[i];
  return s;
}

}  // namespace ref

namespace {

struct KernelTable {
  void (*caxpy)(cxd*, cxd, const cxd*, std::size_t);
  void (*caxpy_conj)(cxd*, cxd, const cxd*, std::size_t);
  void (*cscale)(cxd*, cxd, std::size_t);
  void (*conj_copy)(cxd*, const cxd*, std::size_t);
  double (*norm_sq)(const cxd*, std::size_t);
  Isa isa;
};

constexpr KernelTable kScalarTable = {ref::caxpy, ref::caxpy_conj, ref::cscale,
                                      ref::conj_copy, ref::norm_sq,
                                      Isa::Scalar};

#if defined(__x86_64__) || defined(_M_X64)
constexpr KernelTable kAvx2Table = {avx2::caxpy, avx2::caxpy_conj,
                                    avx2::cscale, avx2::conj_copy,
                                    avx2::norm_sq, Isa::Avx2};

bool host_has_avx2() {
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
}
#endif

const KernelTable& detected_table() {
#if defined(__x86_64__) || defined(_M_X64)
  static const KernelTable& t = host_has_avx2() ? kAvx2Table : kScalarTable;
  return t;
#else
  return kScalarTable;
#endif
}

std::atomic<const KernelTable*> g_table{nullptr};

const KernelTable& table() {
  const KernelTable* t = g_table.load(std::memory_order_acquire);
  if (!t) {
    t = &detected_table();
    g_table.store(t, std::memory_order_release);
  }
  return *t;
}

}  // namespace

Isa active_isa() { return table().isa; }

void force_scalar(bool on) {
  g_table.store(on ? &kScalarTable : &detected_table(),
                std::memory_order_release);
}

void caxpy(cxd* y, cxd a, const cxd* x, std::size_t n) {
  table().caxpy(y, a, x, n);
}
void caxpy_conj(cxd* y, cxd a, const cxd* x, std::size_t n) {
  table().caxpy_conj(y, a, x, n);
}
void cscale(cxd* x, cxd a, std::size_t n) { table().cscale(x, a, n); }
void conj_copy(cxd* y, const cxd* x, std::size_t n) {
  table().conj_copy(y, x, n);
}
double norm_sq(const cxd* x, std::size_t n) { return table().norm_sq(x, n); }

}  // namespace oplab::kern
