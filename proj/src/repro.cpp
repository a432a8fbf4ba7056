// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.

#include "oplab/repro.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "oplab/polar.hpp"
#include "oplab/rng.hpp"
#include "oplab/shift.hpp"
#include "oplab/spectral.hpp"
#include "oplab/symmetry.hpp"

namespace oplab::repro {

namespace {

std::string fmt(const char* pattern, double a, double b = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof(buf), pattern, a, b);
  return buf;
}

struct Recorder {
  std::vector<Check> checks;

  void expect(bool pass, const std::string& what, const std::string& detail = "") {
    checks.push_back({what, pass, detail});
  }

  void expect_le(double value, double bound, const std::string& what) {
    expect(value <= bound, what, fmt("%.3e <= %.3e", value, bound));
  }

  void expect_ge(double value, double bound, const std::string& what) {
    expect(value >= bound, what, fmt("%.3e >= %.3e", value, bound));
  }

  void expect_status(const SymmetryVerdict& v, CsStatus want,
                     const std::string& what) {
    expect(v.status == want, what,
           std::string("got ") + to_string(v.status) +
               fmt(", residual %.3e", v.residual));
  }
};

WeightedShift real_shift(std::vector<double> w) {
  const std::size_t n = w.size() + 1;
  std::vector<cxd> cw(w.begin(), w.end());
  return WeightedShift(n, std::move(cw));
}

// --- case bodies -----------------------------------------------------------

// 4x4 nilpotent shift with weights (1,2,1): complex symmetric and binormal,
// yet its Duggal transform is not complex symmetric.
void case_r1_duggal(Recorder& r) {
  const WeightedShift s = real_shift({1, 2, 1});
  const ComplexMatrix t = to_matrix(s);
  const double scale = 1.0 + frobenius_norm(t);

  r.expect(cs_criterion(s), "cs_criterion(T) is true");
  r.expect(!duggal_cs_criterion(s), "duggal_cs_criterion(T) is false");

  const SymmetryVerdict vt = certify_cs(t);
  r.expect_status(vt, CsStatus::CS, "certifier: T is CS");
  r.expect(vt.certificate.has_value() &&
               is_conjugation(AntilinearMap{*vt.certificate}),
           "certificate is a conjugation");
  if (vt.certificate)
    r.expect_le(check_cs_with(t, AntilinearMap{*vt.certificate}), 1e-7 * scale,
                "certificate residual within tau_yes");

  const ComplexMatrix td = duggal(t);
  const SymmetryVerdict vd = certify_cs(td);
  r.expect_status(vd, CsStatus::NotCS, "certifier: duggal(T) is NotCS");
  r.expect_ge(vd.residual, 1e-3 * (1.0 + frobenius_norm(td)),
              "duggal residual above tau_no");

  r.expect(is_binormal(t), "T is binormal");
  ComplexMatrix tt(4, 4);
  matmul_adjA_into(tt, t, t);
  const ComplexMatrix ta = adjoint(t);
  ComplexMatrix ss(4, 4);
  matmul_adjA_into(ss, ta, ta);
  r.expect_le(frobenius_norm(commutator(tt, ss)), 1e-10,
              "||[T^*T, TT^*]||_F below 1e-10");
}

// Same T: the polar factor is a genuine partial isometry but not unitary.
void case_r1_nonunitary_u(Recorder& r) {
  const ComplexMatrix t = to_matrix(real_shift({1, 2, 1}));
  const PolarParts pp = polar_decompose(t);
  r.expect(is_partial_isometry(pp.U), "U is a partial isometry");
  r.expect(!is_unitary(pp.U), "U is not unitary");
  r.expect_le(frobenius_norm(matmul(pp.U, pp.P) - t), polar_eps(t),
              "U*P reconstructs T");
}

// The flip conjugation C, the partial conjugation J supported on ran(|T|),
// and its conjugation extension E: the composition C∘J recovers the polar
// factor U, but |T|*(C∘E) is NOT the Duggal transform -- they differ in the
// (4,1) corner entry.
void case_r2_polar_extension(Recorder& r) {
  const ComplexMatrix t = to_matrix(real_shift({1, 2, 1}));
  const AntilinearMap c = flip_conjugation(4);

  // J: e1 -> 0, e2 -> e4, e3 -> e3, e4 -> e2
  ComplexMatrix mj(4, 4);
  mj(3, 1) = 1.0;
  mj(2, 2) = 1.0;
  mj(1, 3) = 1.0;
  const AntilinearMap j{mj};

  // extension E: additionally e1 -> e1
  ComplexMatrix me = mj;
  me(0, 0) = 1.0;
  const AntilinearMap ext{me};

  r.expect(is_partial_conjugation(j), "J is a partial conjugation");
  r.expect(!is_conjugation(j), "J is not a (full) conjugation");
  r.expect(is_conjugation(ext), "extension is a conjugation");

  const PolarParts pp = polar_decompose(t);
  const ComplexMatrix cj = compose_antilinear(c, j);
  r.expect(cj == pp.U, "C∘J equals the polar factor U exactly");

  const ComplexMatrix u_expected = to_matrix(real_shift({1, 1, 1}));
  r.expect(cj == u_expected, "C∘J equals the superdiagonal (1,1,1) matrix");

  const ComplexMatrix ce = compose_antilinear(c, ext);
  const ComplexMatrix cyclic = ComplexMatrix::from_rows({{0, 1, 0, 0},
                                                         {0, 0, 1, 0},
                                                         {0, 0, 0, 1},
                                                         {1, 0, 0, 0}});
  r.expect(ce == cyclic, "C∘E is the cyclic permutation matrix");

  const ComplexMatrix lhs = matmul(pp.P, ce);
  const ComplexMatrix expected = ComplexMatrix::from_rows({{0, 0, 0, 0},
                                                           {0, 0, 1, 0},
                                                           {0, 0, 0, 2},
                                                           {1, 0, 0, 0}});
  r.expect(lhs == expected, "|T|*(C∘E) matches the expected matrix exactly");

  const ComplexMatrix td = duggal(t);
  const ComplexMatrix td_expected = ComplexMatrix::from_rows({{0, 0, 0, 0},
                                                              {0, 0, 1, 0},
                                                              {0, 0, 0, 2},
                                                              {0, 0, 0, 0}});
  r.expect(td == td_expected, "duggal(T) matches its expected matrix exactly");

  const ComplexMatrix diff = lhs - td;
  bool support_ok = true;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t jj = 0; jj < 4; ++jj) {
      const bool zero = std::abs(diff(i, jj)) <= 1e-12;
      const bool corner = (i == 3 && jj == 0);
      if (corner == zero) support_ok = false;
    }
  r.expect(support_ok, "difference to duggal(T) is exactly the (4,1) entry");
  r.expect(std::abs(frobenius_norm(diff) - 1.0) <= 1e-12,
           "Frobenius distance |T|*(C∘E) to duggal(T) equals 1",
           fmt("measured %.15f", frobenius_norm(diff)));
}

// Equal-weight shift: T|T| = T exactly while |T|T drops the first weight,
// so T is not quasinormal.
void case_quasinormal_equal_weights(Recorder& r) {
  const WeightedShift s = real_shift({1, 1, 1});
  const ComplexMatrix t = to_matrix(s);
  const PolarParts pp = polar_decompose(t);

  r.expect(matmul(t, pp.P) == t, "T|T| equals T exactly");
  r.expect(frobenius_norm(matmul(pp.P, t) - t) >= 0.5, "|T|T differs from T");
  r.expect(!is_quasinormal(t), "T is not quasinormal");
  ComplexMatrix tt(4, 4);
  matmul_adjA_into(tt, t, t);
  r.expect_ge(frobenius_norm(commutator(t, tt)), 1.0,
              "||[T, T^*T]||_F at least 1");
}

// n=5 with moduli (1,2,1,2): the Aluthge transform is complex symmetric
// although T itself is not.
void case_aluthge_n5(Recorder& r) {
  const WeightedShift s = real_shift({1, 2, 1, 2});
  const ComplexMatrix t = to_matrix(s);

  r.expect(!cs_criterion(s), "cs_criterion(T) is false");
  r.expect(aluthge_cs_criterion(s, 0.5), "aluthge criterion (t=1/2) is true");

  r.expect_status(certify_cs(t), CsStatus::NotCS, "certifier: T is NotCS");
  r.expect_status(certify_cs(aluthge_t(t, 0.5)), CsStatus::CS,
                  "certifier: aluthge(T) is CS");
}

// Any n=3 shift: the Duggal transform is nilpotent of order 2, hence
// complex symmetric.
void case_duggal_n3(Recorder& r) {
  Rng rng(0xD333);
  for (int rep = 0; rep < 3; ++rep) {
    std::vector<cxd> w(2);
    for (auto& x : w) x = rng.uniform(0.5, 3.0) * rng.unit_phase();
    const WeightedShift s(3, w);
    r.expect(duggal_cs_criterion(s),
             fmt("duggal criterion vacuously true (sample %g)", double(rep + 1)));
    const ComplexMatrix td = duggal(to_matrix(s));
    r.expect_status(certify_cs(td), CsStatus::CS,
                    fmt("certifier: duggal sample %g is CS", double(rep + 1)));
    r.expect_le(frobenius_norm(matmul(td, td)), 1e-12,
                "duggal transform squares to zero");
  }
}

// Equal-weight n=4 shift: T and duggal(T) are both complex symmetric but
// the mean transform is not. The t=0 mean weights of an equal-weight shift
// are (a/2, a, ..., a), which fail the palindrome test for every n >= 3.
void case_mean_n4(Recorder& r) {
  const WeightedShift s = real_shift({1, 1, 1});
  const ComplexMatrix t = to_matrix(s);

  r.expect(both_cs_criterion(s), "T and duggal(T) are both CS");
  r.expect(!mean_cs_criterion(s, 0.0), "mean criterion (t=0) is false");

  const ComplexMatrix mt = mean_t(t, 0.0);
  const ComplexMatrix expected = ComplexMatrix::from_rows(
      {{0, 0.5, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {0, 0, 0, 0}});
  r.expect_le(max_abs_diff(mt, expected), 1e-12,
              "mean transform superdiagonal is (1/2, 1, 1)");
  r.expect_status(certify_cs(mt), CsStatus::NotCS,
                  "certifier: mean transform is NotCS");

  for (std::size_t n = 5; n <= 7; ++n) {
    const WeightedShift eq(n, std::vector<cxd>(n - 1, 2.0));
    r.expect(both_cs_criterion(eq) && !mean_cs_criterion(eq, 0.0),
             fmt("equal weights n=%g: both CS but mean transform is not",
                 double(n)));
  }
}

// t=0 mean criterion surface for n=4: complex symmetric exactly when
// w1 = w2 + w3.
void case_mean_n4_criterion(Recorder& r) {
  int on_surface = 0, mismatches = 0, total = 0;
  for (int a = 1; a <= 20; ++a)
    for (int b = 1; b <= 20; ++b)
      for (int c = 1; c <= 20; ++c) {
        const double w1 = 0.5 * a, w2 = 0.5 * b, w3 = 0.5 * c;
        const WeightedShift s = real_shift({w1, w2, w3});
        const bool surface = std::abs(w1 - (w2 + w3)) <= 1e-9;
        if (surface) ++on_surface;
        if (mean_cs_criterion(s, 0.0) != surface) ++mismatches;
        ++total;
      }
  r.expect(mismatches == 0,
           "criterion matches the w1 = w2 + w3 surface on the 20^3 grid",
           fmt("%g mismatches of %g points", double(mismatches), double(total)));
  r.expect(on_surface > 0, "grid meets the surface",
           fmt("%g points on the surface", double(on_surface)));

  // certifier spot checks, on and off the surface
  const double pts[6][3] = {{3, 1, 2},   {4, 2.5, 1.5}, {2, 1, 1},
                            {3, 3, 3},   {5, 1, 1},     {2, 2, 1}};
  for (const auto& p : pts) {
    const WeightedShift s = real_shift({p[0], p[1], p[2]});
    const bool surface = std::abs(p[0] - (p[1] + p[2])) <= 1e-9;
    const SymmetryVerdict v = certify_cs(mean_t(to_matrix(s), 0.0));
    r.expect_status(v, surface ? CsStatus::CS : CsStatus::NotCS,
                    fmt("certifier agrees at moduli (%g, %g, ...)", p[0], p[1]));
  }
}

// Weighted shifts are centered: the family (T^k)^*T^k, T^k(T^k)^* commutes.
void case_centered(Recorder& r) {
  r.expect(is_centered(to_matrix(real_shift({1, 2, 1}))),
           "shift (1,2,1) is centered");
  r.expect(is_centered(to_matrix(real_shift({1, 1, 1, 1}))),
           "shift (1,1,1,1) is centered");
  const ComplexMatrix jordan = ComplexMatrix::from_rows({{1, 1}, {0, 1}});
  r.expect(!is_centered(jordan), "the 2x2 Jordan block is not centered");
}

const std::map<std::string, std::function<void(Recorder&)>>& catalog() {
  static const std::map<std::string, std::function<void(Recorder&)>> cases = {
      {"r1-duggal", case_r1_duggal},
      {"r1-nonunitary-u", case_r1_nonunitary_u},
      {"r2-polar-extension", case_r2_polar_extension},
      {"quasinormal-equal-weights", case_quasinormal_equal_weights},
      {"aluthge-n5", case_aluthge_n5},
      {"duggal-n3", case_duggal_n3},
      {"mean-n4", case_mean_n4},
      {"mean-n4-criterion", case_mean_n4_criterion},
      {"centered", case_centered},
  };
  return cases;
}

}  // namespace

std::vector<std::string> case_ids() {
  std::vector<std::string> ids;
  for (const auto& [id, fn] : catalog()) ids.push_back(id);
  return ids;
}

CaseResult run_case(const std::string& id) {
  const auto it = catalog().find(id);
  if (it == catalog().end())
    throw std::out_of_range("unknown repro case: " + id);
  Recorder rec;
  it->second(rec);
  CaseResult out;
  out.id = id;
  out.checks = std::move(rec.checks);
  out.pass = true;
  for (const Check& c : out.checks) out.pass = out.pass && c.pass;
  return out;
}

std::string format_result(const CaseResult& r) {
  std::ostringstream os;
  os << "[case " << r.id << "]\n";
  for (const Check& c : r.checks) {
    os << "  " << (c.pass ? "PASS" : "FAIL") << "  " << c.what;
    if (!c.detail.empty()) os << "  (" << c.detail << ")";
    os << "\n";
  }
  os << "  => " << (r.pass ? "PASS" : "FAIL") << "\n";
  return os.str();
}

}  // namespace oplab::repro
