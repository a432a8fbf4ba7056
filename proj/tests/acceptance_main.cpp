// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Runs the full randomized coherence campaign, so expect a few
// minutes of wall time.

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <thread>
#include <vector>

#include "oplab/matrix.hpp"
#include "oplab/polar.hpp"
#include "oplab/repro.hpp"
#include "oplab/rng.hpp"
#include "oplab/shift.hpp"
#include "oplab/spectral.hpp"
#include "oplab/suite.hpp"
#include "oplab/symmetry.hpp"

using namespace oplab;
using clock_type = std::chrono::steady_clock;

namespace {

int g_failures = 0;

double seconds_since(clock_type::time_point t0) {
  return std::chrono::duration<double>(clock_type::now() - t0).count();
}

void report(int index, const std::string& name, bool pass, double secs,
            const std::string& detail = "") {
  std::printf("criterion %d (%s): %s (%.1f s)%s%s\n", index, name.c_str(),
              pass ? "PASS" : "FAIL", secs,
              detail.empty() ? "" : " -- ", detail.c_str());
  std::fflush(stdout);
  if (!pass) ++g_failures;
}

ComplexMatrix random_matrix(Rng& rng, std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = rng.gauss_complex();
  return m;
}

ComplexMatrix random_skew_hermitian(Rng& rng, std::size_t n) {
  ComplexMatrix s(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    s(i, i) = cxd{0.0, rng.gauss()};
    for (std::size_t j = i + 1; j < n; ++j) {
      s(i, j) = rng.gauss_complex();
      s(j, i) = -std::conj(s(i, j));
    }
  }
  return s;
}

ComplexMatrix cay_series(const ComplexMatrix& s) {
  const std::size_t n = s.rows();
  ComplexMatrix acc = ComplexMatrix::identity(n);
  ComplexMatrix p = s;
  double coeff = 1.0;
  for (int k = 1; k <= 16; ++k) {
    acc = acc + cxd{coeff, 0} * p;
    p = matmul(p, s);
    coeff *= 0.5;
  }
  return acc;
}

// ---- criterion 1: counterexample reproduction ------------------------------

void criterion_1() {
  const auto t0 = clock_type::now();
  const repro::CaseResult res = repro::run_case("r1-duggal");
  const double secs = seconds_since(t0);
  const bool in_time = secs < 5.0;
  if (!res.pass) std::printf("%s", repro::format_result(res).c_str());
  report(1, "counterexample reproduction: r1-duggal", res.pass && in_time, secs,
         in_time ? "" : "runtime budget of 5 s exceeded");
}

// ---- criterion 2: bit-level conjugation-extension matrices -----------------

void criterion_2() {
  const auto t0 = clock_type::now();
  const repro::CaseResult res = repro::run_case("r2-polar-extension");
  if (!res.pass) std::printf("%s", repro::format_result(res).c_str());
  report(2, "conjugation-extension matrices, bit level", res.pass,
         seconds_since(t0));
}

// ---- criteria 3 and 4: the randomized campaign -----------------------------

void criteria_3_and_4() {
  const auto t0 = clock_type::now();
  suite::SuiteOptions opt;
  opt.seed = 1;
  opt.n_cases = 500;
  opt.with_certifier = true;
  const suite::SuiteReport rep = suite::run_property_suite(opt);
  const double secs = seconds_since(t0);

  auto prop = [&](const std::string& name) -> const suite::PropertyResult* {
    for (const auto& p : rep.properties)
      if (p.name == name) return &p;
    return nullptr;
  };
  auto prop_ok = [&](const std::string& name, int min_cases) {
    const suite::PropertyResult* p = prop(name);
    if (!p || p->cases < min_cases || p->failures != 0) {
      if (p && !p->first_counterexample.empty())
        std::printf("  %s: %s\n", name.c_str(), p->first_counterexample.c_str());
      return false;
    }
    return true;
  };

  bool c3 = prop_ok("coherence-cs-vs-certifier", 500) &&
            prop_ok("coherence-duggal-vs-certifier", 500) &&
            prop_ok("coherence-aluthge-vs-certifier", 500) &&
            prop_ok("coherence-mean-vs-certifier", 500) &&
            prop_ok("certificate-validity", 500);
  const bool in_time = secs < 600.0;
  char detail[128];
  std::snprintf(detail, sizeof(detail),
                "500 shifts x {T, duggal, aluthge(4 t), mean(3 t)}");
  report(3, "criterion/oracle coherence, zero inconclusive", c3 && in_time,
         secs, in_time ? detail : "runtime budget of 600 s exceeded");

  const auto t1 = clock_type::now();
  bool c4 = prop_ok("cs-implies-aluthge-half", 200) &&
            prop_ok("cs-implies-mean-criterion", 200) &&
            prop_ok("aluthge-t1-matches-duggal-criterion", 200) &&
            prop_ok("bothcs-equals-cs-and-duggal", 200) &&
            prop_ok("n3-duggal-always-cs", 200) &&
            prop_ok("gauge-invariance-of-criteria", 200) &&
            prop_ok("gauge-equivariance-of-transforms", 200);
  report(4, "theorem-level properties on 500 random instances", c4,
         seconds_since(t1), "evaluated inside the same campaign");
}

// ---- criterion 5: the mean-transform surface -------------------------------

void criterion_5() {
  const auto t0 = clock_type::now();

  int mismatches = 0;
  for (int a = 1; a <= 20; ++a)
    for (int b = 1; b <= 20; ++b)
      for (int c = 1; c <= 20; ++c) {
        const double w1 = 0.5 * a, w2 = 0.5 * b, w3 = 0.5 * c;
        const WeightedShift s(4, {cxd{w1, 0}, cxd{w2, 0}, cxd{w3, 0}});
        const bool surface = std::abs(w1 - (w2 + w3)) <= 1e-9;
        if (mean_cs_criterion(s, 0.0) != surface) ++mismatches;
      }

  // 50 certifier samples: 25 on the surface, 25 generic grid points
  struct Point {
    double w1, w2, w3;
  };
  std::vector<Point> pts;
  Rng rng(505);
  while (pts.size() < 25) {
    const int b = static_cast<int>(rng.uniform_int(1, 19));
    const int c = static_cast<int>(rng.uniform_int(1, 20 - b));
    pts.push_back({0.5 * (b + c), 0.5 * b, 0.5 * c});
  }
  while (pts.size() < 50) {
    const int a = static_cast<int>(rng.uniform_int(1, 20));
    const int b = static_cast<int>(rng.uniform_int(1, 20));
    const int c = static_cast<int>(rng.uniform_int(1, 20));
    pts.push_back({0.5 * a, 0.5 * b, 0.5 * c});
  }

  std::atomic<int> next{0};
  std::atomic<int> disagreements{0};
  auto worker = [&] {
    for (int i = next.fetch_add(1); i < 50; i = next.fetch_add(1)) {
      const Point& p = pts[static_cast<std::size_t>(i)];
      const WeightedShift s(4, {cxd{p.w1, 0}, cxd{p.w2, 0}, cxd{p.w3, 0}});
      const bool surface = std::abs(p.w1 - (p.w2 + p.w3)) <= 1e-9;
      const SymmetryVerdict v = certify_cs(mean_t(to_matrix(s), 0.0));
      const bool agree = (v.status == CsStatus::CS) == surface &&
                         v.status != CsStatus::Inconclusive;
      if (!agree) disagreements.fetch_add(1);
    }
  };
  std::thread th(worker);
  worker();
  th.join();

  char detail[128];
  std::snprintf(detail, sizeof(detail),
                "%d grid mismatches, %d certifier disagreements", mismatches,
                disagreements.load());
  report(5, "mean-transform surface w1 = w2 + w3",
         mismatches == 0 && disagreements.load() == 0, seconds_since(t0),
         detail);
}

// ---- criterion 6: numerical substrate ---------------------------------------

void criterion_6() {
  const auto t0 = clock_type::now();
  bool ok = true;
  std::string why;

  // Hermitian eigensolver reconstruction, n <= 12
  Rng rng(606);
  for (std::size_t n = 1; n <= 12 && ok; ++n) {
    for (int rep = 0; rep < 3; ++rep) {
      ComplexMatrix a(n, n);
      for (std::size_t i = 0; i < n; ++i) {
        a(i, i) = rng.gauss();
        for (std::size_t j = i + 1; j < n; ++j) {
          a(i, j) = rng.gauss_complex();
          a(j, i) = std::conj(a(i, j));
        }
      }
      const HermitianEig e = hermitian_eig(a);
      ComplexMatrix scaled = e.eigenvectors;
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i) scaled(i, k) *= e.eigenvalues[k];
      const double err =
          frobenius_norm(matmul(scaled, adjoint(e.eigenvectors)) - a);
      if (err > 1e-10 * (1.0 + frobenius_norm(a))) {
        ok = false;
        why = "eigensolver reconstruction out of tolerance";
      }
    }
  }

  // polar reconstruction incl. rank-deficient inputs with kernel agreement
  for (int rep = 0; rep < 10 && ok; ++rep) {
    const std::size_t n = 3 + static_cast<std::size_t>(rep % 5);
    ComplexMatrix t;
    std::vector<std::size_t> kernel_cols;
    const ComplexMatrix q = random_unitary(n, 700 + static_cast<std::uint64_t>(rep));
    if (rep % 2 == 0) {
      // rank deficient by construction: zero out trailing singular values
      const ComplexMatrix w = random_unitary(n, 800 + static_cast<std::uint64_t>(rep));
      ComplexMatrix d(n, n);
      for (std::size_t i = 0; i + 2 < n; ++i) d(i, i) = 1.0 + double(i);
      kernel_cols = {n - 2, n - 1};
      t = matmul(w, matmul(d, adjoint(q)));
    } else {
      t = random_matrix(rng, n);
    }
    const PolarParts pp = polar_decompose(t);
    if (frobenius_norm(matmul(pp.U, pp.P) - t) > 1e-9 * (1.0 + frobenius_norm(t))) {
      ok = false;
      why = "polar reconstruction out of tolerance";
    }
    for (std::size_t col : kernel_cols) {
      std::vector<cxd> ux(n, cxd{});
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) ux[i] += pp.U(i, k) * q(k, col);
      double nrm = 0.0;
      for (const cxd& v : ux) nrm += std::norm(v);
      if (std::sqrt(nrm) > 1e-9) {
        ok = false;
        why = "kernel of U does not match kernel of T";
      }
    }
  }

  // certifier gradient against central finite differences
  for (int point = 0; point < 20 && ok; ++point) {
    const std::size_t n = 3 + static_cast<std::size_t>(point % 4);
    const ComplexMatrix t = random_matrix(rng, n);
    const ComplexMatrix v = random_unitary(n, 900 + static_cast<std::uint64_t>(point));
    const ComplexMatrix g = cs_objective_gradient(t, v);
    for (int dir = 0; dir < 10 && ok; ++dir) {
      const ComplexMatrix omega = random_skew_hermitian(rng, n);
      double ip = 0.0;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          ip += (std::conj(g(i, j)) * omega(i, j)).real();
      const double eps = 1e-5;
      const double fp = cs_objective(t, matmul(v, cay_series(cxd{eps, 0} * omega)));
      const double fm = cs_objective(t, matmul(v, cay_series(cxd{-eps, 0} * omega)));
      const double fd = (fp - fm) / (2.0 * eps);
      if (std::abs(ip - fd) > 1e-5 * std::max(1.0, std::abs(fd))) {
        ok = false;
        why = "gradient/finite-difference mismatch";
      }
    }
  }

  report(6, "numerical substrate: eig, polar, gradient", ok, seconds_since(t0),
         why);
}

// ---- criterion 7: quasinormality computation --------------------------------

void criterion_7() {
  const auto t0 = clock_type::now();
  const WeightedShift s(4, {cxd{1, 0}, cxd{1, 0}, cxd{1, 0}});
  const ComplexMatrix t = to_matrix(s);
  const PolarParts pp = polar_decompose(t);

  bool ok = true;
  std::string why;
  if (!(matmul(t, pp.P) == t)) {
    ok = false;
    why = "T|T| != T at the bit level";
  }
  ComplexMatrix tt(4, 4);
  matmul_adjA_into(tt, t, t);
  if (frobenius_norm(commutator(t, tt)) < 1.0) {
    ok = false;
    why = "||[T, T^*T]|| below 1";
  }
  if (!is_centered(t)) {
    ok = false;
    why = "equal-weight shift not detected as centered";
  }
  if (is_quasinormal(t)) {
    ok = false;
    why = "equal-weight shift wrongly quasinormal";
  }
  report(7, "quasinormality of the equal-weight shift", ok, seconds_since(t0),
         why);
}

}  // namespace

int main() {
  const auto t0 = clock_type::now();
  std::printf("oplab acceptance suite\n");
  criterion_1();
  criterion_2();
  criteria_3_and_4();
  criterion_5();
  criterion_6();
  criterion_7();
  std::printf("%d of 7 criteria passed (total %.1f s)\n", 7 - g_failures,
              seconds_since(t0));
  return g_failures == 0 ? 0 : 1;
}
