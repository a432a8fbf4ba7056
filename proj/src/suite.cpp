// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.

#include "oplab/suite.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <thread>

#include "oplab/polar.hpp"
#include "oplab/rng.hpp"
#include "oplab/symmetry.hpp"

namespace oplab::suite {

namespace {

std::string fmtnote(const char* pattern, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), pattern, v);
  return buf;
}

// splitmix-style per-case seed derivation; keeps cases decorrelated while
// staying reproducible from (suite seed, case index) alone.
std::uint64_t mix(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

enum Prop : int {
  kCohCs = 0,
  kCohDuggal,
  kCohAluthge,
  kCohMean,
  kCertificateValid,
  kGaugeCriteria,
  kGaugeTransforms,
  kCsImpliesAluthgeHalf,
  kCsImpliesMean,
  kAluthgeOneIsDuggal,
  kBothCsConsistent,
  kN3DuggalAlwaysCs,
  kUnitaryInvariance,
  kNumProps
};

const char* kPropNames[kNumProps] = {
    "coherence-cs-vs-certifier",
    "coherence-duggal-vs-certifier",
    "coherence-aluthge-vs-certifier",
    "coherence-mean-vs-certifier",
    "certificate-validity",
    "gauge-invariance-of-criteria",
    "gauge-equivariance-of-transforms",
    "cs-implies-aluthge-half",
    "cs-implies-mean-criterion",
    "aluthge-t1-matches-duggal-criterion",
    "bothcs-equals-cs-and-duggal",
    "n3-duggal-always-cs",
    "unitary-invariance-of-certifier",
};

constexpr double kAluthgeTs[] = {0.25, 0.5, 0.75, 1.0};
constexpr double kMeanTs[] = {0.0, 0.25, 0.5};
constexpr double kCsMeanTs[] = {0.1, 0.25, 0.5};

struct CaseOutcome {
  bool evaluated[kNumProps] = {};
  bool failed[kNumProps] = {};
  std::string note[kNumProps];
};

// criterion verdict vs certifier verdict; Inconclusive always fails.
bool verdicts_agree(bool criterion_cs, const SymmetryVerdict& v) {
  if (v.status == CsStatus::Inconclusive) return false;
  return criterion_cs == (v.status == CsStatus::CS);
}

std::string verdict_note(const WeightedShift& s, bool criterion_cs,
                         const SymmetryVerdict& v, const char* what) {
  char buf[128];
  std::snprintf(buf, sizeof(buf), "%s: criterion=%s certifier=%s residual=%.3e",
                what, criterion_cs ? "CS" : "NotCS", to_string(v.status),
                v.residual);
  return describe(s) + " | " + buf;
}

void run_one_case(int index, const SuiteOptions& opt, const Criteria& crit,
                  CaseOutcome& out) {
  const std::uint64_t cs0 = mix(opt.seed, static_cast<std::uint64_t>(index));
  const WeightedShift s = random_shift(cs0);
  const ComplexMatrix t = to_matrix(s);

  auto fail = [&](Prop p, const std::string& note) {
    out.failed[p] = true;
    if (out.note[p].empty()) out.note[p] = note;
  };
  auto mark = [&](Prop p) { out.evaluated[p] = true; };

  // certificate check shared by all coherence properties
  auto check_certificate = [&](const ComplexMatrix& m, const SymmetryVerdict& v) {
    mark(kCertificateValid);
    if (v.status != CsStatus::CS) return;
    const double bound = 1e-7 * (1.0 + frobenius_norm(m));
    if (!v.certificate.has_value()) {
      fail(kCertificateValid, describe(s) + " | CS verdict without certificate");
      return;
    }
    const AntilinearMap c{*v.certificate};
    if (!is_conjugation(c)) {
      fail(kCertificateValid, describe(s) + " | certificate not a conjugation");
      return;
    }
    if (check_cs_with(m, c) > bound)
      fail(kCertificateValid, describe(s) + " | certificate residual above bound");
  };

  SymmetryVerdict verdict_t;  // reused by the unitary-invariance probe
  if (opt.with_certifier) {
    verdict_t = certify_cs(t);
    mark(kCohCs);
    if (!verdicts_agree(crit.cs(s), verdict_t))
      fail(kCohCs, verdict_note(s, crit.cs(s), verdict_t, "T"));
    check_certificate(t, verdict_t);

    const ComplexMatrix td = duggal(t);
    const SymmetryVerdict vd = certify_cs(td);
    mark(kCohDuggal);
    if (!verdicts_agree(crit.duggal(s), vd))
      fail(kCohDuggal, verdict_note(s, crit.duggal(s), vd, "duggal(T)"));
    check_certificate(td, vd);

    mark(kCohAluthge);
    for (double tt : kAluthgeTs) {
      const ComplexMatrix m = aluthge_t(t, tt);
      const SymmetryVerdict v = certify_cs(m);
      if (!verdicts_agree(crit.aluthge(s, tt), v))
        fail(kCohAluthge, verdict_note(s, crit.aluthge(s, tt), v, "aluthge"));
      check_certificate(m, v);
    }

    mark(kCohMean);
    for (double tt : kMeanTs) {
      const ComplexMatrix m = mean_t(t, tt);
      const SymmetryVerdict v = certify_cs(m);
      if (!verdicts_agree(crit.mean(s, tt), v))
        fail(kCohMean, verdict_note(s, crit.mean(s, tt), v, "mean"));
      check_certificate(m, v);
    }
  }

  // gauge invariance of the criteria
  {
    mark(kGaugeCriteria);
    const GaugeResult g = unimodular_gauge(s);
    bool ok = crit.cs(s) == crit.cs(g.positive) &&
              crit.duggal(s) == crit.duggal(g.positive);
    for (double tt : kAluthgeTs)
      ok = ok && crit.aluthge(s, tt) == crit.aluthge(g.positive, tt);
    for (double tt : kMeanTs)
      ok = ok && crit.mean(s, tt) == crit.mean(g.positive, tt);
    if (!ok) fail(kGaugeCriteria, describe(s) + " | criterion changed under gauge");

    // gauge equivariance of the transforms themselves
    mark(kGaugeTransforms);
    const ComplexMatrix tg = to_matrix(g.positive);
    const ComplexMatrix dadj = adjoint(g.D);
    const double eps = 1e-9 * (1.0 + frobenius_norm(t));
    // D^* T D = T_gauged, so X(T_gauged) must equal D^* X(T) D.
    const auto check_equiv = [&](const ComplexMatrix& xt,
                                 const ComplexMatrix& xtg, const char* what) {
      const double err = frobenius_norm(xtg - matmul(dadj, matmul(xt, g.D)));
      if (err > eps)
        fail(kGaugeTransforms,
             describe(s) + " | " + what + fmtnote(" equivariance err %.3e", err));
    };
    check_equiv(duggal(t), duggal(tg), "duggal");
    check_equiv(aluthge_t(t, 0.5), aluthge_t(tg, 0.5), "aluthge(1/2)");
    check_equiv(mean_t(t, 0.25), mean_t(tg, 0.25), "mean(1/4)");
  }

  // implication properties on a CS-conditioned sample
  {
    const WeightedShift cs_s = random_cs_shift(mix(cs0, 1));
    mark(kCsImpliesAluthgeHalf);
    if (!crit.aluthge(cs_s, 0.5))
      fail(kCsImpliesAluthgeHalf, describe(cs_s) + " | aluthge(1/2) criterion false");
    mark(kCsImpliesMean);
    for (double tt : kCsMeanTs)
      if (!crit.mean(cs_s, tt))
        fail(kCsImpliesMean, describe(cs_s) + " | mean criterion false");
  }

  // endpoint identity and bothcs consistency on the unconditioned sample
  {
    mark(kAluthgeOneIsDuggal);
    if (crit.aluthge(s, 1.0) != crit.duggal(s))
      fail(kAluthgeOneIsDuggal, describe(s) + " | t=1 disagrees with duggal");

    mark(kBothCsConsistent);
    bool all_equal = true;
    for (std::size_t k = 0; k + 1 < s.n(); ++k)
      all_equal = all_equal &&
                  std::abs(s.modulus(k) - s.modulus(0)) <=
                      kCritTol * std::max(1.0, s.modulus(0));
    const bool both = both_cs_criterion(s);
    if (both != (crit.cs(s) && crit.duggal(s)) || both != all_equal)
      fail(kBothCsConsistent, describe(s) + " | bothcs inconsistent");
  }

  // n=3 sample: the Duggal transform is always complex symmetric
  {
    Rng rng(mix(cs0, 2));
    std::vector<cxd> w(2);
    for (auto& x : w)
      x = static_cast<double>(rng.uniform_int(1, 3)) * rng.unit_phase();
    const WeightedShift s3(3, w);
    mark(kN3DuggalAlwaysCs);
    if (!crit.duggal(s3))
      fail(kN3DuggalAlwaysCs, describe(s3) + " | criterion false at n=3");
    if (opt.with_certifier) {
      const SymmetryVerdict v = certify_cs(duggal(to_matrix(s3)));
      if (v.status != CsStatus::CS)
        fail(kN3DuggalAlwaysCs, describe(s3) + " | certifier not CS at n=3");
    }
  }

  // unitary invariance probe on a subsample
  if (opt.with_certifier && index % 10 == 0) {
    mark(kUnitaryInvariance);
    const ComplexMatrix q = random_unitary(t.rows(), mix(cs0, 3));
    ComplexMatrix tq(t.rows(), t.rows());
    {
      const ComplexMatrix tq1 = matmul(t, q);
      matmul_adjA_into(tq, q, tq1);
    }
    const SymmetryVerdict v = certify_cs(tq);
    if (v.status != verdict_t.status)
      fail(kUnitaryInvariance,
           describe(s) + " | status changed under unitary conjugation");
  }
}

}  // namespace

WeightedShift random_shift(std::uint64_t seed) {
  Rng rng(seed);
  const std::size_t n = static_cast<std::size_t>(rng.uniform_int(3, 8));
  std::vector<cxd> w(n - 1);
  for (auto& x : w)
    x = static_cast<double>(rng.uniform_int(1, 3)) * rng.unit_phase();
  return WeightedShift(n, std::move(w));
}

WeightedShift random_cs_shift(std::uint64_t seed) {
  Rng rng(seed);
  const std::size_t n = static_cast<std::size_t>(rng.uniform_int(3, 8));
  std::vector<double> m(n - 1);
  for (std::size_t k = 0; k < (n - 1 + 1) / 2; ++k) {
    m[k] = static_cast<double>(rng.uniform_int(1, 3));
    m[n - 2 - k] = m[k];
  }
  std::vector<cxd> w(n - 1);
  for (std::size_t k = 0; k < n - 1; ++k) w[k] = m[k] * rng.unit_phase();
  return WeightedShift(n, std::move(w));
}

std::string describe(const WeightedShift& s) {
  std::ostringstream os;
  os << "n=" << s.n() << " weights";
  char buf[64];
  for (const cxd& w : s.weights()) {
    std::snprintf(buf, sizeof(buf), " %.6g%+.6gi", w.real(), w.imag());
    os << buf;
  }
  return os.str();
}

bool SuiteReport::all_pass() const {
  for (const PropertyResult& p : properties)
    if (!p.pass()) return false;
  return true;
}

std::string SuiteReport::to_text() const {
  std::ostringstream os;
  os << "property suite: seed=" << seed << " cases=" << n_cases << "\n";
  for (const PropertyResult& p : properties) {
    os << "  [" << (p.pass() ? "PASS" : "FAIL") << "] " << p.name
       << "  cases=" << p.cases << " failures=" << p.failures << "\n";
    if (!p.pass() && !p.first_counterexample.empty())
      os << "         counterexample: " << p.first_counterexample << "\n";
  }
  os << "result: " << (all_pass() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

SuiteReport run_property_suite(const SuiteOptions& opt, const Criteria& crit) {
  const int n = opt.n_cases;
  std::vector<CaseOutcome> outcomes(static_cast<std::size_t>(n));

  unsigned threads = opt.threads ? opt.threads : std::thread::hardware_concurrency();
  if (threads < 1) threads = 1;
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max(1, n)));

  if (threads <= 1) {
    for (int i = 0; i < n; ++i)
      run_one_case(i, opt, crit, outcomes[static_cast<std::size_t>(i)]);
  } else {
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned w = 0; w < threads; ++w)
      pool.emplace_back([&] {
        for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1))
          run_one_case(i, opt, crit, outcomes[static_cast<std::size_t>(i)]);
      });
    for (std::thread& th : pool) th.join();
  }

  SuiteReport rep;
  rep.seed = opt.seed;
  rep.n_cases = n;
  rep.properties.resize(kNumProps);
  for (int p = 0; p < kNumProps; ++p) rep.properties[p].name = kPropNames[p];
  // sequential index-order aggregation keeps the report independent of the
  // thread schedule
  for (const CaseOutcome& oc : outcomes)
    for (int p = 0; p < kNumProps; ++p) {
      if (!oc.evaluated[p]) continue;
      ++rep.properties[p].cases;
      if (oc.failed[p]) {
        ++rep.properties[p].failures;
        if (rep.properties[p].first_counterexample.empty())
          rep.properties[p].first_counterexample = oc.note[p];
      }
    }
  if (!opt.with_certifier) {
    // certifier-backed properties report zero cases in closed-form-only runs
    rep.properties.erase(
        std::remove_if(rep.properties.begin(), rep.properties.end(),
                       [](const PropertyResult& p) { return p.cases == 0; }),
        rep.properties.end());
  }
  return rep;
}

}  // namespace oplab::suite
