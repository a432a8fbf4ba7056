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

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "oplab/shift.hpp"

namespace oplab::suite {

// The closed-form criteria as injectable hooks. The production defaults are
// the shift module's functions; tests swap in broken variants to prove the
// suite actually detects them.
struct Criteria {
  std::function<bool(const WeightedShift&)> cs = [](const WeightedShift& s) {
    return cs_criterion(s);
  };
  std::function<bool(const WeightedShift&)> duggal =
      [](const WeightedShift& s) { return duggal_cs_criterion(s); };
  std::function<bool(const WeightedShift&, double)> aluthge =
      [](const WeightedShift& s, double t) { return aluthge_cs_criterion(s, t); };
  std::function<bool(const WeightedShift&, double)> mean =
      [](const WeightedShift& s, double t) { return mean_cs_criterion(s, t); };
};

struct PropertyResult {
  std::string name;
  int cases = 0;
  int failures = 0;
  std::string first_counterexample;  // weight dump of the lowest failing case
  bool pass() const { return failures == 0; }
};

struct SuiteReport {
  std::uint64_t seed = 0;
  int n_cases = 0;
  std::vector<PropertyResult> properties;
  bool all_pass() const;
  // Deterministic text rendering: identical (seed, n_cases, results) give
  // identical bytes regardless of thread count.
  std::string to_text() const;
};

struct SuiteOptions {
  std::uint64_t seed = 1;
  int n_cases = 100;
  unsigned threads = 0;  // 0 = hardware concurrency
  bool with_certifier = true;  // closed-form-only run when false (fast)
};

// Randomized coherence suites driving the shift-family and certifier
// invariants: criterion vs certifier on every transform, gauge invariance
// and equivariance, endpoint identities, implication properties.
SuiteReport run_property_suite(const SuiteOptions& opt,
                               const Criteria& crit = Criteria{});

// Deterministic sample of the suite's shift distribution: dimensions in
// [3, 8], weight moduli from {1, 2, 3}, uniform phases.
WeightedShift random_shift(std::uint64_t seed);

// Same distribution conditioned on the Zhu palindrome (CS by construction).
WeightedShift random_cs_shift(std::uint64_t seed);

std::string describe(const WeightedShift& s);

}  // namespace oplab::suite
