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

#include <string>
#include <vector>

namespace oplab::repro {

// One checked expectation inside a catalog case.
struct Check {
  std::string what;
  bool pass = false;
  std::string detail;  // measured values, shown on failure and in reports
};

struct CaseResult {
  std::string id;
  bool pass = false;
  std::vector<Check> checks;
};

// Catalog of reproducible worked examples and counterexamples. Each id runs
// a fixed construction and compares against frozen expectations.
std::vector<std::string> case_ids();

// Throws std::out_of_range for an unknown id.
CaseResult run_case(const std::string& id);

std::string format_result(const CaseResult& r);

}  // namespace oplab::repro
