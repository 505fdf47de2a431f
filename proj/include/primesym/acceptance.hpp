// Copyright 2026 The primesym Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace primesym {

struct CriterionResult {
  std::string suite;
  std::string name;
  bool passed = false;
  std::string measured;
  std::string expected;
};

// inverse, feigenbaum, anchors, sieve, period, order, bands, twins,
// estimate, runtime.
const std::vector<std::string>& acceptance_suites();

// Runs one suite, or every suite for "all". Unknown names throw DomainError.
// A failing criterion never aborts the run.
std::vector<CriterionResult> run_acceptance(std::string_view suite);

// "PASS [suite] name: measured ... (expected ...)"
std::string format_criterion(const CriterionResult& r);

}  // namespace primesym
