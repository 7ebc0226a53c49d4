// Copyright 2026 The qse-toolkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qse {

struct SuiteResult {
  std::string name;
  int trials = 0;
  int failures = 0;
  double worst = 0.0;  // largest observed violation (suite-specific scale)
  bool passed = false;
  std::string note;
};

struct VerifyOptions {
  int trials = 100;          // samples per suite
  std::uint64_t seed = 42;
  // Test hook: inflates one side of the length-monotonicity comparison so the
  // suite must detect a planted violation; 0 in normal operation.
  double length_inflation = 0.0;
};

// Randomized self-check suites covering the library's invariants
// (round trips, dual-route agreement, monotonicity, discord properties, ...).
// Deterministic for a fixed (trials, seed): each suite draws from its own
// split-off stream.
std::vector<SuiteResult> run_verify(const VerifyOptions& options = {});

bool all_passed(const std::vector<SuiteResult>& results);
std::string format_report(const std::vector<SuiteResult>& results);

}  // namespace qse
