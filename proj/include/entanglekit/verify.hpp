// Copyright 2026 The EntangleKit Authors
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

// Randomized verification of the library's structural theorems. Every suite
// draws from its own generator seeded from (seed, suite index), so a run is
// reproducible regardless of how suites are scheduled across threads.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "entanglekit/io.hpp"

namespace entanglekit {

inline constexpr std::uint64_t kDefaultVerifySeed = 20260601;

struct VerifyOptions {
  std::uint64_t seed = kDefaultVerifySeed;
  /// Randomized instances per suite.
  std::size_t instances = 200;
  /// Run suites concurrently (results are aggregated in suite order).
  bool parallel = true;
  /// Name of a suite whose first check is forced to fail. Used to confirm
  /// that failures propagate to the report and the exit status.
  std::string inject_fault;
};

struct SuiteResult {
  std::string name;
  std::string claim;
  bool passed = true;
  std::size_t checks = 0;
  std::size_t failures = 0;
  /// First failing instance, enough to reproduce it.
  std::optional<Json> counterexample;
};

struct VerifyReport {
  std::uint64_t seed = 0;
  std::size_t instances = 0;
  std::vector<SuiteResult> suites;

  bool all_passed() const;
};

std::vector<std::string> suite_names();

VerifyReport run_verification(const VerifyOptions& options);

Json to_json(const VerifyReport& report);

}  // namespace entanglekit
