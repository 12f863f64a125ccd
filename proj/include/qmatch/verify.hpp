// Copyright 2026 The qmatch Authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * Named invariant suites run by `qmatch verify`.
 */

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace qmatch {

struct CheckResult {
    std::string name;
    bool passed;
    double residual;
    double tolerance;
    /// Negative controls pass when the residual exceeds the tolerance.
    bool expect_violation = false;
};

enum class VerifySuite { pom, optimality, oracle, all };

VerifySuite parse_verify_suite(std::string_view name);

/// PSD elements and identity resolution for every POM family, plus score
/// invariance under kernel and |T> completion choices.
std::vector<CheckResult> run_pom_suite();

/// Holevo conditions for the K = 1 learning POMs over N = 1..10 and a
/// 64-point Θ grid, plus a mislabeled negative control.
std::vector<CheckResult> run_optimality_suite();

/// Closed-form operators against the quadrature oracle for N <= 6, K <= 3
/// at `draws` random angles from a seeded generator.
std::vector<CheckResult> run_oracle_suite(int draws = 10, std::uint64_t seed = 20260915);

std::vector<CheckResult> run_suite(VerifySuite suite);

} // namespace qmatch
