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
 * CSV and JSON serialization of score tables, POM dumps and verification
 * reports. Complex entries are [re, im] pairs, matrices are row-major and
 * angles are in radians. Doubles are written in shortest round-trip form.
 */

#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qmatch/bosonic.hpp"
#include "qmatch/harness.hpp"
#include "qmatch/verify.hpp"

namespace qmatch {

inline constexpr std::string_view kCsvHeader =
    "N,K,strategy,score_analytic,score_quadrature,score_mc,score_mc_stderr,seed";

/// Curve strategy label for the reconstructed known-template baseline.
inline constexpr std::string_view kBaselineLabel = "k_infinity_reconstructed";

struct TableRow {
    int n_inputs;
    int k_copies;
    std::string strategy;
    std::optional<double> analytic;
    std::optional<double> quadrature;
    std::optional<double> monte_carlo_mean;
    std::optional<double> monte_carlo_stderr;
    std::optional<std::uint64_t> seed;
};

TableRow report_row(const ScoreReport &report);

/// Long layout: per N, rows "semiclassical" (K = 1), "universal" or
/// "universal_numeric", and kBaselineLabel. Absent scores are skipped.
std::vector<TableRow> curve_rows(const std::vector<CurveRow> &curve);

/// Header line plus one line per row; absent values are empty fields.
std::string to_csv(const std::vector<TableRow> &rows);

/// {"kind": "score_table", "rows": [...]} with nulls for absent values.
std::string to_json(const std::vector<TableRow> &rows);

/// {"kind": "verify_report", "suite", "passed", "checks": [...]}.
std::string to_json(std::string_view suite, const std::vector<CheckResult> &checks);

struct PomDump {
    std::string which; ///< classifier, learning or universal
    POM pom;
    int n_inputs = 1;
    std::optional<int> k_copies;
    std::optional<double> theta;
    std::map<std::string, std::string> metadata;
};

/// Builds the named POM ("classifier", "learning" or "universal") with the
/// parameters a dump records. Learning POMs need k_copies = 1; universal
/// POMs use the closed form at K = 1 and the numeric solver otherwise.
PomDump make_pom_dump(std::string_view which, int n_inputs, int k_copies, double theta,
                      std::string_view learning_kind = "discrete_three",
                      std::size_t grid_points = 64);

std::string pom_to_json(const PomDump &dump);
/// Inverse of pom_to_json; operators are reproduced bit-exactly. Throws
/// InvalidArgument on malformed input.
PomDump pom_from_json(std::string_view text);

/// Writes `content` to a sibling temporary file and renames it over `path`.
void write_atomic(const std::filesystem::path &path, std::string_view content);

/// Shortest decimal that parses back to the same double.
std::string format_double(double value);

} // namespace qmatch
