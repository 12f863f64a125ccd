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

#include "qmatch/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "qmatch/classifier.hpp"
#include "qmatch/harness.hpp"
#include "qmatch/learning.hpp"
#include "qmatch/universal.hpp"

namespace qmatch {

namespace {

constexpr double kPomTolerance = 1e-10;
constexpr double kCompletionTolerance = 1e-12;
constexpr double kOracleTolerance = 1e-10;
constexpr double kNegativeControlFloor = 1e-3;
constexpr int kMaxSuiteInputs = 10;

CheckResult upper_bound(std::string name, double residual, double tolerance) {
    return {std::move(name), residual <= tolerance, residual, tolerance};
}

CheckResult pom_check(std::string name, const POM &pom) {
    const PomCheck c = POM::check(pom.elements());
    return upper_bound(std::move(name), std::max(c.identity_residual, -c.min_eigenvalue),
                       kPomTolerance);
}

std::string tag(int n, int k) { return "N=" + std::to_string(n) + ",K=" + std::to_string(k); }

} // namespace

VerifySuite parse_verify_suite(std::string_view name) {
    if (name == "pom") return VerifySuite::pom;
    if (name == "optimality") return VerifySuite::optimality;
    if (name == "oracle") return VerifySuite::oracle;
    if (name == "all") return VerifySuite::all;
    throw InvalidArgument("unknown verify suite '" + std::string(name) + "'");
}

std::vector<CheckResult> run_pom_suite() {
    std::vector<CheckResult> out;
    for (int n = 1; n <= kMaxSuiteInputs; ++n) {
        for (double theta : {0.0, 0.7, kPi / 2, 2.5, -1.9}) {
            out.push_back(pom_check("classifier N=" + std::to_string(n) +
                                        " theta=" + std::to_string(theta),
                                    classifier_pom(ClassifierSpec(n, theta))));
        }
    }
    for (auto kind : {LearningKind::covariant_sqrt, LearningKind::discrete_three,
                      LearningKind::separable_four}) {
        out.push_back(pom_check("learning " + std::string(to_string(kind)),
                                make_learning_strategy(kind).pom));
    }
    for (int n = 1; n <= kMaxSuiteInputs; ++n) {
        out.push_back(pom_check("universal " + tag(n, 1), universal_pom_k1(n)));
        out.push_back(
            pom_check("universal kernel->Pi_2 " + tag(n, 1),
                      universal_pom_k1(n, KernelAssignment::second)));
    }
    for (int n = 1; n <= 5; ++n) {
        out.push_back(pom_check("universal numeric " + tag(n, 2),
                                universal_solver_numeric({n, 2}).pom));
    }

    // Completion choices must not move the score.
    for (int n = 1; n <= kMaxSuiteInputs; ++n) {
        const MatchingProblem problem{n, 1};
        const double a = universal_pom_score(problem, universal_pom_k1(n));
        const double b = universal_pom_score(problem, universal_pom_k1(n, KernelAssignment::second));
        out.push_back(upper_bound("kernel completion " + tag(n, 1), std::abs(a - b),
                                  kCompletionTolerance));

        double lo = strategy_score(discrete_three_pom(0), n);
        double hi = lo;
        for (std::size_t slot = 1; slot < 3; ++slot) {
            const double s = strategy_score(discrete_three_pom(slot), n);
            lo = std::min(lo, s);
            hi = std::max(hi, s);
        }
        out.push_back(upper_bound("triplet completion " + tag(n, 1), hi - lo,
                                  kCompletionTolerance));
    }
    for (int n = 1; n <= 3; ++n) {
        const MatchingProblem problem{n, 2};
        const double a =
            universal_pom_score(problem, universal_solver_numeric(problem, ZeroPolicy::include_zero).pom);
        const double b =
            universal_pom_score(problem, universal_solver_numeric(problem, ZeroPolicy::exclude_zero).pom);
        out.push_back(upper_bound("kernel completion numeric " + tag(n, 2), std::abs(a - b),
                                  kCompletionTolerance));
    }
    return out;
}

std::vector<CheckResult> run_optimality_suite() {
    std::vector<CheckResult> out;
    const std::vector<double> grid = uniform_theta_grid(64);
    for (auto kind : {LearningKind::covariant_sqrt, LearningKind::discrete_three,
                      LearningKind::separable_four}) {
        const LearningStrategy strategy = make_learning_strategy(kind);
        for (int n = 1; n <= kMaxSuiteInputs; ++n) {
            const OptimalityReport r = verify_optimality(strategy, n, grid);
            const std::string base = std::string(to_string(kind)) + " N=" + std::to_string(n);
            out.push_back(upper_bound("psd " + base, std::max(0.0, -r.psd_margin), kPomTolerance));
            out.push_back(
                upper_bound("commutation " + base, r.commutation_residual, kPomTolerance));
            out.push_back(upper_bound("score " + base,
                                      std::abs(r.score - semiclassical_max_score(n)),
                                      kPomTolerance));
        }
    }
    // Negative control: every guess moved to the opposite angle.
    LearningStrategy wrong = make_learning_strategy(LearningKind::covariant_sqrt);
    for (std::size_t i = 0; i < grid.size() / 2; ++i) {
        wrong = swap_guesses(wrong, i, i + grid.size() / 2);
    }
    for (int n : {1, 5}) {
        const OptimalityReport r = verify_optimality(wrong, n, grid);
        const double violation = std::max(r.commutation_residual, -r.psd_margin);
        out.push_back({"negative control opposite guesses N=" + std::to_string(n),
                       violation > kNegativeControlFloor, violation, kNegativeControlFloor, true});
    }
    return out;
}

std::vector<CheckResult> run_oracle_suite(int draws, std::uint64_t seed) {
    std::vector<CheckResult> out;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> angle(0.0, kTwoPi);

    for (int n = 1; n <= 6; ++n) {
        const QuadratureSpec spec{minimum_quadrature_points(n, 0)};
        double worst = 0.0;
        for (int d = 0; d < draws; ++d) {
            const double g = angle(rng);
            worst = std::max(worst, max_abs_diff(score_operator_w(n, g).matrix(),
                                                 quadrature_w_of_g(n, g, spec).matrix()));
        }
        out.push_back(upper_bound("W(g) N=" + std::to_string(n), worst, kOracleTolerance));
    }
    for (int n = 1; n <= 6; ++n) {
        for (int k = 1; k <= 3; ++k) {
            const QuadratureSpec spec{minimum_quadrature_points(n, k)};
            double worst = 0.0;
            for (int d = 0; d < draws; ++d) {
                const double theta = angle(rng);
                worst = std::max(worst,
                                 max_abs_diff(learning_score_operator(n, k, theta).matrix(),
                                              quadrature_g_of_theta(n, k, theta, spec).matrix()));
            }
            out.push_back(upper_bound("G(theta) " + tag(n, k), worst, kOracleTolerance));
        }
    }
    for (int n = 1; n <= 6; ++n) {
        for (int k = 1; k <= 3; ++k) {
            const MatchingProblem problem{n, k};
            const auto [w1, w2] = quadrature_w_pair(problem, {minimum_quadrature_points(n, k)});
            const double worst =
                std::max(max_abs_diff(score_operator_wi(problem, 1).matrix(), w1.matrix()),
                         max_abs_diff(score_operator_wi(problem, 2).matrix(), w2.matrix()));
            out.push_back(upper_bound("W1,W2 " + tag(n, k), worst, kOracleTolerance));
        }
    }
    for (int n = 1; n <= kMaxSuiteInputs; ++n) {
        out.push_back(upper_bound("baseline N=" + std::to_string(n),
                                  std::abs(baseline_k_infinity(n) - baseline_k_infinity_quadrature(n)),
                                  kOracleTolerance));
    }
    return out;
}

std::vector<CheckResult> run_suite(VerifySuite suite) {
    switch (suite) {
    case VerifySuite::pom:
        return run_pom_suite();
    case VerifySuite::optimality:
        return run_optimality_suite();
    case VerifySuite::oracle:
        return run_oracle_suite();
    case VerifySuite::all: {
        auto out = run_pom_suite();
        for (auto &&part : {run_optimality_suite(), run_oracle_suite()}) {
            out.insert(out.end(), part.begin(), part.end());
        }
        return out;
    }
    }
    throw InvalidArgument("unknown verify suite");
}

} // namespace qmatch
