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

// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Runtime budgets are part of each criterion.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "oracles/jacobi.hpp"
#include "qmatch/classifier.hpp"
#include "qmatch/harness.hpp"
#include "qmatch/learning.hpp"
#include "qmatch/universal.hpp"

using namespace qmatch;

namespace {

struct Outcome {
    bool passed;
    std::string detail;
};

std::string fmt(const char *format, double a, double b = 0.0) {
    char buffer[160];
    std::snprintf(buffer, sizeof buffer, format, a, b);
    return buffer;
}

// 1. R_N against a brute-force eigendecomposition of W(0) - W(π).
Outcome r_n_values() {
    double worst = 0.0;
    bool ok = true;
    for (int n : {1, 2}) {
        worst = std::max(worst, std::abs(r_n(n) - 0.125));
        worst = std::max(worst, std::abs(r_n(n) - oracle::r_n_brute_force(n)));
    }
    ok = worst <= 1e-12;
    double previous = 0.0;
    for (int n = 1; n <= 10; ++n) {
        const double r = r_n(n);
        const double score = 0.5 + r / std::sqrt(2.0);
        ok = ok && r > 0.0 && score >= previous;
        previous = score;
    }
    return {ok, fmt("max |R_N - 1/8|, |R_N - oracle| at N=1,2: %.2e", worst)};
}

// 2. Both finite POMs reach 1/2 + R_N/√2.
Outcome semiclassical_optimum() {
    double worst = 0.0;
    for (int n = 1; n <= 10; ++n) {
        for (auto kind : {LearningKind::discrete_three, LearningKind::separable_four}) {
            worst = std::max(worst, std::abs(strategy_score(make_learning_strategy(kind), n) -
                                             semiclassical_max_score(n)));
        }
    }
    const double at_one = strategy_score(discrete_three_pom(), 1);
    return {worst <= 1e-10 && std::abs(at_one - 0.5883883) < 5e-8,
            fmt("max deviation %.2e, N=1 score %.7f", worst, at_one)};
}

// 3. Holevo conditions on a 64-point grid, plus a mislabeled control.
Outcome holevo_optimality() {
    const auto grid = uniform_theta_grid(64);
    const LearningStrategy covariant = covariant_sqrt_pom(grid);
    double psd = 0.0;
    double commutation = 0.0;
    for (int n = 1; n <= 10; ++n) {
        const OptimalityReport r = verify_optimality(covariant, n, grid);
        psd = std::min(psd, r.psd_margin);
        commutation = std::max(commutation, r.commutation_residual);
    }
    LearningStrategy wrong = covariant;
    for (std::size_t i = 0; i < grid.size() / 2; ++i) wrong = swap_guesses(wrong, i, i + 32);
    const OptimalityReport bad = verify_optimality(wrong, 1, grid);
    const double violation = std::max(bad.commutation_residual, -bad.psd_margin);
    return {psd >= -1e-10 && commutation <= 1e-10 && violation > 1e-3,
            fmt("min psd margin %.2e, max commutation %.2e", psd, commutation) +
                fmt(", control violation %.2e", violation)};
}

// 4. Positive spectrum of W1 - W2 against the closed-form sum.
Outcome universal_closed_form() {
    double worst = 0.0;
    for (int n = 1; n <= 10; ++n) {
        worst = std::max(worst, std::abs(universal_solver_numeric({n, 1}).score -
                                         universal_score_analytic(n)));
    }
    const double s1 = universal_score_analytic(1);
    const double s2 = universal_score_analytic(2);
    return {worst <= 1e-10 && std::abs(s1 - 0.5883883) < 5e-8 && std::abs(s2 - 0.6067) < 5e-5,
            fmt("max deviation %.2e, N=1 %.7f", worst, s1) + fmt(", N=2 %.7f", s2)};
}

// 5. semiclassical <= universal <= known-template baseline.
Outcome ordering() {
    bool ok = true;
    double tightest = 1.0;
    for (int n = 1; n <= 10; ++n) {
        const double sc = semiclassical_max_score(n);
        const double qm = universal_score_analytic(n);
        const double base = baseline_k_infinity(n);
        ok = ok && sc <= qm + 1e-14 && qm <= base;
        if (n >= 2) {
            ok = ok && qm > sc;
            tightest = std::min(tightest, qm - sc);
        }
    }
    return {ok, fmt("smallest strict gap (N>=2) %.3e", tightest)};
}

// 6. Closed forms against the exact uniform-grid quadrature.
Outcome oracle_equivalence() {
    std::mt19937_64 rng(606);
    std::uniform_real_distribution<double> angle(0.0, kTwoPi);
    double worst = 0.0;
    for (int n = 1; n <= 6; ++n) {
        for (int k = 1; k <= 3; ++k) {
            const QuadratureSpec spec{minimum_quadrature_points(n, k)};
            for (int draw = 0; draw < 10; ++draw) {
                const double g = angle(rng);
                const double theta = angle(rng);
                worst = std::max(worst, max_abs_diff(score_operator_w(n, g).matrix(),
                                                     quadrature_w_of_g(n, g, spec).matrix()));
                worst = std::max(worst,
                                 max_abs_diff(learning_score_operator(n, k, theta).matrix(),
                                              quadrature_g_of_theta(n, k, theta, spec).matrix()));
            }
            const auto [w1, w2] = quadrature_w_pair({n, k}, spec);
            worst = std::max(worst, max_abs_diff(score_operator_wi({n, k}, 1).matrix(), w1.matrix()));
            worst = std::max(worst, max_abs_diff(score_operator_wi({n, k}, 2).matrix(), w2.matrix()));
        }
    }
    return {worst <= 1e-10, fmt("max entry deviation %.2e", worst)};
}

// 7. Seeded Monte-Carlo runs of both protocols.
Outcome monte_carlo() {
    struct Case {
        const char *strategy;
        int n;
    };
    const Case cases[] = {{"universal", 1},
                          {"universal", 2},
                          {"universal", 5},
                          {"semiclassical:discrete_three", 1},
                          {"semiclassical:discrete_three", 2},
                          {"semiclassical:discrete_three", 5},
                          {"semiclassical:separable_four", 1},
                          {"semiclassical:separable_four", 2},
                          {"semiclassical:separable_four", 5}};
    double worst_z = 0.0;
    std::uint64_t seed = 1000;
    for (const auto &c : cases) {
        const SimulationConfig config{c.n, 1, SimulationStrategy::parse(c.strategy), 1000000, seed++};
        const ScoreReport r = simulate(config, {0, false});
        const double analytic = config.strategy.family == StrategyFamily::universal
                                    ? universal_score_analytic(c.n)
                                    : semiclassical_max_score(c.n);
        worst_z = std::max(worst_z, std::abs(r.monte_carlo_mean - analytic) / r.monte_carlo_stderr);
    }
    return {worst_z <= 4.0, fmt("max |z| over 9 runs of 1e6 samples: %.2f", worst_z)};
}

// 8. POM validity and completion invariance.
Outcome pom_validity() {
    double worst = 0.0;
    auto check = [&](const POM &pom) {
        const PomCheck c = POM::check(pom.elements());
        worst = std::max({worst, c.identity_residual, -c.min_eigenvalue});
    };
    for (int n = 1; n <= 10; ++n) {
        for (double theta : {0.0, 1.2, 4.0}) check(classifier_pom(ClassifierSpec(n, theta)));
        check(universal_pom_k1(n));
        check(universal_pom_k1(n, KernelAssignment::second));
    }
    for (auto kind : {LearningKind::covariant_sqrt, LearningKind::discrete_three,
                      LearningKind::separable_four}) {
        check(make_learning_strategy(kind).pom);
    }
    for (int n = 1; n <= 5; ++n) check(universal_solver_numeric({n, 2}).pom);

    double completion = 0.0;
    for (int n = 1; n <= 10; ++n) {
        const MatchingProblem p{n, 1};
        completion = std::max(completion,
                              std::abs(universal_pom_score(p, universal_pom_k1(n)) -
                                       universal_pom_score(p, universal_pom_k1(n, KernelAssignment::second))));
        const double base = strategy_score(discrete_three_pom(0), n);
        for (std::size_t slot : {1u, 2u}) {
            completion = std::max(completion, std::abs(strategy_score(discrete_three_pom(slot), n) - base));
        }
        completion = std::max(completion, std::abs(strategy_score(covariant_sqrt_pom(uniform_theta_grid(8), 5), n) - base));
    }
    for (int n = 1; n <= 3; ++n) {
        const MatchingProblem p{n, 2};
        completion = std::max(
            completion,
            std::abs(universal_pom_score(p, universal_solver_numeric(p, ZeroPolicy::include_zero).pom) -
                     universal_pom_score(p, universal_solver_numeric(p, ZeroPolicy::exclude_zero).pom)));
    }
    return {worst <= 1e-10 && completion <= 1e-12,
            fmt("max POM residual %.2e, completion spread %.2e", worst, completion)};
}

struct Criterion {
    int id;
    const char *name;
    double budget_seconds;
    std::function<Outcome()> run;
};

} // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "R_N values", 1.0, r_n_values},
        {2, "semiclassical optimum", 1.0, semiclassical_optimum},
        {3, "Holevo optimality", 5.0, holevo_optimality},
        {4, "universal closed form", 10.0, universal_closed_form},
        {5, "score ordering", 10.0, ordering},
        {6, "quadrature oracle equivalence", 60.0, oracle_equivalence},
        {7, "Monte-Carlo consistency", 120.0, monte_carlo},
        {8, "POM validity", 30.0, pom_validity},
    };
    int failures = 0;
    for (const auto &c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome{false, ""};
        try {
            outcome = c.run();
        } catch (const std::exception &e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = seconds < c.budget_seconds;
        const bool passed = outcome.passed && in_time;
        failures += passed ? 0 : 1;
        std::printf("%s criterion %d (%s): %s; %.2f s of %.0f s%s\n", passed ? "PASS" : "FAIL", c.id,
                    c.name, outcome.detail.c_str(), seconds, c.budget_seconds,
                    in_time ? "" : " (over budget)");
        std::fflush(stdout);
    }
    std::printf("%s: %d of %zu criteria passed\n", failures == 0 ? "PASS" : "FAIL",
                static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
