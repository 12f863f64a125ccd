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

#include <algorithm>
#include <string>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>

#include "qmatch/classifier.hpp"
#include "qmatch/harness.hpp"
#include "qmatch/learning.hpp"
#include "qmatch/universal.hpp"

namespace qmatch {

double baseline_k_infinity(int n_inputs) { return 0.5 + 4.0 * r_n(n_inputs) / kPi; }

double baseline_k_infinity_quadrature(int n_inputs) {
    QMATCH_REQUIRE(n_inputs >= 1, "baseline needs n_inputs >= 1");
    // The integrand depends on g2 only through Θ, so a few g2 offsets suffice;
    // averaging over them checks that invariance too.
    constexpr int kOffsets = 4;
    auto at_difference = [n_inputs](double u) {
        double total = 0.0;
        for (int j = 0; j < kOffsets; ++j) {
            const double g2 = kTwoPi * j / kOffsets;
            const double g1 = g2 + u;
            const double theta = 0.5 * (g1 + g2);
            total += std::max(classifier_score_operatorwise(n_inputs, g1, g2, theta),
                              classifier_score_operatorwise(n_inputs, g1, g2, theta + kPi));
        }
        return total / kOffsets;
    };
    using Rule = boost::math::quadrature::gauss<double, 30>;
    return Rule::integrate(at_difference, 0.0, kTwoPi) / kTwoPi;
}

std::vector<CurveRow> score_curve(int n_min, int n_max, int k_copies) {
    QMATCH_REQUIRE(n_min >= 1 && n_min <= n_max && n_max <= kMaxCurveInputs,
                   "curve range must satisfy 1 <= n_min <= n_max <= " +
                       std::to_string(kMaxCurveInputs));
    QMATCH_REQUIRE(k_copies >= 1 && k_copies <= kMaxCurveTemplateCopies,
                   "curve supports 1 <= K <= " + std::to_string(kMaxCurveTemplateCopies));
    std::vector<CurveRow> rows;
    for (int n = n_min; n <= n_max; ++n) {
        CurveRow row{n, k_copies, std::nullopt, std::nullopt, false, baseline_k_infinity(n)};
        if (k_copies == 1) {
            row.semiclassical = semiclassical_max_score(n);
            row.universal = universal_score_analytic(n);
        } else {
            const MatchingProblem problem{n, k_copies};
            if (problem.joint_dimension() <= kMaxJointDimension) {
                row.universal = universal_solver_numeric(problem).score;
                row.universal_is_numeric = true;
            }
        }
        rows.push_back(row);
    }
    return rows;
}

} // namespace qmatch
