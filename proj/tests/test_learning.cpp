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

#include "doctest.h"
#include "qmatch/classifier.hpp"
#include "qmatch/learning.hpp"

using namespace qmatch;

namespace {

double eigen_residual(const HermitianOperator &g, const PureState &v, double lambda) {
    return (g.matrix() * v.amplitudes() - lambda * v.amplitudes()).norm();
}

} // namespace

TEST_SUITE("learning") {

TEST_CASE("learning score operator spectrum at N=1, K=1, Theta=0") {
    const SpectralDecomposition sd = eigendecompose(learning_score_operator(1, 1, 0.0));
    const double expected[] = {0.15625, 0.125, 0.125, 0.09375};
    for (int i = 0; i < 4; ++i) CHECK(sd.eigenvalues(i) == doctest::Approx(expected[i]).epsilon(1e-14));
}

TEST_CASE("learning score operator has trace 1/2 for every K") {
    for (int k = 1; k <= 4; ++k)
        for (int n : {1, 4})
            CHECK(learning_score_operator(n, k, 0.6).trace() == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("closed-form K=1 eigenvectors") {
    for (int n : {1, 2, 5, 10}) {
        for (double theta : {0.0, 0.8, -2.0}) {
            const HermitianOperator g = learning_score_operator(n, 1, theta);
            const double r = r_n(n);
            CHECK(eigen_residual(g, a_plus_state(theta), (1 + 2 * r) / 8) < 1e-14);
            CHECK(eigen_residual(g, triplet_state(), 0.125) < 1e-14);
            CHECK(eigen_residual(g, a_minus_state(theta), 0.125) < 1e-14);
            CHECK(eigen_residual(g, a_zero_state(theta), (1 - 2 * r) / 8) < 1e-14);
            const SpectralDecomposition sd = g_spectral_k1(theta, n);
            CHECK(max_abs_diff(sd.reconstruct().matrix(), g.matrix()) < 1e-14);
        }
    }
}

TEST_CASE("singlet is a zero mode of the Theta-dependent part") {
    const Vector s = singlet_state().amplitudes();
    for (double theta : {0.0, 1.3}) {
        CHECK(learning_score_operator(3, 1, theta).expectation(s) == doctest::Approx(0.125));
    }
}

TEST_CASE("mu tilde has squared norm three and the optimal score") {
    for (int n : {1, 3, 7}) {
        const Vector mu = mu_tilde(0.4);
        CHECK(mu.squaredNorm() == doctest::Approx(3.0).epsilon(1e-14));
        const double score = learning_score_operator(n, 1, 0.4).expectation(mu) + 0.125;
        CHECK(score == doctest::Approx(semiclassical_max_score(n)).epsilon(1e-14));
    }
    CHECK(semiclassical_max_score(1) == doctest::Approx(0.5883883476483185).epsilon(1e-13));
}

TEST_CASE("all three strategies reach the optimum") {
    for (int n = 1; n <= 10; ++n) {
        for (auto kind : {LearningKind::covariant_sqrt, LearningKind::discrete_three,
                          LearningKind::separable_four}) {
            CHECK(std::abs(strategy_score(make_learning_strategy(kind), n) -
                           semiclassical_max_score(n)) < 1e-12);
        }
    }
}

TEST_CASE("covariant POM needs a uniform grid of at least three points") {
    CHECK_THROWS_AS(covariant_sqrt_pom({0.0, kPi}), InvalidArgument);
    CHECK_THROWS_AS(covariant_sqrt_pom({0.0, 1.0, 2.0}), InvalidArgument);
    CHECK_NOTHROW(covariant_sqrt_pom(uniform_theta_grid(5)));
    CHECK(covariant_sqrt_pom(uniform_theta_grid(3)).kind == LearningKind::discrete_three);
    CHECK(discrete_three_pom().pom.size() == 3);
    CHECK(separable_pom().pom.size() == 4);
}

TEST_CASE("grid validation rejects duplicate angles") {
    LearningProblem p{1, 1, {0.0, kTwoPi}};
    CHECK_THROWS_AS(p.validate(), InvalidArgument);
    p.theta_grid = {0.0, 1.0};
    CHECK_NOTHROW(p.validate());
}

TEST_CASE("Holevo conditions hold for the optimal POMs") {
    const auto grid = uniform_theta_grid(64);
    for (int n : {1, 4, 9}) {
        const OptimalityReport r = verify_optimality(discrete_three_pom(), n, grid);
        CHECK(r.psd_margin >= -1e-10);
        CHECK(r.commutation_residual <= 1e-10);
        CHECK(r.gamma_asymmetry <= 1e-12);
        CHECK(r.score == doctest::Approx(semiclassical_max_score(n)).epsilon(1e-12));
    }
}

TEST_CASE("swapping guesses lowers the score and breaks optimality") {
    const LearningStrategy s = swap_guesses(discrete_three_pom(), 0, 1);
    CHECK(strategy_score(s, 3) < semiclassical_max_score(3) - 1e-3);
    const OptimalityReport r = verify_optimality(s, 3, uniform_theta_grid(64));
    CHECK(std::max(r.commutation_residual, -r.psd_margin) > 1e-3);
}

TEST_CASE("strategy names round-trip") {
    for (auto kind : {LearningKind::covariant_sqrt, LearningKind::discrete_three,
                      LearningKind::separable_four}) {
        CHECK(parse_learning_kind(to_string(kind)) == kind);
    }
    CHECK_THROWS_AS(parse_learning_kind("bogus"), InvalidArgument);
}

} // TEST_SUITE
