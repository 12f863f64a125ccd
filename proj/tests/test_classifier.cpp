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

#include <random>

#include "doctest.h"
#include "oracles/jacobi.hpp"
#include "qmatch/classifier.hpp"

using namespace qmatch;

TEST_SUITE("classifier") {

TEST_CASE("score operator at N=1, g=0") {
    const Matrix w = score_operator_w(1, 0.0).matrix();
    CHECK(std::abs(w(0, 0) - 0.25) < 1e-15);
    CHECK(std::abs(w(1, 1) - 0.25) < 1e-15);
    CHECK(std::abs(w(0, 1) - 0.125) < 1e-15);
    CHECK(std::abs(w(1, 0) - 0.125) < 1e-15);
}

TEST_CASE("score operator at N=2, g=pi/2") {
    const Matrix w = score_operator_w(2, kPi / 2).matrix();
    CHECK(std::abs(w(0, 0) - 0.125) < 1e-15);
    CHECK(std::abs(w(1, 1) - 0.25) < 1e-15);
    CHECK(std::abs(w(2, 2) - 0.125) < 1e-15);
    CHECK(std::abs(w(1, 0) - Complex(0.0, std::sqrt(2.0) / 16)) < 1e-15);
    CHECK(std::abs(w(0, 1) - Complex(0.0, -std::sqrt(2.0) / 16)) < 1e-15);
    CHECK(std::abs(w(0, 2)) == 0.0);
}

TEST_CASE("score operator matches a plain Riemann-sum oracle and has trace 1/2") {
    for (int n = 1; n <= 8; ++n) {
        for (double g : {0.0, 0.9, -2.2}) {
            const Matrix w = score_operator_w(n, g).matrix();
            const oracle::Dense ref = oracle::score_operator_by_sum(n, g);
            for (int a = 0; a <= n; ++a)
                for (int b = 0; b <= n; ++b) CHECK(std::abs(w(a, b) - ref(a, b)) < 1e-14);
            CHECK(score_operator_w(n, g).trace() == doctest::Approx(0.5).epsilon(1e-15));
        }
    }
}

TEST_CASE("delta_w is a rotated copy of the canonical frame") {
    for (int n : {1, 3, 6}) {
        for (double big : {0.0, 1.1, -2.5}) {
            for (double small : {0.4, kPi / 2}) {
                const HermitianOperator lhs = delta_w(n, big, small);
                const HermitianOperator rhs =
                    delta_w_canonical(n, small).conjugated(rotation_v(n, big + kPi / 2));
                CHECK(max_abs_diff(lhs.matrix(), rhs.matrix()) < 1e-15);
            }
        }
        CHECK(max_abs_diff(delta_w_canonical(n, 0.7).matrix(),
                           delta_w(n, -kPi / 2, 0.7).matrix()) < 1e-15);
        CHECK(delta_w_canonical(n, 0.7).matrix().imag().norm() == 0.0);
    }
}

TEST_CASE("R_N values against the brute-force oracle") {
    CHECK(r_n(1) == doctest::Approx(0.125).epsilon(1e-14));
    CHECK(r_n(2) == doctest::Approx(0.125).epsilon(1e-14));
    // Frozen from an independent dense eigensolver run on W(0) - W(π).
    CHECK(r_n(3) == doctest::Approx(0.14320549046736997).epsilon(1e-12));
    CHECK(r_n(5) == doctest::Approx(0.14906367399653092).epsilon(1e-12));
    CHECK(r_n(10) == doctest::Approx(0.15386238958572918).epsilon(1e-12));
    CHECK(r_n(20) == doctest::Approx(0.1565230684927657).epsilon(1e-11));
    for (int n = 1; n <= 12; ++n) {
        CHECK(std::abs(r_n(n) - oracle::r_n_brute_force(n)) < 1e-12);
    }
}

TEST_CASE("R_N is positive and bounded for larger N") {
    double previous = 0.0;
    for (int n = 1; n <= 64; ++n) {
        const double r = r_n(n);
        CHECK(r > 0.0);
        CHECK(r < 0.25);
        CHECK(r >= previous - 1e-12);
        previous = r;
    }
}

TEST_CASE("classifier POM at N=1, Theta=0 projects onto (1, i)/sqrt2") {
    const POM pom = classifier_pom(ClassifierSpec(1, 0.0));
    REQUIRE(pom.size() == 2);
    Matrix expected(2, 2);
    expected << 0.5, Complex(0, -0.5), Complex(0, 0.5), 0.5;
    CHECK(max_abs_diff(pom[0].op.matrix(), expected) < 1e-14);
    CHECK(pom[0].label == "Omega_1");
    CHECK(POM::check(pom.elements()).ok());
}

TEST_CASE("classifier score at the favourable configuration") {
    CHECK(classifier_expected_score(1, kPi / 2, -kPi / 2, 0.0) == doctest::Approx(0.75));
    CHECK(classifier_score_operatorwise(1, kPi / 2, -kPi / 2, 0.0) == doctest::Approx(0.75));
}

TEST_CASE("expected score agrees with the operator-wise trace (property)") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> angle(0.0, kTwoPi);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 1 + trial % 9;
        const double g1 = angle(rng), g2 = angle(rng), theta = angle(rng);
        CHECK(std::abs(classifier_expected_score(n, g1, g2, theta) -
                       classifier_score_operatorwise(n, g1, g2, theta)) < 1e-13);
    }
}

TEST_CASE("Lambda_1 does not depend on theta0 inside (0, pi)") {
    for (int n : {1, 2, 5}) {
        CHECK(max_abs_diff(lambda_one(n).matrix(), lambda_one_at(n, 0.3).matrix()) < 1e-12);
        CHECK(max_abs_diff(lambda_one(n).matrix(), lambda_one_at(n, 2.9).matrix()) < 1e-12);
    }
    CHECK_THROWS_AS(lambda_one_at(2, 0.0), InvalidArgument);
    CHECK_THROWS_AS(lambda_one_at(2, kPi), InvalidArgument);
}

TEST_CASE("invalid classifier parameters") {
    CHECK_THROWS_AS(ClassifierSpec(0, 0.0), InvalidArgument);
    CHECK(ClassifierSpec(1, -kPi / 2).theta == doctest::Approx(3 * kPi / 2));
}

} // TEST_SUITE
