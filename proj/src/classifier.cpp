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

#include "qmatch/classifier.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>

namespace qmatch {

namespace {

double neighbour_weight(int n, int m) {
    return std::sqrt(binomial(n, m) * binomial(n, m + 1));
}

/// Hermitian tridiagonal with zero diagonal and (m+1, m) entry
/// scale * sqrt(C(N,m) C(N,m+1)) * e^{i phase}.
Matrix phased_tridiagonal(int n, double scale, double phase) {
    Matrix h = Matrix::Zero(n + 1, n + 1);
    const Complex rot = std::polar(1.0, phase);
    for (int m = 0; m < n; ++m) {
        const Complex v = scale * neighbour_weight(n, m) * rot;
        h(m + 1, m) = v;
        h(m, m + 1) = std::conj(v);
    }
    return h;
}

} // namespace

ClassifierSpec::ClassifierSpec(int n, double orientation)
    : n_inputs(n), theta(reduce_angle(orientation)) {
    QMATCH_REQUIRE(n >= 1, "classifier needs n_inputs >= 1");
}

HermitianOperator score_operator_w(int n_inputs, double template_phase) {
    QMATCH_REQUIRE(n_inputs >= 1, "score_operator_w needs n_inputs >= 1");
    const int n = n_inputs;
    Matrix w = phased_tridiagonal(n, std::ldexp(1.0, -(n + 2)), reduce_angle(template_phase));
    for (int m = 0; m <= n; ++m) {
        w(m, m) = binomial(n, m) * std::ldexp(1.0, -(n + 1));
    }
    return {Basis::symmetric(n), std::move(w)};
}

HermitianOperator delta_w(int n_inputs, double big_theta, double small_theta) {
    QMATCH_REQUIRE(n_inputs >= 1, "delta_w needs n_inputs >= 1");
    const int n = n_inputs;
    return {Basis::symmetric(n),
            phased_tridiagonal(n, std::sin(small_theta) * std::ldexp(1.0, -(n + 1)),
                               reduce_angle(big_theta + kPi / 2))};
}

HermitianOperator delta_w_canonical(int n_inputs, double small_theta) {
    QMATCH_REQUIRE(n_inputs >= 1, "delta_w_canonical needs n_inputs >= 1");
    const int n = n_inputs;
    return {Basis::symmetric(n),
            phased_tridiagonal(n, std::sin(small_theta) * std::ldexp(1.0, -(n + 1)), 0.0)};
}

Operator rotation_v(int n_inputs, double angle) {
    QMATCH_REQUIRE(n_inputs >= 1, "rotation_v needs n_inputs >= 1");
    const double a = reduce_angle(angle);
    Matrix v = Matrix::Zero(n_inputs + 1, n_inputs + 1);
    for (int m = 0; m <= n_inputs; ++m) {
        v(m, m) = std::polar(1.0, m * a);
    }
    return {Basis::symmetric(n_inputs), std::move(v)};
}

HermitianOperator lambda_one_at(int n_inputs, double theta0) {
    QMATCH_REQUIRE(theta0 > 0.0 && theta0 < kPi, "lambda_one_at needs theta0 in (0, pi)");
    return positive_part_projector(delta_w_canonical(n_inputs, theta0), ZeroPolicy::include_zero);
}

const HermitianOperator &lambda_one(int n_inputs) {
    QMATCH_REQUIRE(n_inputs >= 1, "lambda_one needs n_inputs >= 1");
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<const HermitianOperator>> cache;
    std::lock_guard lock(mutex);
    auto &slot = cache[n_inputs];
    if (!slot) {
        slot = std::make_unique<const HermitianOperator>(lambda_one_at(n_inputs, kPi / 2));
    }
    return *slot;
}

POM classifier_pom(const ClassifierSpec &spec) {
    const Operator v = rotation_v(spec.n_inputs, spec.theta + kPi / 2);
    HermitianOperator omega1 = lambda_one(spec.n_inputs).conjugated(v);
    HermitianOperator omega2 = HermitianOperator::identity(omega1.basis()) - omega1;
    std::vector<PomElement> elements;
    elements.push_back({"Omega_1", std::nullopt, std::move(omega1)});
    elements.push_back({"Omega_2", std::nullopt, std::move(omega2)});
    return POM(std::move(elements));
}

double r_n(int n_inputs) {
    const HermitianOperator &lambda = lambda_one(n_inputs);
    double sum = 0.0;
    for (int m = 0; m < n_inputs; ++m) {
        sum += neighbour_weight(n_inputs, m) * lambda.matrix()(m, m + 1).real();
    }
    return std::ldexp(sum, -(n_inputs + 1));
}

double classifier_expected_score(int n_inputs, double g1, double g2, double theta) {
    return 0.5 + (std::sin(g1 - theta) - std::sin(g2 - theta)) * r_n(n_inputs);
}

double classifier_score_operatorwise(int n_inputs, double g1, double g2, double theta) {
    const POM pom = classifier_pom(ClassifierSpec(n_inputs, theta));
    return trace_product(pom[0].op, score_operator_w(n_inputs, g1)) +
           trace_product(pom[1].op, score_operator_w(n_inputs, g2));
}

} // namespace qmatch
