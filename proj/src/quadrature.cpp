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

#include <cmath>
#include <string>
#include <vector>

#include "qmatch/classifier.hpp"
#include "qmatch/harness.hpp"
#include "qmatch/learning.hpp"

namespace qmatch {

namespace {

std::vector<double> nodes(const QuadratureSpec &spec) {
    std::vector<double> x(spec.points_per_angle);
    for (std::size_t j = 0; j < x.size(); ++j) {
        x[j] = kTwoPi * static_cast<double>(j) / static_cast<double>(x.size());
    }
    return x;
}

void require_points(const QuadratureSpec &spec, int n_inputs, int k_copies) {
    const std::size_t needed = minimum_quadrature_points(n_inputs, k_copies);
    QMATCH_REQUIRE(spec.points_per_angle >= needed,
                   "quadrature needs at least " + std::to_string(needed) +
                       " points per angle, got " + std::to_string(spec.points_per_angle));
}

/// |<f|g>|^2 for two phase qubits.
double fidelity(double f, double g) { return 0.5 * (1.0 + std::cos(f - g)); }

} // namespace

std::size_t minimum_quadrature_points(int n_inputs, int k_copies) {
    return 2 * (static_cast<std::size_t>(n_inputs) + 2 * static_cast<std::size_t>(k_copies) + 2);
}

HermitianOperator quadrature_w_of_g(int n_inputs, double g, const QuadratureSpec &spec) {
    QMATCH_REQUIRE(n_inputs >= 1, "quadrature needs n_inputs >= 1");
    require_points(spec, n_inputs, 0);
    const auto xs = nodes(spec);
    Matrix acc = Matrix::Zero(n_inputs + 1, n_inputs + 1);
    for (double f : xs) {
        const Vector psi = phase_state(n_inputs, f).amplitudes();
        acc.noalias() += fidelity(f, g) * (psi * psi.adjoint());
    }
    acc /= static_cast<double>(xs.size());
    return HermitianOperator::hermitian_part(Basis::symmetric(n_inputs), acc);
}

HermitianOperator quadrature_g_of_theta(int n_inputs, int k_copies, double theta,
                                        const QuadratureSpec &spec) {
    QMATCH_REQUIRE(n_inputs >= 1 && k_copies >= 1, "quadrature needs positive N and K");
    require_points(spec, n_inputs, k_copies);
    const auto xs = nodes(spec);
    const POM omega = classifier_pom(ClassifierSpec(n_inputs, theta));

    // Per-template classification weights Tr[Ω_j W(g)] on the grid.
    std::vector<double> s1(xs.size());
    std::vector<double> s2(xs.size());
    std::vector<Vector> templates(xs.size());
    for (std::size_t a = 0; a < xs.size(); ++a) {
        const HermitianOperator w = quadrature_w_of_g(n_inputs, xs[a], spec);
        s1[a] = trace_product(omega[0].op, w);
        s2[a] = trace_product(omega[1].op, w);
        templates[a] = phase_state(k_copies, xs[a]).amplitudes();
    }

    const Eigen::Index t = k_copies + 1;
    Matrix acc = Matrix::Zero(t * t, t * t);
    Vector joint(t * t);
    for (std::size_t a = 0; a < xs.size(); ++a) {
        for (std::size_t b = 0; b < xs.size(); ++b) {
            for (Eigen::Index i = 0; i < t; ++i) {
                joint.segment(i * t, t) = templates[a](i) * templates[b];
            }
            acc.noalias() += (s1[a] + s2[b]) * (joint * joint.adjoint());
        }
    }
    acc /= static_cast<double>(xs.size() * xs.size());
    return HermitianOperator::hermitian_part(template_pair_basis(k_copies), acc);
}

std::pair<HermitianOperator, HermitianOperator> quadrature_w_pair(const MatchingProblem &problem,
                                                                  const QuadratureSpec &spec) {
    problem.validate();
    require_points(spec, problem.n_inputs, problem.k_copies);
    const auto xs = nodes(spec);
    const auto d = static_cast<Eigen::Index>(problem.joint_dimension());
    const Eigen::Index t = problem.k_copies + 1;

    std::vector<Vector> inputs(xs.size());
    std::vector<Vector> templates(xs.size());
    for (std::size_t j = 0; j < xs.size(); ++j) {
        inputs[j] = phase_state(problem.n_inputs, xs[j]).amplitudes();
        templates[j] = phase_state(problem.k_copies, xs[j]).amplitudes();
    }

    Matrix w1 = Matrix::Zero(d, d);
    Matrix w2 = Matrix::Zero(d, d);
    Vector pair(t * t);
    Vector psi(d);
    for (std::size_t a = 0; a < xs.size(); ++a) {     // g1
        for (std::size_t b = 0; b < xs.size(); ++b) { // g2
            for (Eigen::Index i = 0; i < t; ++i) {
                pair.segment(i * t, t) = templates[a](i) * templates[b];
            }
            for (std::size_t c = 0; c < xs.size(); ++c) { // f
                for (Eigen::Index k = 0; k < inputs[c].size(); ++k) {
                    psi.segment(k * t * t, t * t) = inputs[c](k) * pair;
                }
                w1.selfadjointView<Eigen::Lower>().rankUpdate(psi, fidelity(xs[c], xs[a]));
                w2.selfadjointView<Eigen::Lower>().rankUpdate(psi, fidelity(xs[c], xs[b]));
            }
        }
    }
    const double norm = 1.0 / std::pow(static_cast<double>(xs.size()), 3);
    Matrix full1 = w1.selfadjointView<Eigen::Lower>();
    Matrix full2 = w2.selfadjointView<Eigen::Lower>();
    full1 *= norm;
    full2 *= norm;
    const Basis basis = problem.basis();
    return {HermitianOperator::hermitian_part(basis, full1),
            HermitianOperator::hermitian_part(basis, full2)};
}

HermitianOperator quadrature_operator(DefiningIntegral integral, const QuadratureParams &params,
                                      const QuadratureSpec &spec) {
    switch (integral) {
    case DefiningIntegral::w_of_g:
        return quadrature_w_of_g(params.n_inputs, params.angle, spec);
    case DefiningIntegral::g_of_theta:
        return quadrature_g_of_theta(params.n_inputs, params.k_copies, params.angle, spec);
    case DefiningIntegral::w_i: {
        QMATCH_REQUIRE(params.class_index == 1 || params.class_index == 2,
                       "class_index must be 1 or 2");
        auto pair = quadrature_w_pair({params.n_inputs, params.k_copies}, spec);
        return params.class_index == 1 ? std::move(pair.first) : std::move(pair.second);
    }
    }
    throw InvalidArgument("unknown defining integral");
}

} // namespace qmatch
