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

#include "qmatch/universal.hpp"

#include <cmath>
#include <string>
#include <tuple>
#include <utility>

namespace qmatch {

namespace {

constexpr double kSqrt2 = 1.41421356237309504880;

double sqrt_binomial_product(int n, int k) {
    return std::sqrt(binomial(n, k) * binomial(n, k + 1));
}

} // namespace

std::size_t MatchingProblem::joint_dimension() const {
    const auto t = static_cast<std::size_t>(k_copies) + 1;
    return (static_cast<std::size_t>(n_inputs) + 1) * t * t;
}

Basis MatchingProblem::basis() const {
    return Basis::composite(
        {Basis::symmetric(n_inputs), Basis::symmetric(k_copies), Basis::symmetric(k_copies)});
}

void MatchingProblem::validate() const {
    QMATCH_REQUIRE(n_inputs >= 1, "matching problem needs n_inputs >= 1");
    QMATCH_REQUIRE(k_copies >= 1, "matching problem needs k_copies >= 1");
}

std::size_t joint_index(const MatchingProblem &problem, int k, int m, int n) {
    const auto t = static_cast<std::size_t>(problem.k_copies) + 1;
    return (static_cast<std::size_t>(k) * t + static_cast<std::size_t>(m)) * t +
           static_cast<std::size_t>(n);
}

PureState joint_state(const MatchingProblem &problem, double f, double g1, double g2) {
    problem.validate();
    return tensor(tensor(phase_state(problem.n_inputs, f), phase_state(problem.k_copies, g1)),
                  phase_state(problem.k_copies, g2));
}

HermitianOperator score_operator_wi(const MatchingProblem &problem, int class_index) {
    problem.validate();
    QMATCH_REQUIRE(class_index == 1 || class_index == 2, "class_index must be 1 or 2");
    const int nn = problem.n_inputs;
    const int kk = problem.k_copies;
    const auto d = static_cast<Eigen::Index>(problem.joint_dimension());
    const double prefactor = std::ldexp(1.0, -(nn + 2 + 2 * kk));
    Matrix w = Matrix::Zero(d, d);

    for (int k = 0; k <= nn; ++k) {
        for (int m = 0; m <= kk; ++m) {
            for (int n = 0; n <= kk; ++n) {
                const auto i = static_cast<Eigen::Index>(joint_index(problem, k, m, n));
                w(i, i) = 2.0 * prefactor * binomial(nn, k) * binomial(kk, m) * binomial(kk, n);
            }
        }
    }
    // |k+1, t> <-> |k, t+1> on the template block of the scored class; the
    // other template block is a spectator weighted by C(K, spectator).
    for (int k = 0; k < nn; ++k) {
        const double input_w = sqrt_binomial_product(nn, k);
        for (int t = 0; t < kk; ++t) {
            const double template_w = sqrt_binomial_product(kk, t);
            for (int s = 0; s <= kk; ++s) {
                const double v = prefactor * input_w * template_w * binomial(kk, s);
                const auto [a, b] =
                    class_index == 1
                        ? std::pair{joint_index(problem, k + 1, t, s), joint_index(problem, k, t + 1, s)}
                        : std::pair{joint_index(problem, k + 1, s, t), joint_index(problem, k, s, t + 1)};
                w(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) = v;
                w(static_cast<Eigen::Index>(b), static_cast<Eigen::Index>(a)) = v;
            }
        }
    }
    return {problem.basis(), std::move(w)};
}

BlockSolution block_decomposition_k1(int n_inputs) {
    QMATCH_REQUIRE(n_inputs >= 1, "block decomposition needs n_inputs >= 1");
    const MatchingProblem problem{n_inputs, 1};
    const Basis basis = problem.basis();
    const auto d = static_cast<Eigen::Index>(problem.joint_dimension());
    const int nn = n_inputs;
    const double scale = kSqrt2 * std::ldexp(1.0, -(nn + 4));

    BlockSolution out;
    out.blocks.reserve(static_cast<std::size_t>(nn) + 1);
    for (int k = 0; k <= nn; ++k) {
        const double above = binomial(nn, k + 1); // weight of |k+1,00>
        const double below = binomial(nn, k - 1); // weight of |k-1,11>
        const double norm = kSqrt2 * std::sqrt(above + below);
        Vector plus = Vector::Zero(d);
        Vector minus = Vector::Zero(d);
        if (k + 1 <= nn) {
            const auto i = static_cast<Eigen::Index>(joint_index(problem, k + 1, 0, 0));
            plus(i) = -std::sqrt(above) / norm;
            minus(i) = std::sqrt(above) / norm;
        }
        // |k,S> = (|k,01> - |k,10>)/√2
        const double s = std::sqrt(above + below) / norm / kSqrt2;
        for (auto [m, n, sign] : {std::tuple{0, 1, 1.0}, std::tuple{1, 0, -1.0}}) {
            const auto i = static_cast<Eigen::Index>(joint_index(problem, k, m, n));
            plus(i) = sign * s;
            minus(i) = sign * s;
        }
        if (k >= 1) {
            const auto i = static_cast<Eigen::Index>(joint_index(problem, k - 1, 1, 1));
            plus(i) = std::sqrt(below) / norm;
            minus(i) = -std::sqrt(below) / norm;
        }
        const double magnitude = scale * std::sqrt(binomial(nn, k)) * std::sqrt(above + below);
        out.blocks.push_back({k, magnitude, PureState(basis, std::move(plus)),
                              PureState(basis, std::move(minus))});
    }
    out.kernel_dimension = problem.joint_dimension() - 2 * out.blocks.size();
    return out;
}

POM universal_pom_k1(int n_inputs, KernelAssignment kernel) {
    const BlockSolution blocks = block_decomposition_k1(n_inputs);
    const MatchingProblem problem{n_inputs, 1};
    const Basis basis = problem.basis();
    const auto d = static_cast<Eigen::Index>(problem.joint_dimension());
    Matrix plus = Matrix::Zero(d, d);
    Matrix minus = Matrix::Zero(d, d);
    for (const auto &b : blocks.blocks) {
        plus += b.plus.amplitudes() * b.plus.amplitudes().adjoint();
        minus += b.minus.amplitudes() * b.minus.amplitudes().adjoint();
    }
    const Matrix kernel_projector = Matrix::Identity(d, d) - plus - minus;
    if (kernel == KernelAssignment::first) {
        plus += kernel_projector;
    } else {
        minus += kernel_projector;
    }
    std::vector<PomElement> elements;
    elements.push_back({"Pi_1", std::nullopt, HermitianOperator::hermitian_part(basis, plus)});
    elements.push_back({"Pi_2", std::nullopt, HermitianOperator::hermitian_part(basis, minus)});
    return POM(std::move(elements));
}

double universal_score_analytic(int n_inputs) {
    QMATCH_REQUIRE(n_inputs >= 1, "universal score needs n_inputs >= 1");
    const int nn = n_inputs;
    double sum = 2.0 * std::sqrt(static_cast<double>(nn));
    for (int k = 1; k <= nn - 1; ++k) {
        sum += std::sqrt(binomial(nn, k)) * std::sqrt(binomial(nn, k + 1) + binomial(nn, k - 1));
    }
    return 0.5 + kSqrt2 * std::ldexp(sum, -(nn + 4));
}

NumericSolution universal_solver_numeric(const MatchingProblem &problem, ZeroPolicy zero_policy) {
    problem.validate();
    QMATCH_REQUIRE(problem.joint_dimension() <= kMaxJointDimension,
                   "joint dimension " + std::to_string(problem.joint_dimension()) +
                       " exceeds the numeric solver cap of " +
                       std::to_string(kMaxJointDimension));
    const HermitianOperator diff = score_operator_wi(problem, 1) - score_operator_wi(problem, 2);
    const SpectralDecomposition sd = eigendecompose(diff);
    const auto d = static_cast<Eigen::Index>(problem.joint_dimension());

    Matrix pi1 = Matrix::Zero(d, d);
    double score = 0.5;
    std::vector<double> positive;
    for (Eigen::Index i = 0; i < d; ++i) {
        const double lambda = sd.eigenvalues(i);
        if (lambda > 0.0) {
            score += lambda;
        }
        if (lambda > kEigenTolerance) {
            positive.push_back(lambda);
        }
        const bool take = lambda > kEigenTolerance ||
                          (zero_policy == ZeroPolicy::include_zero &&
                           std::abs(lambda) <= kEigenTolerance);
        if (take) {
            const Vector &v = sd.eigenvectors[static_cast<std::size_t>(i)].amplitudes();
            pi1 += v * v.adjoint();
        }
    }
    const Basis basis = problem.basis();
    Matrix pi2 = Matrix::Identity(d, d) - pi1;
    std::vector<PomElement> elements;
    elements.push_back({"Pi_1", std::nullopt, HermitianOperator::hermitian_part(basis, pi1)});
    elements.push_back({"Pi_2", std::nullopt, HermitianOperator::hermitian_part(basis, pi2)});
    return {POM(std::move(elements)), score, std::move(positive)};
}

double universal_pom_score(const MatchingProblem &problem, const POM &pom) {
    QMATCH_REQUIRE(pom.size() == 2, "universal POM must have two elements");
    const HermitianOperator diff = score_operator_wi(problem, 1) - score_operator_wi(problem, 2);
    return 0.5 + trace_product(diff, pom[0].op);
}

} // namespace qmatch
