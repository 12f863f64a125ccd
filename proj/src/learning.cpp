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

#include "qmatch/learning.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "qmatch/classifier.hpp"

namespace qmatch {

namespace {

constexpr double kSqrt2 = 1.41421356237309504880;
const Complex kI{0.0, 1.0};

// K = 1 joint basis indices.
constexpr int kUpUp = 0;
constexpr int kUpDown = 1;
constexpr int kDownUp = 2;
constexpr int kDownDown = 3;

Vector k1_vector(Complex up_up, Complex singlet, Complex triplet, Complex down_down) {
    Vector v = Vector::Zero(4);
    v(kUpUp) = up_up;
    v(kUpDown) = (singlet + triplet) / kSqrt2;
    v(kDownUp) = (triplet - singlet) / kSqrt2;
    v(kDownDown) = down_down;
    return v;
}

PureState qubit_state(Complex up, Complex down) {
    Vector v(2);
    v << up, down;
    return PureState::normalized(Basis::symmetric(1), std::move(v));
}

} // namespace

void LearningProblem::validate() const {
    QMATCH_REQUIRE(n_inputs >= 1, "learning problem needs n_inputs >= 1");
    QMATCH_REQUIRE(k_copies >= 1, "learning problem needs k_copies >= 1");
    QMATCH_REQUIRE(!theta_grid.empty(), "learning problem needs a nonempty theta grid");
    std::vector<double> reduced;
    reduced.reserve(theta_grid.size());
    for (double t : theta_grid) {
        reduced.push_back(reduce_angle(t));
    }
    std::sort(reduced.begin(), reduced.end());
    for (std::size_t i = 0; i < reduced.size(); ++i) {
        const double next =
            i + 1 < reduced.size() ? reduced[i + 1] : reduced.front() + kTwoPi;
        QMATCH_REQUIRE(next - reduced[i] > 1e-12 || reduced.size() == 1,
                       "theta grid entries must be distinct mod 2pi");
    }
}

std::string_view to_string(LearningKind kind) {
    switch (kind) {
    case LearningKind::covariant_sqrt:
        return "covariant_sqrt";
    case LearningKind::discrete_three:
        return "discrete_three";
    case LearningKind::separable_four:
        return "separable_four";
    }
    return "unknown";
}

LearningKind parse_learning_kind(std::string_view name) {
    for (auto kind : {LearningKind::covariant_sqrt, LearningKind::discrete_three,
                      LearningKind::separable_four}) {
        if (name == to_string(kind)) {
            return kind;
        }
    }
    throw InvalidArgument("unknown learning strategy '" + std::string(name) + "'");
}

Basis template_pair_basis(int k_copies) {
    QMATCH_REQUIRE(k_copies >= 1, "template basis needs k_copies >= 1");
    return Basis::composite({Basis::symmetric(k_copies), Basis::symmetric(k_copies)});
}

HermitianOperator c_operator(int k_copies) {
    QMATCH_REQUIRE(k_copies >= 1, "c_operator needs k_copies >= 1");
    Matrix c = Matrix::Zero(k_copies + 1, k_copies + 1);
    for (int k = 0; k <= k_copies; ++k) {
        c(k, k) = std::ldexp(binomial(k_copies, k), -k_copies);
    }
    return {Basis::symmetric(k_copies), std::move(c)};
}

HermitianOperator d_operator(int k_copies, double theta) {
    QMATCH_REQUIRE(k_copies >= 1, "d_operator needs k_copies >= 1");
    Matrix d = Matrix::Zero(k_copies + 1, k_copies + 1);
    const Complex lower = kI * std::polar(1.0, reduce_angle(theta));
    for (int k = 0; k < k_copies; ++k) {
        const double w =
            std::ldexp(std::sqrt(binomial(k_copies, k) * binomial(k_copies, k + 1)), -k_copies);
        d(k + 1, k) = w * lower;
        d(k, k + 1) = std::conj(w * lower);
    }
    return {Basis::symmetric(k_copies), std::move(d)};
}

HermitianOperator learning_score_operator(int n_inputs, int k_copies, double theta) {
    const HermitianOperator c = c_operator(k_copies);
    const HermitianOperator d = d_operator(k_copies, theta);
    const double r = r_n(n_inputs);
    return 0.5 * tensor(c, c) + (0.5 * r) * (tensor(d, c) - tensor(c, d));
}

HermitianOperator learning_score_operator(const LearningProblem &problem, double theta) {
    problem.validate();
    return learning_score_operator(problem.n_inputs, problem.k_copies, theta);
}

PureState singlet_state() {
    return {template_pair_basis(1), k1_vector(0.0, 1.0, 0.0, 0.0)};
}

PureState triplet_state() {
    return {template_pair_basis(1), k1_vector(0.0, 0.0, 1.0, 0.0)};
}

PureState a_plus_state(double theta) {
    const Complex e = std::polar(1.0, theta + kPi / 2);
    return {template_pair_basis(1), 0.5 * k1_vector(-std::conj(e), kSqrt2, 0.0, e)};
}

PureState a_zero_state(double theta) {
    const Complex e = std::polar(1.0, theta + kPi / 2);
    return {template_pair_basis(1), 0.5 * k1_vector(std::conj(e), kSqrt2, 0.0, -e)};
}

PureState a_minus_state(double theta) {
    const Complex e = std::polar(1.0, theta + kPi / 2);
    return {template_pair_basis(1), k1_vector(std::conj(e), 0.0, 0.0, e) / kSqrt2};
}

Vector mu_tilde(double theta) {
    const Complex e = std::polar(1.0, theta + kPi / 2);
    return k1_vector(-std::conj(e), 1.0, 0.0, e);
}

Operator k1_rotation(double theta) {
    const Matrix s = singlet_state().amplitudes() * singlet_state().amplitudes().adjoint();
    const Matrix t = triplet_state().amplitudes() * triplet_state().amplitudes().adjoint();
    Matrix v = s + t;
    v(kUpUp, kUpUp) = std::polar(1.0, -theta);
    v(kDownDown, kDownDown) = std::polar(1.0, theta);
    return {template_pair_basis(1), std::move(v)};
}

SpectralDecomposition g_spectral_k1(double theta, int n_inputs) {
    const double r = r_n(n_inputs);
    SpectralDecomposition sd{template_pair_basis(1), RealVector(4), {}};
    sd.eigenvalues << (1.0 + 2.0 * r) / 8.0, 1.0 / 8.0, 1.0 / 8.0, (1.0 - 2.0 * r) / 8.0;
    sd.eigenvectors = {a_plus_state(theta), triplet_state(), a_minus_state(theta),
                       a_zero_state(theta)};
    return sd;
}

std::vector<double> uniform_theta_grid(std::size_t count) {
    std::vector<double> grid(count);
    for (std::size_t i = 0; i < count; ++i) {
        grid[i] = kTwoPi * static_cast<double>(i) / static_cast<double>(count);
    }
    return grid;
}

LearningStrategy covariant_sqrt_pom(const std::vector<double> &theta_grid,
                                    std::size_t triplet_slot) {
    QMATCH_REQUIRE(theta_grid.size() >= 3,
                   "covariant square-root POM needs at least three grid points");
    QMATCH_REQUIRE(triplet_slot < theta_grid.size(), "triplet slot out of range");
    // The off-diagonal parts of sum_i |μ~_i><μ~_i| carry e^{-iΘ} and e^{-2iΘ}.
    Complex first{0.0, 0.0};
    Complex second{0.0, 0.0};
    for (double t : theta_grid) {
        first += std::polar(1.0, t);
        second += std::polar(1.0, 2.0 * t);
    }
    QMATCH_REQUIRE(std::abs(first) <= 1e-9 && std::abs(second) <= 1e-9,
                   "covariant square-root POM needs a uniform theta grid");
    const Basis basis = template_pair_basis(1);
    const double weight = 1.0 / static_cast<double>(theta_grid.size());
    const Matrix triplet = triplet_state().amplitudes() * triplet_state().amplitudes().adjoint();
    std::vector<PomElement> elements;
    elements.reserve(theta_grid.size());
    for (std::size_t i = 0; i < theta_grid.size(); ++i) {
        const Vector mu = mu_tilde(theta_grid[i]);
        Matrix m = weight * (mu * mu.adjoint());
        if (i == triplet_slot) {
            m += triplet;
        }
        elements.push_back({"mu_" + std::to_string(i), theta_grid[i],
                            HermitianOperator::hermitian_part(basis, m)});
    }
    const LearningKind kind =
        theta_grid.size() == 3 ? LearningKind::discrete_three : LearningKind::covariant_sqrt;
    return {kind, POM(std::move(elements))};
}

LearningStrategy discrete_three_pom(std::size_t triplet_slot) {
    LearningStrategy s = covariant_sqrt_pom(uniform_theta_grid(3), triplet_slot);
    s.kind = LearningKind::discrete_three;
    return s;
}

LearningStrategy separable_pom() {
    const double r = 1.0 / kSqrt2;
    const PureState a_plus = qubit_state(r, r);
    const PureState a_minus = qubit_state(r, -r);
    const PureState b_plus = qubit_state(r, kI * r);
    const PureState b_minus = qubit_state(r, -kI * r);
    struct Entry {
        const PureState *a;
        const PureState *b;
        double guess;
    };
    const Entry entries[] = {{&a_plus, &b_plus, -3.0 * kPi / 4.0},
                             {&a_plus, &b_minus, -kPi / 4.0},
                             {&a_minus, &b_plus, 3.0 * kPi / 4.0},
                             {&a_minus, &b_minus, kPi / 4.0}};
    std::vector<PomElement> elements;
    int i = 0;
    for (const auto &e : entries) {
        elements.push_back({"mu_" + std::to_string(i++), e.guess,
                            HermitianOperator::projector(tensor(*e.a, *e.b))});
    }
    return {LearningKind::separable_four, POM(std::move(elements))};
}

LearningStrategy make_learning_strategy(LearningKind kind, std::size_t grid_points) {
    switch (kind) {
    case LearningKind::covariant_sqrt:
        return covariant_sqrt_pom(uniform_theta_grid(grid_points));
    case LearningKind::discrete_three:
        return discrete_three_pom();
    case LearningKind::separable_four:
        return separable_pom();
    }
    throw InvalidArgument("unknown learning strategy");
}

double strategy_score(const LearningStrategy &strategy, int n_inputs) {
    double score = 0.0;
    for (const auto &e : strategy.pom.elements()) {
        QMATCH_REQUIRE(e.guess.has_value(), "learning POM element without a theta guess");
        score += trace_product(e.op, learning_score_operator(n_inputs, 1, *e.guess));
    }
    return score;
}

OptimalityReport verify_optimality(const LearningStrategy &strategy, int n_inputs,
                                   const std::vector<double> &extra_angles) {
    const auto &elements = strategy.pom.elements();
    std::vector<HermitianOperator> g;
    g.reserve(elements.size());
    Matrix gamma = Matrix::Zero(4, 4);
    for (const auto &e : elements) {
        QMATCH_REQUIRE(e.guess.has_value(), "learning POM element without a theta guess");
        g.push_back(learning_score_operator(n_inputs, 1, *e.guess));
        gamma += e.op.matrix() * g.back().matrix();
    }
    OptimalityReport report{};
    report.gamma_asymmetry = max_abs_diff(gamma, gamma.adjoint());
    report.score = gamma.trace().real();
    const Matrix gamma_h = 0.5 * (gamma + gamma.adjoint());

    report.psd_margin = std::numeric_limits<double>::infinity();
    report.commutation_residual = 0.0;
    for (std::size_t i = 0; i < elements.size(); ++i) {
        const Matrix diff = gamma_h - g[i].matrix();
        report.psd_margin = std::min(report.psd_margin, min_eigenvalue(diff));
        report.commutation_residual =
            std::max(report.commutation_residual, (diff * elements[i].op.matrix()).norm());
    }
    for (double theta : extra_angles) {
        const Matrix diff = gamma_h - learning_score_operator(n_inputs, 1, theta).matrix();
        report.psd_margin = std::min(report.psd_margin, min_eigenvalue(diff));
    }
    return report;
}

LearningStrategy swap_guesses(const LearningStrategy &strategy, std::size_t i, std::size_t j) {
    std::vector<PomElement> elements = strategy.pom.elements();
    QMATCH_REQUIRE(i < elements.size() && j < elements.size(), "swap_guesses index out of range");
    std::swap(elements[i].guess, elements[j].guess);
    return {strategy.kind, POM(std::move(elements))};
}

double semiclassical_max_score(int n_inputs) { return 0.5 + r_n(n_inputs) / kSqrt2; }

} // namespace qmatch
