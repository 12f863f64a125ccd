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

#include "qmatch/bosonic.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <sstream>

#include <Eigen/Eigenvalues>

namespace qmatch {

double reduce_angle(double angle) {
    double r = std::fmod(angle, kTwoPi);
    if (r < 0.0) {
        r += kTwoPi;
    }
    if (r >= kTwoPi) {
        r = 0.0;
    }
    return r;
}

double binomial(int n, int k) {
    if (n < 0 || k < 0 || k > n) {
        return 0.0;
    }
    k = std::min(k, n - k);
    if (n <= 30) {
        std::uint64_t c = 1;
        for (int i = 1; i <= k; ++i) {
            c = c * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
        }
        return static_cast<double>(c);
    }
    return std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0));
}

// ---------------------------------------------------------------------------
// Basis

Basis Basis::occupation(std::size_t dimension) {
    QMATCH_REQUIRE(dimension >= 1, "basis dimension must be positive");
    Basis b;
    b.kind_ = Kind::occupation;
    b.dimension_ = dimension;
    return b;
}

Basis Basis::composite(std::vector<Basis> factors) {
    QMATCH_REQUIRE(!factors.empty(), "composite basis needs at least one factor");
    Basis b;
    b.kind_ = Kind::composite;
    b.dimension_ = 1;
    for (const auto &f : factors) {
        b.dimension_ *= f.dimension();
    }
    b.factors_ = std::move(factors);
    return b;
}

std::string Basis::describe() const {
    if (kind_ == Kind::occupation) {
        return "occ(" + std::to_string(dimension_) + ")";
    }
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (i) {
            os << '*';
        }
        os << factors_[i].describe();
    }
    os << ']';
    return os.str();
}

// ---------------------------------------------------------------------------
// PureState

PureState::PureState(Basis basis, Vector amplitudes)
    : basis_(std::move(basis)), amplitudes_(std::move(amplitudes)) {
    QMATCH_REQUIRE(static_cast<std::size_t>(amplitudes_.size()) == basis_.dimension(),
                   "amplitude vector does not match basis dimension");
    QMATCH_REQUIRE(std::abs(amplitudes_.squaredNorm() - 1.0) <= kStructureTolerance,
                   "pure state is not normalized");
}

PureState PureState::normalized(Basis basis, Vector amplitudes) {
    const double norm = amplitudes.norm();
    QMATCH_REQUIRE(norm > 0.0, "cannot normalize the zero vector");
    return PureState(std::move(basis), amplitudes / norm);
}

// ---------------------------------------------------------------------------
// Operator / HermitianOperator

Operator::Operator(Basis basis, Matrix entries)
    : basis_(std::move(basis)), entries_(std::move(entries)) {
    QMATCH_REQUIRE(entries_.rows() == entries_.cols() &&
                       static_cast<std::size_t>(entries_.rows()) == basis_.dimension(),
                   "operator shape does not match basis dimension");
}

Operator Operator::adjoint() const { return {basis_, entries_.adjoint()}; }

HermitianOperator::HermitianOperator(Basis basis, Matrix entries)
    : basis_(std::move(basis)), entries_(std::move(entries)) {
    QMATCH_REQUIRE(entries_.rows() == entries_.cols() &&
                       static_cast<std::size_t>(entries_.rows()) == basis_.dimension(),
                   "operator shape does not match basis dimension");
    const double scale = std::max(1.0, entries_.cwiseAbs().maxCoeff());
    QMATCH_REQUIRE(max_abs_diff(entries_, entries_.adjoint()) <= kStructureTolerance * scale,
                   "operator is not Hermitian");
}

HermitianOperator HermitianOperator::hermitian_part(Basis basis, const Matrix &entries) {
    Matrix h = 0.5 * (entries + entries.adjoint());
    return {std::move(basis), std::move(h)};
}

HermitianOperator HermitianOperator::identity(const Basis &basis) {
    const auto d = static_cast<Eigen::Index>(basis.dimension());
    return {basis, Matrix::Identity(d, d)};
}

HermitianOperator HermitianOperator::zero(const Basis &basis) {
    const auto d = static_cast<Eigen::Index>(basis.dimension());
    return {basis, Matrix::Zero(d, d)};
}

HermitianOperator HermitianOperator::projector(const PureState &state) {
    return {state.basis(), state.amplitudes() * state.amplitudes().adjoint()};
}

double HermitianOperator::trace() const { return entries_.trace().real(); }

double HermitianOperator::expectation(const Vector &psi) const {
    return psi.dot(entries_ * psi).real();
}

HermitianOperator HermitianOperator::conjugated(const Operator &unitary) const {
    QMATCH_REQUIRE(unitary.basis() == basis_, "basis mismatch in conjugation");
    Matrix m = unitary.matrix() * entries_ * unitary.matrix().adjoint();
    return hermitian_part(basis_, m);
}

HermitianOperator &HermitianOperator::operator+=(const HermitianOperator &other) {
    QMATCH_REQUIRE(other.basis_ == basis_, "basis mismatch in operator sum");
    entries_ += other.entries_;
    return *this;
}

HermitianOperator &HermitianOperator::operator-=(const HermitianOperator &other) {
    QMATCH_REQUIRE(other.basis_ == basis_, "basis mismatch in operator difference");
    entries_ -= other.entries_;
    return *this;
}

HermitianOperator &HermitianOperator::operator*=(double scale) {
    entries_ *= scale;
    return *this;
}

HermitianOperator operator+(HermitianOperator lhs, const HermitianOperator &rhs) {
    lhs += rhs;
    return lhs;
}

HermitianOperator operator-(HermitianOperator lhs, const HermitianOperator &rhs) {
    lhs -= rhs;
    return lhs;
}

HermitianOperator operator*(double scale, HermitianOperator op) {
    op *= scale;
    return op;
}

double trace_product(const HermitianOperator &a, const HermitianOperator &b) {
    QMATCH_REQUIRE(a.basis() == b.basis(), "basis mismatch in trace product");
    // Tr[AB] = sum_ij A_ij B_ji = sum_ij A_ij conj(B_ij) for Hermitian B.
    return (a.matrix().array() * b.matrix().conjugate().array()).sum().real();
}

// ---------------------------------------------------------------------------
// SpectralDecomposition / POM

HermitianOperator SpectralDecomposition::reconstruct() const {
    const auto d = static_cast<Eigen::Index>(basis.dimension());
    Matrix m = Matrix::Zero(d, d);
    for (std::size_t i = 0; i < eigenvectors.size(); ++i) {
        const Vector &v = eigenvectors[i].amplitudes();
        m += eigenvalues(static_cast<Eigen::Index>(i)) * (v * v.adjoint());
    }
    return HermitianOperator::hermitian_part(basis, m);
}

PomCheck POM::check(const std::vector<PomElement> &elements) {
    QMATCH_REQUIRE(!elements.empty(), "POM needs at least one element");
    const Basis &basis = elements.front().op.basis();
    const auto d = static_cast<Eigen::Index>(basis.dimension());
    Matrix sum = Matrix::Zero(d, d);
    double min_ev = std::numeric_limits<double>::infinity();
    for (const auto &e : elements) {
        QMATCH_REQUIRE(e.op.basis() == basis, "POM elements live on different bases");
        sum += e.op.matrix();
        min_ev = std::min(min_ev, min_eigenvalue(e.op.matrix()));
    }
    return {min_ev, max_abs_diff(sum, Matrix::Identity(d, d))};
}

POM::POM(std::vector<PomElement> elements) : elements_(std::move(elements)) {
    const PomCheck c = check(elements_);
    if (!c.ok()) {
        std::ostringstream os;
        os << "invalid POM: min eigenvalue " << c.min_eigenvalue << ", identity residual "
           << c.identity_residual;
        throw NumericError(os.str());
    }
}

std::vector<double> POM::probabilities(const Vector &psi) const {
    std::vector<double> p;
    p.reserve(elements_.size());
    for (const auto &e : elements_) {
        p.push_back(e.op.expectation(psi));
    }
    return p;
}

// ---------------------------------------------------------------------------
// Free operations

PureState phase_state(int n_copies, double phase) {
    QMATCH_REQUIRE(n_copies >= 1, "phase_state needs n_copies >= 1");
    const double f = reduce_angle(phase);
    const double scale = std::ldexp(1.0, -n_copies);
    Vector amps(n_copies + 1);
    for (int k = 0; k <= n_copies; ++k) {
        amps(k) = std::polar(std::sqrt(binomial(n_copies, k) * scale), k * f);
    }
    return {Basis::symmetric(n_copies), std::move(amps)};
}

Matrix outer_product(const PureState &a, const PureState &b) {
    QMATCH_REQUIRE(a.basis() == b.basis(), "outer_product: basis mismatch");
    return a.amplitudes() * b.amplitudes().adjoint();
}

namespace {

Basis tensor_basis(const Basis &a, const Basis &b) {
    std::vector<Basis> factors;
    for (const Basis *x : {&a, &b}) {
        if (x->kind() == Basis::Kind::composite) {
            factors.insert(factors.end(), x->factors().begin(), x->factors().end());
        } else {
            factors.push_back(*x);
        }
    }
    return Basis::composite(std::move(factors));
}

Matrix kron(const Matrix &a, const Matrix &b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

} // namespace

PureState tensor(const PureState &a, const PureState &b) {
    const Vector &x = a.amplitudes();
    const Vector &y = b.amplitudes();
    Vector out(x.size() * y.size());
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        out.segment(i * y.size(), y.size()) = x(i) * y;
    }
    return PureState::normalized(tensor_basis(a.basis(), b.basis()), std::move(out));
}

HermitianOperator tensor(const HermitianOperator &a, const HermitianOperator &b) {
    return {tensor_basis(a.basis(), b.basis()), kron(a.matrix(), b.matrix())};
}

Operator tensor(const Operator &a, const Operator &b) {
    return {tensor_basis(a.basis(), b.basis()), kron(a.matrix(), b.matrix())};
}

SpectralDecomposition eigendecompose(const HermitianOperator &h) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(h.matrix(), Eigen::ComputeEigenvectors);
    if (solver.info() != Eigen::Success) {
        throw NumericError("Hermitian eigensolver did not converge");
    }
    const Eigen::Index d = h.matrix().rows();
    SpectralDecomposition out{h.basis(), RealVector(d), {}};
    out.eigenvectors.reserve(static_cast<std::size_t>(d));
    for (Eigen::Index i = 0; i < d; ++i) {
        const Eigen::Index src = d - 1 - i;
        out.eigenvalues(i) = solver.eigenvalues()(src);
        out.eigenvectors.push_back(
            PureState::normalized(h.basis(), solver.eigenvectors().col(src)));
    }
    return out;
}

SpectralDecomposition eigendecompose(const Basis &basis, const Matrix &h) {
    return eigendecompose(HermitianOperator(basis, h));
}

HermitianOperator positive_part_projector(const HermitianOperator &h, ZeroPolicy zero_policy) {
    const SpectralDecomposition sd = eigendecompose(h);
    const auto d = static_cast<Eigen::Index>(h.dimension());
    Matrix p = Matrix::Zero(d, d);
    for (Eigen::Index i = 0; i < d; ++i) {
        const double lambda = sd.eigenvalues(i);
        const bool take = lambda > kEigenTolerance ||
                          (zero_policy == ZeroPolicy::include_zero &&
                           std::abs(lambda) <= kEigenTolerance);
        if (take) {
            const Vector &v = sd.eigenvectors[static_cast<std::size_t>(i)].amplitudes();
            p += v * v.adjoint();
        }
    }
    return HermitianOperator::hermitian_part(h.basis(), p);
}

double min_eigenvalue(const Matrix &h) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(h, Eigen::EigenvaluesOnly);
    return solver.eigenvalues()(0);
}

double max_abs_diff(const Matrix &a, const Matrix &b) {
    if (a.size() == 0) {
        return 0.0;
    }
    return (a - b).cwiseAbs().maxCoeff();
}

} // namespace qmatch
