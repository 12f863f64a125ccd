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

/**
 * @file
 * Complex linear algebra over occupation-number bases of symmetric
 * multi-qubit subspaces: labelled bases, pure states, Hermitian operators,
 * spectral decompositions and probability operator measures (POMs).
 */

#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qmatch/error.hpp"

namespace qmatch {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

/// Eigenvalues with |λ| at or below this are treated as zero.
inline constexpr double kEigenTolerance = 1e-10;
/// Unit-norm and Hermiticity checks on constructed values.
inline constexpr double kStructureTolerance = 1e-12;

/// Reduces an angle to [0, 2π).
double reduce_angle(double angle);

/// Binomial coefficient C(n, k) as a double; zero outside 0 <= k <= n.
/// Exact integer arithmetic for n <= 30, log-gamma above.
double binomial(int n, int k);

/**
 * @brief Label of a finite-dimensional basis.
 *
 * Either an occupation-number basis {|0>, ..., |d-1>} (the symmetric
 * subspace of d-1 qubits) or an ordered tensor product of other labels.
 */
class Basis {
  public:
    enum class Kind { occupation, composite };

    static Basis occupation(std::size_t dimension);
    static Basis composite(std::vector<Basis> factors);
    /// Occupation basis of the symmetric subspace of `n_copies` qubits.
    static Basis symmetric(int n_copies) {
        return occupation(static_cast<std::size_t>(n_copies) + 1);
    }

    [[nodiscard]] Kind kind() const { return kind_; }
    [[nodiscard]] std::size_t dimension() const { return dimension_; }
    [[nodiscard]] const std::vector<Basis> &factors() const { return factors_; }
    /// Compact textual form, e.g. "occ(2)" or "[occ(3)*occ(2)*occ(2)]".
    [[nodiscard]] std::string describe() const;

    friend bool operator==(const Basis &, const Basis &) = default;

  private:
    Basis() = default;
    Kind kind_{Kind::occupation};
    std::size_t dimension_{1};
    std::vector<Basis> factors_;
};

/// Unit-norm amplitude vector over a labelled basis.
class PureState {
  public:
    /// Throws InvalidArgument on a dimension mismatch or when the squared
    /// norm differs from one by more than kStructureTolerance.
    PureState(Basis basis, Vector amplitudes);
    /// Rescales `amplitudes` to unit norm first.
    static PureState normalized(Basis basis, Vector amplitudes);

    [[nodiscard]] const Basis &basis() const { return basis_; }
    [[nodiscard]] const Vector &amplitudes() const { return amplitudes_; }
    [[nodiscard]] std::size_t dimension() const { return basis_.dimension(); }

  private:
    Basis basis_;
    Vector amplitudes_;
};

/// General square operator on a labelled basis (used for unitaries).
class Operator {
  public:
    Operator(Basis basis, Matrix entries);

    [[nodiscard]] const Basis &basis() const { return basis_; }
    [[nodiscard]] const Matrix &matrix() const { return entries_; }
    [[nodiscard]] std::size_t dimension() const { return basis_.dimension(); }
    [[nodiscard]] Operator adjoint() const;

  private:
    Basis basis_;
    Matrix entries_;
};

/// Square complex matrix equal to its conjugate transpose.
class HermitianOperator {
  public:
    /// Throws InvalidArgument when max |H - H^dagger| exceeds
    /// kStructureTolerance (scaled by max(1, max |H_ij|)).
    HermitianOperator(Basis basis, Matrix entries);
    /// Replaces `entries` by its Hermitian part before wrapping.
    static HermitianOperator hermitian_part(Basis basis, const Matrix &entries);
    static HermitianOperator identity(const Basis &basis);
    static HermitianOperator zero(const Basis &basis);
    static HermitianOperator projector(const PureState &state);

    [[nodiscard]] const Basis &basis() const { return basis_; }
    [[nodiscard]] const Matrix &matrix() const { return entries_; }
    [[nodiscard]] std::size_t dimension() const { return basis_.dimension(); }
    [[nodiscard]] double trace() const;
    /// Expectation <psi|H|psi> for an arbitrary (not necessarily normalized) vector.
    [[nodiscard]] double expectation(const Vector &psi) const;
    /// U H U^dagger.
    [[nodiscard]] HermitianOperator conjugated(const Operator &unitary) const;

    HermitianOperator &operator+=(const HermitianOperator &other);
    HermitianOperator &operator-=(const HermitianOperator &other);
    HermitianOperator &operator*=(double scale);

  private:
    Basis basis_;
    Matrix entries_;
};

HermitianOperator operator+(HermitianOperator lhs, const HermitianOperator &rhs);
HermitianOperator operator-(HermitianOperator lhs, const HermitianOperator &rhs);
HermitianOperator operator*(double scale, HermitianOperator op);

/// Tr[A B] for Hermitian A, B (real up to rounding; the real part is returned).
double trace_product(const HermitianOperator &a, const HermitianOperator &b);

/// Eigenpairs of a Hermitian operator, eigenvalues sorted descending.
struct SpectralDecomposition {
    Basis basis;
    RealVector eigenvalues;
    std::vector<PureState> eigenvectors;

    [[nodiscard]] HermitianOperator reconstruct() const;
};

/// One labelled element of a POM; `guess` carries an estimated angle when
/// the outcome stands for a parameter value.
struct PomElement {
    std::string label;
    std::optional<double> guess;
    HermitianOperator op;
};

/// Residuals of the POM invariants.
struct PomCheck {
    double min_eigenvalue;
    double identity_residual; ///< max |sum_i E_i - I| entrywise
    [[nodiscard]] bool ok() const {
        return min_eigenvalue >= -kEigenTolerance &&
               identity_residual <= kEigenTolerance;
    }
};

/**
 * @brief Probability operator measure: positive operators resolving the
 * identity on a common basis.
 *
 * The constructor enforces both invariants and throws NumericError when
 * either fails.
 */
class POM {
  public:
    explicit POM(std::vector<PomElement> elements);

    [[nodiscard]] const std::vector<PomElement> &elements() const { return elements_; }
    [[nodiscard]] const Basis &basis() const { return elements_.front().op.basis(); }
    [[nodiscard]] std::size_t size() const { return elements_.size(); }
    [[nodiscard]] const PomElement &operator[](std::size_t i) const { return elements_[i]; }
    /// Outcome probabilities Tr[E_i |psi><psi|].
    [[nodiscard]] std::vector<double> probabilities(const Vector &psi) const;

    /// Evaluates the invariants without throwing.
    static PomCheck check(const std::vector<PomElement> &elements);

  private:
    std::vector<PomElement> elements_;
};

/// |phase>^{⊗n}: amplitudes sqrt(C(n,k)/2^n) e^{ik·phase} on the symmetric basis.
PureState phase_state(int n_copies, double phase);

/// M_ij = a_i conj(b_j); throws InvalidArgument on a basis mismatch.
Matrix outer_product(const PureState &a, const PureState &b);

PureState tensor(const PureState &a, const PureState &b);
HermitianOperator tensor(const HermitianOperator &a, const HermitianOperator &b);
Operator tensor(const Operator &a, const Operator &b);

/// Throws InvalidArgument when the input is not Hermitian within tolerance.
SpectralDecomposition eigendecompose(const HermitianOperator &h);
/// Overload that checks a raw matrix for Hermiticity first.
SpectralDecomposition eigendecompose(const Basis &basis, const Matrix &h);

enum class ZeroPolicy { include_zero, exclude_zero };

/// Projector onto eigenvectors with λ > kEigenTolerance, plus those with
/// |λ| <= kEigenTolerance under ZeroPolicy::include_zero.
HermitianOperator positive_part_projector(const HermitianOperator &h,
                                          ZeroPolicy zero_policy = ZeroPolicy::include_zero);

/// Smallest eigenvalue of a Hermitian matrix.
double min_eigenvalue(const Matrix &h);

/// max_ij |a_ij - b_ij|.
double max_abs_diff(const Matrix &a, const Matrix &b);

} // namespace qmatch
