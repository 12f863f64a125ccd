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
 * Learning stage of the semiclassical matcher: estimating the classifier
 * orientation Θ from K copies of each template.
 *
 * The learning score operator G(Θ) acts on the joint symmetric basis
 * |m> ⊗ |n> of the two template blocks, and a learning strategy is a POM
 * {μ(Θ_i)} whose outcomes carry Θ guesses. The achieved score is
 * sum_i Tr[μ(Θ_i) G(Θ_i)].
 *
 * For K = 1 the joint basis is the two-qubit basis |00>, |01>, |10>, |11>
 * with 0 = up, 1 = down. Optimal strategies are only shipped for K = 1.
 */

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qmatch/bosonic.hpp"

namespace qmatch {

struct LearningProblem {
    int n_inputs;
    int k_copies;
    std::vector<double> theta_grid;

    /// Throws InvalidArgument on non-positive sizes, an empty grid, or two
    /// grid entries equal mod 2π.
    void validate() const;
};

enum class LearningKind { covariant_sqrt, discrete_three, separable_four };

std::string_view to_string(LearningKind kind);
/// Accepts the names produced by to_string; throws InvalidArgument otherwise.
LearningKind parse_learning_kind(std::string_view name);

/// A POM on the joint K = 1 template basis whose elements carry Θ guesses.
struct LearningStrategy {
    LearningKind kind;
    POM pom;
};

/// Joint basis |m> ⊗ |n> for two blocks of K template copies.
Basis template_pair_basis(int k_copies);

/// C = 2^{-K} sum_k C(K,k) |k><k|.
HermitianOperator c_operator(int k_copies);
/// D(Θ) = (i/2^K) sum_k sqrt(C(K,k) C(K,k+1)) (e^{iΘ}|k+1><k| - e^{-iΘ}|k><k+1|).
HermitianOperator d_operator(int k_copies, double theta);

/// G(Θ) = 1/2 C⊗C + (R_N/2) [D(Θ)⊗C - C⊗D(Θ)].
HermitianOperator learning_score_operator(int n_inputs, int k_copies, double theta);
HermitianOperator learning_score_operator(const LearningProblem &problem, double theta);

// K = 1 joint states (0 = up, 1 = down).
PureState singlet_state();           ///< (|01> - |10>)/√2
PureState triplet_state();           ///< (|01> + |10>)/√2
PureState a_plus_state(double theta);  ///< eigenvalue (1+2R_N)/8
PureState a_zero_state(double theta);  ///< eigenvalue (1-2R_N)/8
PureState a_minus_state(double theta); ///< eigenvalue 1/8
/// Unnormalized square-root measurement vector
/// -e^{-i(Θ+π/2)}|00> + |S> + e^{i(Θ+π/2)}|11>; squared norm 3.
Vector mu_tilde(double theta);
/// e^{-iΘ}|00><00| + |S><S| + e^{iΘ}|11><11| + |T><T|.
Operator k1_rotation(double theta);

/// Closed-form K = 1 spectrum of G(Θ): a+, T, a-, a0 (descending).
SpectralDecomposition g_spectral_k1(double theta, int n_inputs);

/// count equally spaced angles 2πi/count.
std::vector<double> uniform_theta_grid(std::size_t count);

/**
 * Square-root measurement (1/|grid|)|μ~(Θ_i)><μ~(Θ_i)| on a uniform grid
 * of at least three angles. The triplet projector |T><T| is added to the
 * element at index `triplet_slot`; the score does not depend on the slot.
 */
LearningStrategy covariant_sqrt_pom(const std::vector<double> &theta_grid,
                                    std::size_t triplet_slot = 0);
/// Three-outcome version on {0, 2π/3, 4π/3}.
LearningStrategy discrete_three_pom(std::size_t triplet_slot = 0);
/// Product von Neumann measurements |A±>⊗|B±> with guesses
/// -3π/4, -π/4, 3π/4, π/4.
LearningStrategy separable_pom();

/// Builds the named strategy; covariant_sqrt uses a uniform grid of
/// `grid_points` angles.
LearningStrategy make_learning_strategy(LearningKind kind, std::size_t grid_points = 64);

/// sum_i Tr[μ_i G(Θ_i)].
double strategy_score(const LearningStrategy &strategy, int n_inputs);

struct OptimalityReport {
    double psd_margin;           ///< min over Θ of λ_min(Γ - G(Θ))
    double commutation_residual; ///< max_i ||(Γ - G(Θ_i)) μ_i||_F
    double gamma_asymmetry;      ///< max |Γ - Γ^dagger| entrywise
    double score;                ///< Tr Γ
};

/**
 * Holevo conditions with Γ = sum_i μ_i G(Θ_i). The PSD margin is taken
 * over the strategy's own guesses plus `extra_angles`.
 */
OptimalityReport verify_optimality(const LearningStrategy &strategy, int n_inputs,
                                   const std::vector<double> &extra_angles = {});

/// Same POM with the guesses of elements i and j exchanged.
LearningStrategy swap_guesses(const LearningStrategy &strategy, std::size_t i, std::size_t j);

/// 1/2 + R_N/√2.
double semiclassical_max_score(int n_inputs);

} // namespace qmatch
