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
 * Independent checks of the closed forms: uniform-grid quadrature of the
 * defining angle integrals, seeded Monte-Carlo runs of both physical
 * protocols, the known-template (K = ∞) baseline, and score curves.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qmatch/bosonic.hpp"
#include "qmatch/learning.hpp"
#include "qmatch/universal.hpp"

namespace qmatch {

// ---------------------------------------------------------------------------
// Quadrature

/// Number of equally spaced nodes per angle variable. Averages of
/// trigonometric polynomials of degree < points_per_angle are exact.
struct QuadratureSpec {
    std::size_t points_per_angle;
};

/// 2(N + 2K + 2): enough for every integrand handled here.
std::size_t minimum_quadrature_points(int n_inputs, int k_copies);

enum class DefiningIntegral { w_of_g, g_of_theta, w_i };

struct QuadratureParams {
    int n_inputs = 1;
    int k_copies = 1;    ///< ignored by w_of_g
    double angle = 0.0;  ///< g for w_of_g, Θ for g_of_theta
    int class_index = 1; ///< w_i only
};

/// Uniform-grid average of the named integrand. Throws InvalidArgument when
/// spec.points_per_angle is below minimum_quadrature_points.
HermitianOperator quadrature_operator(DefiningIntegral integral, const QuadratureParams &params,
                                      const QuadratureSpec &spec);

/// (1/2π) ∫ df |f><f|^{⊗N} |<f|g>|^2.
HermitianOperator quadrature_w_of_g(int n_inputs, double g, const QuadratureSpec &spec);

/// (1/2π)^2 ∫∫ dg1 dg2 ĝ1^{⊗K} ⊗ ĝ2^{⊗K} sum_j Tr[Ω_j(Θ) W(g_j)], with W(g_j)
/// itself obtained by quadrature over f.
HermitianOperator quadrature_g_of_theta(int n_inputs, int k_copies, double theta,
                                        const QuadratureSpec &spec);

/// (W1, W2) from the triple integral over f, g1, g2.
std::pair<HermitianOperator, HermitianOperator> quadrature_w_pair(const MatchingProblem &problem,
                                                                  const QuadratureSpec &spec);

// ---------------------------------------------------------------------------
// Monte Carlo

enum class StrategyFamily { semiclassical, universal };

struct SimulationStrategy {
    StrategyFamily family = StrategyFamily::universal;
    LearningKind learning = LearningKind::discrete_three; ///< semiclassical only

    /// "universal" or "semiclassical:<learning kind>".
    [[nodiscard]] std::string name() const;
    /// Accepts name() output and plain "semiclassical" (discrete_three).
    static SimulationStrategy parse(const std::string &text);
};

struct SimulationConfig {
    int n_inputs = 1;
    int k_copies = 1;
    SimulationStrategy strategy;
    std::uint64_t samples = 1;
    std::uint64_t seed = 0;

    void validate() const;
};

struct ScoreReport {
    std::optional<double> analytic;
    std::optional<double> quadrature;
    double monte_carlo_mean = 0.0;
    double monte_carlo_stderr = 0.0; ///< zero when samples == 1
    SimulationConfig config;
};

/// Samples are processed in fixed chunks of this size; chunk c draws from
/// its own mt19937_64 seeded with chunk_seed(seed, c), and chunk sums are
/// reduced in chunk order. Results do not depend on the worker count.
inline constexpr std::uint64_t kSamplesPerChunk = 1u << 15;
std::uint64_t chunk_seed(std::uint64_t seed, std::uint64_t chunk);

/// Worker count: QMATCH_THREADS when set to a positive integer (capped at the
/// hardware concurrency), else the hardware concurrency.
unsigned worker_count();

struct SimulationOptions {
    unsigned workers = 0;         ///< 0 selects worker_count()
    bool with_quadrature = true;  ///< skipped anyway when too expensive
};

/// Two-stage protocol: learning POM on ĝ1 ⊗ ĝ2, then the classifier
/// designed for the guessed Θ on f̂^{⊗N}. K must be 1.
ScoreReport simulate_semiclassical(const SimulationConfig &config,
                                   const SimulationOptions &options = {});

/// Universal POM on |f>^{⊗N}|g1>^{⊗K}|g2>^{⊗K}; analytic for K = 1,
/// numeric solver otherwise.
ScoreReport simulate_universal(const SimulationConfig &config,
                               const SimulationOptions &options = {});

/// Dispatches on config.strategy.family.
ScoreReport simulate(const SimulationConfig &config, const SimulationOptions &options = {});

// ---------------------------------------------------------------------------
// Baseline and curves

/// Known templates: 1/2 + 4 R_N/π (reconstructed, not a tabulated value).
double baseline_k_infinity(int n_inputs);

/// The same average computed from operator-wise classifier scores with
/// Θ = (g1+g2)/2 or (g1+g2)/2 + π, whichever scores higher, integrated by
/// Gauss-Legendre in g1 - g2 and a uniform grid in g2.
double baseline_k_infinity_quadrature(int n_inputs);

struct CurveRow {
    int n_inputs;
    int k_copies;
    std::optional<double> semiclassical;     ///< K = 1 only
    std::optional<double> universal;         ///< closed form (K = 1) or numeric
    bool universal_is_numeric = false;
    double baseline_k_infinity;
};

/// Largest K the curve's numeric universal column accepts.
inline constexpr int kMaxCurveTemplateCopies = 3;
inline constexpr int kMaxCurveInputs = 64;

/// One row per N in [n_min, n_max]. Throws InvalidArgument on an invalid
/// range or K outside [1, kMaxCurveTemplateCopies].
std::vector<CurveRow> score_curve(int n_min, int n_max, int k_copies);

} // namespace qmatch
