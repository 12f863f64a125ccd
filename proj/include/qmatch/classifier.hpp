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
 * Binary classifier acting on N copies of an unknown phase qubit |f>.
 *
 * Given template phases g1', g2', the optimal two-outcome POM projects onto
 * the positive part of W(g1') - W(g2'). Writing Θ = (g1'+g2')/2 and
 * θ = (g1'-g2')/2, that projector depends on Θ only.
 */

#pragma once

#include "qmatch/bosonic.hpp"

namespace qmatch {

/// Classifier orientation for `n_inputs` copies; theta is stored in [0, 2π).
struct ClassifierSpec {
    int n_inputs;
    double theta;

    ClassifierSpec(int n, double orientation);
};

/**
 * Score operator W(g) = (1/2π) ∫ df |f><f|^{⊗N} |<f|g>|^2 in closed form:
 * diagonal C(N,m)/2^{N+1}, (m+1, m) entry sqrt(C(N,m) C(N,m+1)) e^{ig}/2^{N+2}.
 */
HermitianOperator score_operator_w(int n_inputs, double template_phase);

/// W(Θ+θ) - W(Θ-θ).
HermitianOperator delta_w(int n_inputs, double big_theta, double small_theta);

/// The real tridiagonal frame of delta_w: sinθ/2^{N+1} sqrt(C(N,m) C(N,m+1))
/// on both off-diagonals. Equals delta_w(N, -π/2, θ).
HermitianOperator delta_w_canonical(int n_inputs, double small_theta);

/// Diagonal unitary sum_m e^{imΘ}|m><m| on the symmetric basis of N copies.
Operator rotation_v(int n_inputs, double angle);

/// Positive-part projector Λ1 of delta_w_canonical(N, θ0) (zero eigenvalues
/// included). Memoized per N at θ0 = π/2; thread safe.
const HermitianOperator &lambda_one(int n_inputs);
/// Uncached variant for an explicit θ0 in (0, π).
HermitianOperator lambda_one_at(int n_inputs, double theta0);

/// {Ω1(Θ), Ω2(Θ)} with Ω1 = V(Θ+π/2) Λ1 V(Θ+π/2)^dagger, Ω2 = I - Ω1.
POM classifier_pom(const ClassifierSpec &spec);

/// R_N = 2^{-(N+1)} sum_m sqrt(C(N,m) C(N,m+1)) <m|Λ1|m+1>.
double r_n(int n_inputs);

/// 1/2 + [sin(g1-Θ) - sin(g2-Θ)] R_N.
double classifier_expected_score(int n_inputs, double g1, double g2, double theta);

/// sum_j Tr[Ω_j(Θ) W(g_j)] evaluated operator by operator.
double classifier_score_operatorwise(int n_inputs, double g1, double g2, double theta);

} // namespace qmatch
