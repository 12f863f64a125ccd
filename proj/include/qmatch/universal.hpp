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
 * Universal matching machine: a single two-outcome POM {Π1, Π2} acting
 * jointly on |f>^{⊗N} ⊗ |g1>^{⊗K} ⊗ |g2>^{⊗K} with no intermediate
 * estimate of the templates.
 *
 * Joint basis |k, m, n> is ordered k-major: index = k (K+1)^2 + m (K+1) + n.
 */

#pragma once

#include <cstddef>
#include <vector>

#include "qmatch/bosonic.hpp"

namespace qmatch {

struct MatchingProblem {
    static constexpr int n_classes = 2;

    int n_inputs;
    int k_copies;

    [[nodiscard]] std::size_t joint_dimension() const;
    [[nodiscard]] Basis basis() const;
    void validate() const;
};

/// Largest joint dimension the dense numeric solver accepts.
inline constexpr std::size_t kMaxJointDimension = 4096;

/// |f>^{⊗N} ⊗ |g1>^{⊗K} ⊗ |g2>^{⊗K}.
PureState joint_state(const MatchingProblem &problem, double f, double g1, double g2);

/// Joint-basis index of |k, m, n>.
std::size_t joint_index(const MatchingProblem &problem, int k, int m, int n);

/// W_i for class_index in {1, 2}: diagonal 2 C(N,k) C(K,m) C(K,n) / 2^{N+2+2K}
/// plus the k <-> k+1 coupling to template i.
HermitianOperator score_operator_wi(const MatchingProblem &problem, int class_index);

struct MatchingBlock {
    int k;            ///< block index 0..N
    double magnitude; ///< positive eigenvalue of the block
    PureState plus;
    PureState minus;
};

struct BlockSolution {
    std::vector<MatchingBlock> blocks;
    std::size_t kernel_dimension;
};

/// Closed-form eigen-structure of W1 - W2 at K = 1: block k lives on
/// {|k+1,00>, |k,S>, |k-1,11>} (missing states dropped at the edges).
BlockSolution block_decomposition_k1(int n_inputs);

enum class KernelAssignment { first, second };

/// Π1 = sum_k |k+><k+|, Π2 = sum_k |k-><k-|, with the kernel of W1 - W2
/// added to the element chosen by `kernel`.
POM universal_pom_k1(int n_inputs, KernelAssignment kernel = KernelAssignment::first);

/// 1/2 + (√2/2^{N+4}) (2√N + sum_{k=1}^{N-1} sqrt(C(N,k)) sqrt(C(N,k+1) + C(N,k-1))).
double universal_score_analytic(int n_inputs);

struct NumericSolution {
    POM pom;
    double score;
    std::vector<double> positive_eigenvalues;
};

/// Π1 = positive-part projector of W1 - W2 (zero eigenspace per
/// `zero_policy`), score = 1/2 + sum of positive eigenvalues. Throws
/// InvalidArgument above kMaxJointDimension.
NumericSolution universal_solver_numeric(const MatchingProblem &problem,
                                         ZeroPolicy zero_policy = ZeroPolicy::include_zero);

/// Score of an arbitrary two-outcome POM: 1/2 + Tr[(W1 - W2) Π1].
double universal_pom_score(const MatchingProblem &problem, const POM &pom);

} // namespace qmatch
