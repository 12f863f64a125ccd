# Copyright 2026 The qmatch Authors.

# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at

#     http://www.apache.org/licenses/LICENSE-2.0

# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Quantum template matching with unknown templates.

Thin Python layer over the C++ core: score operators, optimal POMs for the
semiclassical and universal matching strategies, quadrature oracles and
seeded Monte-Carlo simulation. Matrices are returned as complex NumPy arrays.
"""

from ._core import (
    NumericError,
    baseline_k_infinity,
    classifier_expected_score,
    classifier_pom,
    delta_w,
    learning_pom,
    learning_score_operator,
    learning_strategy_score,
    minimum_quadrature_points,
    pom_json,
    pom_roundtrip,
    quadrature_w_of_g,
    r_n,
    score_curve,
    score_operator_w,
    score_operator_wi,
    semiclassical_max_score,
    simulate,
    universal_pom,
    universal_score_analytic,
    universal_score_numeric,
    verify,
)

__version__ = "0.1.0"

__all__ = [
    "NumericError",
    "baseline_k_infinity",
    "classifier_expected_score",
    "classifier_pom",
    "delta_w",
    "learning_pom",
    "learning_score_operator",
    "learning_strategy_score",
    "minimum_quadrature_points",
    "pom_json",
    "pom_roundtrip",
    "quadrature_w_of_g",
    "r_n",
    "score_curve",
    "score_operator_w",
    "score_operator_wi",
    "semiclassical_max_score",
    "simulate",
    "universal_pom",
    "universal_score_analytic",
    "universal_score_numeric",
    "verify",
]
