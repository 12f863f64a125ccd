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
"""Smoke tests for the qmatch Python extension."""

import json
import math

import numpy as np
import pytest

qmatch = pytest.importorskip("qmatch")


def test_r_n_and_scores():
    assert qmatch.r_n(1) == pytest.approx(0.125, abs=1e-14)
    assert qmatch.semiclassical_max_score(1) == pytest.approx(0.5 + 0.125 / math.sqrt(2), abs=1e-14)
    assert qmatch.universal_score_analytic(2) == pytest.approx(0.6066941738, abs=1e-9)
    assert qmatch.baseline_k_infinity(1) == pytest.approx(0.5 + 1 / (2 * math.pi), abs=1e-14)
    assert qmatch.universal_score_numeric(3, 1) == pytest.approx(qmatch.universal_score_analytic(3), abs=1e-12)


def test_operators_are_numpy_arrays():
    w = qmatch.score_operator_w(1, 0.0)
    assert isinstance(w, np.ndarray) and w.dtype == np.complex128
    assert np.allclose(w, [[0.25, 0.125], [0.125, 0.25]], atol=1e-15)
    g = qmatch.learning_score_operator(1, 1, 0.0)
    assert np.allclose(np.linalg.eigvalsh(g)[::-1], [0.15625, 0.125, 0.125, 0.09375], atol=1e-14)
    assert qmatch.score_operator_wi(1, 1, 1).shape == (8, 8)


def test_quadrature_matches_closed_form():
    p = qmatch.minimum_quadrature_points(4, 0)
    assert np.abs(qmatch.quadrature_w_of_g(4, 0.3, p) - qmatch.score_operator_w(4, 0.3)).max() < 1e-13
    with pytest.raises(ValueError):
        qmatch.quadrature_w_of_g(4, 0.3, p - 1)


def test_poms_resolve_identity():
    for elements in (qmatch.classifier_pom(3, 0.4), qmatch.learning_pom("separable_four"),
                     qmatch.universal_pom(2, 1), qmatch.universal_pom(1, 2)):
        total = sum(e["matrix"] for e in elements)
        assert np.allclose(total, np.eye(total.shape[0]), atol=1e-10)
        for e in elements:
            assert np.linalg.eigvalsh(e["matrix"]).min() >= -1e-10
    labels = [e["label"] for e in qmatch.classifier_pom(1, 0.0)]
    assert labels == ["Omega_1", "Omega_2"]


def test_curve_and_simulation():
    rows = qmatch.score_curve(1, 4)
    assert [r["N"] for r in rows] == [1, 2, 3, 4]
    assert all(r["semiclassical"] <= r["universal"] <= r["baseline_k_infinity"] for r in rows)
    a = qmatch.simulate(2, 1, "universal", samples=50000, seed=3)
    b = qmatch.simulate(2, 1, "universal", samples=50000, seed=3, workers=2)
    assert a == b
    assert abs(a["mc_mean"] - a["analytic"]) <= 4 * a["mc_stderr"]
    with pytest.raises(ValueError):
        qmatch.simulate(1, samples=0)


def test_pom_json_round_trip():
    for which, kwargs in (("classifier", {"theta": 1.1}), ("learning", {}), ("universal", {"k_copies": 2})):
        text = qmatch.pom_json(which, n_inputs=2, **kwargs)
        assert qmatch.pom_roundtrip(text) == text
        assert json.loads(text)["which"] == which
    with pytest.raises(ValueError):
        qmatch.pom_roundtrip("{}")


def test_verify_suite():
    checks = qmatch.verify("pom")
    assert checks and all(c["passed"] for c in checks)
