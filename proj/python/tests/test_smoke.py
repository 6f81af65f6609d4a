# Copyright 2026 The cgplab Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.


import math

import numpy as np
import pytest

import cgplab

H = np.array([[1, 1], [1, -1]], dtype=complex) / math.sqrt(2)


def test_hadamard_cgp():
    assert cgplab.cgp_unitary(H) == pytest.approx(1 / 6, abs=1e-15)


def test_cgp_matches_distance():
    u = cgplab.haar_unitary(4, seed=7)
    b = cgplab.Mori.computational(4)
    d = cgplab.masa_distance(b, b.rotated(u))
    assert cgplab.cgp_unitary(u, b) == pytest.approx(d * d / 40, abs=1e-12)


def test_distance_methods_agree():
    a = cgplab.Mori(cgplab.haar_unitary(3, seed=1))
    b = cgplab.Mori(cgplab.haar_unitary(3, seed=2))
    closed = cgplab.masa_distance(a, b)
    for method in ("superop", "commutator"):
        assert cgplab.masa_distance(a, b, method) == pytest.approx(closed, abs=1e-10)


def test_overlap_is_doubly_stochastic():
    a = cgplab.Mori(cgplab.haar_unitary(5, seed=3))
    o = cgplab.overlap_matrix(a, cgplab.Mori.computational(5))
    np.testing.assert_allclose(o.sum(axis=0), 1.0, atol=1e-12)
    np.testing.assert_allclose(o.sum(axis=1), 1.0, atol=1e-12)


def test_fourier_phi_is_infinite():
    assert math.isinf(cgplab.phi(cgplab.fourier_unitary(4)))


def test_estimate_is_deterministic():
    first = cgplab.estimate_cgp(H, samples=2000, seed=5, workers=2)
    second = cgplab.estimate_cgp(H, samples=2000, seed=5, workers=2)
    assert first == second
    assert abs(first["mean"] - 1 / 6) < 5 * first["stderr"]


def test_coherence_of_plus_state():
    rho = np.full((2, 2), 0.5, dtype=complex)
    assert cgplab.coherence(rho) == pytest.approx(0.5, abs=1e-15)


def test_channel_warning():
    g = 0.3
    k0 = np.array([[1, 0], [0, math.sqrt(1 - g)]], dtype=complex)
    k1 = np.array([[0, math.sqrt(g)], [0, 0]], dtype=complex)
    _, warnings = cgplab.cgp_channel([k0, k1])
    assert warnings


def test_qubit_metric_speed():
    def hamiltonian(t):
        return np.array([[math.cos(t), math.sin(t)], [math.sin(t), -math.cos(t)]], dtype=complex)

    sample = cgplab.metric_speed(2, hamiltonian, -1.0, 1.0, 0.2)
    assert sample.speed == pytest.approx(2.0, abs=1e-6)


def test_input_errors_raise_value_error():
    with pytest.raises(cgplab.InputError):
        cgplab.cgp_unitary(np.ones((2, 2), dtype=complex))
    with pytest.raises(ValueError):
        cgplab.qubit_dfs(-1.0)
