#!/usr/bin/env python3
# -*- coding: UTF-8 -*-

"""
Copyright 2020-2026 The geobinder Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
"""

import numpy as np
import pytest

import helper
from core.components import exceptions
from core.components.lattice_tools import lattice_models
from core.components.lattice_tools import slater
from core.model.lattice_model import ModelSpec, SlaterState
from core.model.sequence_model import CharSeq


@pytest.fixture(scope="module")
def closed_shell():
    return lattice_models.ground_state(ModelSpec.uniform_chain(100), 49)


@pytest.fixture(scope="module")
def open_shell():
    return lattice_models.ground_state(ModelSpec.uniform_chain(100), 50)


def test_closed_shell_is_flat(closed_shell):
    cs = slater.char_seq(closed_shell, 5)
    assert cs.source == CharSeq.SLATER
    assert cs.q_max == 5
    assert abs(cs.at(0) - 1) < 1e-12
    assert np.all(cs.magnitudes()[1:] < 1e-10)


def test_open_shell_half_magnitude(open_shell):
    assert open_shell.degenerate_flag
    cs = slater.char_seq(open_shell, 2)
    assert abs(cs.at(1)) == pytest.approx(0.5, abs=1e-10)
    assert abs(cs.at(2)) < 1e-10


def test_pinned_particle():
    cs = slater.char_seq(helper.pinned_state(100, 7), 4)
    q = np.arange(5)
    assert np.allclose(cs.values, np.exp(2j * np.pi * q * 7 / 100), atol=1e-14)

    gamma, X = slater.resta_polarization(cs)
    assert gamma == pytest.approx(2 * np.pi * 7 / 100)
    assert X == pytest.approx(7.0)


def test_polarization_modulo_length():
    # 超过半个周期的位置折回 (-L/2, L/2]
    cs = slater.char_seq(helper.pinned_state(100, 80), 1)
    X = slater.resta_polarization(cs)[1]
    assert X == pytest.approx(-20.0)
    assert np.mod(X, 100) == pytest.approx(80.0)


def test_polarization_undefined(closed_shell):
    with pytest.raises(exceptions.PolarizationUndefined):
        slater.resta_polarization(slater.char_seq(closed_shell, 1))


def test_localized_aubry_andre_particle():
    spec = ModelSpec.aubry_andre(10, 10.0)
    s = lattice_models.eigensolve(lattice_models.build_model(spec))
    state = lattice_models.occupy_ground(s, 1)
    X = slater.resta_polarization(slater.char_seq(state, 1))[1]
    peak = int(np.argmax(np.abs(s.eigenvectors[:, 0]) ** 2))
    distance = np.mod(X - peak, spec.L)
    assert min(distance, spec.L - distance) < 0.5


@pytest.mark.parametrize("spec, N", [
    (ModelSpec.aubry_andre(9, 1.5), 17),
    (ModelSpec.ssh(24, 1.2, 0.7), 12),
    (ModelSpec.uniform_chain(30), 14),
    (ModelSpec.uniform_chain(12), 6)
])
def test_hermitian_symmetry(spec, N):
    state = lattice_models.ground_state(spec, N)
    for q in range(1, 4):
        forward = slater.twist_expectation(state, q)
        backward = slater.twist_expectation(state, -q)
        assert abs(backward - np.conj(forward)) < 1e-10
        assert abs(forward) <= 1 + 1e-10


@pytest.mark.parametrize("spec, N", [
    (ModelSpec.aubry_andre(9, 2.0), 17),
    (ModelSpec.uniform_chain(12), 6)
])
def test_gauge_invariance(spec, N):
    state = lattice_models.ground_state(spec, N)
    rng = np.random.RandomState(7)
    phases = np.exp(1j * rng.uniform(0, 2 * np.pi, N))
    rephased = state.rephased(phases)
    for q in range(4):
        assert abs(slater.twist_expectation(rephased, q) - slater.twist_expectation(state, q)) < 1e-12


def test_full_band_is_comb():
    state = lattice_models.ground_state(ModelSpec.aubry_andre(8, 1.0), 21)
    cs = slater.char_seq(state, 4)
    assert np.allclose(cs.magnitudes(), 1.0, atol=1e-10)


def test_char_seq_invalid_q_max(closed_shell):
    for q_max in (0, -1, 1.5):
        with pytest.raises(exceptions.ShiftOutOfRange):
            slater.char_seq(closed_shell, q_max)


def test_state_overlap():
    s = lattice_models.eigensolve(lattice_models.build_model(ModelSpec.ssh(10, 1.0, 0.4)))
    a = lattice_models.occupy_ground(s, 5)
    assert abs(slater.state_overlap(a, a) - 1) < 1e-12

    first = SlaterState(10, 1, [(1.0, s.eigenvectors[:, :1])])
    second = SlaterState(10, 1, [(1.0, s.eigenvectors[:, 1:2])])
    assert abs(slater.state_overlap(first, second)) < 1e-12

    rng = np.random.RandomState(3)
    u = rng.normal(size=10) + 1j * rng.normal(size=10)
    v = rng.normal(size=10) + 1j * rng.normal(size=10)
    u /= np.linalg.norm(u)
    v /= np.linalg.norm(v)
    single_u = SlaterState(10, 1, [(1.0, u[:, None])])
    single_v = SlaterState(10, 1, [(1.0, v[:, None])])
    assert slater.state_overlap(single_u, single_v) == pytest.approx(np.vdot(u, v), abs=1e-14)


def test_state_overlap_degenerate(open_shell):
    assert abs(slater.state_overlap(open_shell, open_shell) - 1) < 1e-10


def test_state_overlap_mismatch():
    a = lattice_models.ground_state(ModelSpec.uniform_chain(10, ModelSpec.OPEN), 3)
    b = lattice_models.ground_state(ModelSpec.uniform_chain(10, ModelSpec.OPEN), 4)
    with pytest.raises(exceptions.StateMismatch):
        slater.state_overlap(a, b)


def test_slater_state_validation():
    orbitals = np.eye(4)[:, :2]
    with pytest.raises(exceptions.StateMismatch):
        SlaterState(4, 3, [(1.0, orbitals)])
    with pytest.raises(exceptions.StateMismatch):
        SlaterState(4, 2, [(0.5, orbitals)])
    with pytest.raises(exceptions.StateMismatch):
        SlaterState(4, 2, [(0.5 ** 0.5, orbitals), (0.5 ** 0.5, orbitals)])


def test_large_state_normalization():
    state = lattice_models.ground_state(ModelSpec.aubry_andre(14, 2.0), 188)
    assert abs(slater.twist_expectation(state, 0) - 1) < 1e-10
