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

import math
import fractions

import numpy as np
import pytest

import helper
from core.components import exceptions
from core.components.lattice_tools import genfun_calculus
from core.model.sequence_model import CharSeq, CumulantReport

F = fractions.Fraction


@pytest.mark.parametrize("n, mu, coeffs", [
    (1, 1, [F(-1, 2), 0, F(1, 2)]),
    (2, 1, [1, -2, 1]),
    (3, 1, [F(-1, 2), 1, 0, -1, F(1, 2)]),
    (4, 1, [1, -4, 6, -4, 1]),
    (2, 2, [F(-1, 12), F(4, 3), F(-5, 2), F(4, 3), F(-1, 12)]),
    (4, 2, [F(-1, 6), 2, F(-13, 2), F(28, 3), F(-13, 2), 2, F(-1, 6)])
])
def test_stencil_examples(n, mu, coeffs):
    table = genfun_calculus.stencil(n, mu)
    assert list(table.coeffs) == [F(c) for c in coeffs]
    assert table.radius == (len(coeffs) - 1) // 2
    assert table.offsets == tuple(range(-table.radius, table.radius + 1))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
@pytest.mark.parametrize("mu", [1, 2, 3, 5, 8])
def test_stencil_monomial_exactness(n, mu):
    table = genfun_calculus.stencil(n, mu)
    for p in range(0, n + 2 * mu):
        moment = sum(c * F(j) ** p for c, j in zip(table.coeffs, table.offsets))
        assert moment == (math.factorial(n) if p == n else 0)
    # 偶数阶对称, 奇数阶反对称
    sign = 1 if n % 2 == 0 else -1
    assert table.coeffs == tuple(sign * c for c in reversed(table.coeffs))


def test_stencil_spectral_limit():
    # 中心系数以 1/mu 的速度收敛
    limits = {2: -np.pi ** 2 / 3, 4: np.pi ** 4 / 5}
    for n, limit in limits.items():
        errors = [abs(float(genfun_calculus.stencil(n, mu).central) - limit) for mu in (1, 5, 10, 20, 40)]
        assert all(b < a for a, b in zip(errors, errors[1:]))
        assert errors[-1] < 0.07 * abs(limit)


def test_stencil_cached():
    assert genfun_calculus.stencil(2, 3) is genfun_calculus.stencil(2, 3)
    table = genfun_calculus.stencil(2, 3)
    with pytest.raises(ValueError):
        table.float_coeffs[0] = 1.0


def test_stencil_invalid():
    for n, mu in ((0, 1), (1, 0), (2, -1), (1.0, 1), (True, 1)):
        with pytest.raises(exceptions.StencilOrderInvalid):
            genfun_calculus.stencil(n, mu)
    with pytest.raises(exceptions.StencilWindowOverflow):
        genfun_calculus.stencil(4, 70)


def test_fdd_flat_first_order():
    L = 100
    cs = genfun_calculus.analytic_char_seq("flat", L, 2)
    M2, M4 = genfun_calculus.fdd_moments(cs, 1)
    assert M2 == pytest.approx(L ** 2 / (2 * np.pi ** 2), rel=1e-14)
    assert M4 == pytest.approx(3 * L ** 4 / (8 * np.pi ** 4), rel=1e-14)


def test_fdd_degenerate_first_order():
    L = 100
    cs = genfun_calculus.analytic_char_seq("degenerate", L, 2)
    M2, M4 = genfun_calculus.fdd_moments(cs, 1)
    assert M2 == pytest.approx(L ** 2 / (4 * np.pi ** 2), rel=1e-14)
    assert M4 == pytest.approx(L ** 4 / (8 * np.pi ** 4), rel=1e-14)


def test_fdd_second_order_closed_form():
    rng = np.random.RandomState(11)
    for _ in range(20):
        cs = helper.random_char_seq(rng, 3)
        M2, M4 = genfun_calculus.fdd_moments(cs, 2)
        expect_M2, expect_M4 = helper.second_order_moments(cs)
        assert M2 == pytest.approx(expect_M2, abs=1e-13)
        assert M4 == pytest.approx(expect_M4, abs=1e-13)


def test_fdd_insufficient_q_max():
    cs = genfun_calculus.analytic_char_seq("flat", 10, 2)
    with pytest.raises(exceptions.InsufficientQMax) as e:
        genfun_calculus.fdd_moments(cs, 2)
    assert e.value.required == 3


def test_fdld_first_order_closed_form():
    rng = np.random.RandomState(5)
    for _ in range(100):
        cs = helper.random_char_seq(rng, 2)
        report = genfun_calculus.fdld_cumulants(cs, 1)
        assert report.scheme == CumulantReport.FDLD
        assert not report.flags
        for name, expect in zip(("C1", "C2", "C3", "C4"), helper.first_order_cumulants(cs)):
            assert report.get(name) == pytest.approx(expect, abs=1e-12)


def test_fdld_point_distribution():
    cs = genfun_calculus.analytic_char_seq("point", 100, 6, j0=3)
    for mu in (1, 2, 3):
        report = genfun_calculus.fdld_cumulants(cs, mu)
        assert report.C1 == pytest.approx(3.0, abs=1e-10)
        for name in ("C2", "C3", "C4"):
            assert abs(report.get(name)) < 1e-8


def test_fdld_flat_is_flagged():
    cs = genfun_calculus.analytic_char_seq("flat", 100, 3)
    report = genfun_calculus.fdld_cumulants(cs, 1)
    for name in ("C1", "C2", "C3", "C4", "c1", "U4", "skew", "kurtosis"):
        assert not report.is_valid(name)
        assert report.get(name) is None
    assert "diverge" in report.flags["C1"]


def test_fdld_shape_statistics():
    rng = np.random.RandomState(9)
    cs = helper.random_char_seq(rng, 2)
    report = genfun_calculus.fdld_cumulants(cs, 1)
    if report.C2 > 0:
        assert report.skew == pytest.approx(report.C3 / report.C2 ** 1.5)
        assert report.kurtosis == pytest.approx(report.C4 / report.C2 ** 2)
        assert report.U4 == pytest.approx(-report.kurtosis / 3)
    else:
        assert not report.is_valid("U4")

    partial = genfun_calculus.fdld_cumulants(cs, 1, n_max=2)
    assert partial.get("C3") is None
    assert not partial.flags


def test_reduced_cumulants():
    cs = genfun_calculus.analytic_char_seq("point", 100, 6, j0=3)
    c = genfun_calculus.reduced_cumulants(cs, 2)
    assert c[0] == pytest.approx(2 * np.pi * 3 / 100, abs=1e-12)
    assert np.allclose(c[1:], 0, atol=1e-12)

    rng = np.random.RandomState(1)
    cs = helper.random_char_seq(rng, 2, L=37.0)
    report = genfun_calculus.fdld_cumulants(cs, 1)
    c = genfun_calculus.reduced_cumulants(cs, 1)
    for n, value in enumerate(c, start=1):
        assert report.get("c{}".format(n)) == pytest.approx(value)
        assert report.get("C{}".format(n)) == pytest.approx((37.0 / (2 * np.pi)) ** n * value)

    with pytest.raises(exceptions.LogDivergence):
        genfun_calculus.reduced_cumulants(genfun_calculus.analytic_char_seq("flat", 100, 3), 1)


def test_reference_kurtosis():
    assert genfun_calculus.reference_kurtosis(genfun_calculus.FLAT) == -1.2
    assert genfun_calculus.reference_kurtosis(genfun_calculus.GAUSSIAN) == 0.0
    assert genfun_calculus.reference_kurtosis(genfun_calculus.RAISED_COSINE) == pytest.approx(-0.593762, abs=1e-6)
    with pytest.raises(exceptions.UnknownReference):
        genfun_calculus.reference_kurtosis("Cauchy")


def test_analytic_char_seq():
    cs = genfun_calculus.analytic_char_seq("degenerate", 50, 4)
    assert cs.source == CharSeq.ANALYTIC
    assert list(cs.magnitudes()) == [1.0, 0.5, 0.0, 0.0, 0.0]
    assert cs.at(-1) == np.conj(cs.at(1))
    with pytest.raises(exceptions.UnknownReference):
        genfun_calculus.analytic_char_seq("gaussian", 50, 4)
