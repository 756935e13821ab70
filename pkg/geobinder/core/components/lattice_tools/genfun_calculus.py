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

import fractions

import lru
import numpy as np
import sympy
from sympy.calculus.finite_diff import finite_diff_weights

from core.components import common
from core.components import exceptions
from core.components.logger import Logger
from core.components.config import Config
from core.model.sequence_model import CharSeq, StencilTable, CumulantReport

FLAT = "Flat"
RAISED_COSINE = "RaisedCosine"
GAUSSIAN = "Gaussian"

_REFERENCE_KURTOSIS = {
    FLAT: -1.2,
    RAISED_COSINE: 1.2 * (90 - np.pi ** 4) / (np.pi ** 2 - 6) ** 2,
    GAUSSIAN: 0.0
}

# (-i)^n
_MINUS_I_POWER = (1, -1j, -1, 1j)

_stencil_cache = None


def _get_cache():
    global _stencil_cache
    if _stencil_cache is None:
        _stencil_cache = lru.LRU(Config().get_config("stencil.cache_size"))
    return _stencil_cache


def stencil_radius(n, mu):
    """
    导数阶 n, 精度 O(h^{2 mu}) 的中心模板所需最小半宽
    """
    return (n - 1) // 2 + mu


def stencil(n, mu):
    """
    生成中心差分模板的精确有理系数

    Parameters:
        n - int, 导数阶, >= 1
        mu - int, 精度阶, >= 1

    Returns:
        StencilTable

    Raises:
        exceptions.StencilOrderInvalid - n 或 mu 非法
        exceptions.StencilWindowOverflow - 半宽超过 stencil.max_radius
    """
    for value in (n, mu):
        if isinstance(value, bool) or not isinstance(value, (int, np.integer)) or value < 1:
            raise exceptions.StencilOrderInvalid("n = {!r}, mu = {!r}".format(n, mu))
    n, mu = int(n), int(mu)

    cache = _get_cache()
    key = (n, mu)
    if key in cache:
        return cache[key]

    radius = stencil_radius(n, mu)
    max_radius = Config().get_config("stencil.max_radius")
    if radius > max_radius:
        raise exceptions.StencilWindowOverflow("radius {} > {}".format(radius, max_radius))

    points = [sympy.Integer(j) for j in range(-radius, radius + 1)]
    weights = finite_diff_weights(n, points, 0)[n][-1]
    coeffs = [fractions.Fraction(int(w.p), int(w.q)) for w in weights]
    table = StencilTable(n, mu, coeffs)
    cache[key] = table
    Logger().debug("Stencil (n={}, mu={}) generated with radius {}".format(n, mu, radius))
    return table


def _require_q_max(cs, radius):
    if cs.q_max < radius:
        raise exceptions.InsufficientQMax(radius, cs.q_max)


def _fold(table, values):
    """
    sum_j c_j f_j, 负下标取共轭

    Parameters:
        table - StencilTable
        values - array, f_0..f_r (复数或实数)
    """
    samples = np.array([values[j] if j >= 0 else np.conj(values[-j]) for j in table.offsets])
    return np.dot(table.float_coeffs, samples)


def fdd_moments(cs, mu):
    """
    对 |Z_q| 作有限差分得到中心矩 M2, M4

    Parameters:
        cs - CharSeq
        mu - int, 精度阶

    Returns:
        (M2, M4), float

    Raises:
        exceptions.InsufficientQMax - q_max 小于四阶模板半宽
    """
    second = stencil(2, mu)
    fourth = stencil(4, mu)
    _require_q_max(cs, fourth.radius)

    magnitudes = cs.magnitudes()
    scale2 = (cs.L / (2 * np.pi)) ** 2
    scale4 = scale2 * scale2
    M2 = -scale2 * float(_fold(second, magnitudes))
    M4 = scale4 * float(_fold(fourth, magnitudes))
    return M2, M4


def _principal_logs(cs, radius):
    """
    Log Z_0..Z_radius, 若有 |Z_q| 低于阈值返回 (None, 出错的 q)
    """
    threshold = Config().get_config("numeric.log_threshold")
    logs = []
    for q in range(radius + 1):
        z = cs.values[q]
        if abs(z) < threshold:
            return None, q
        logs.append(common.principal_log(z))
    return np.array(logs), None


def _reduced(table, logs):
    return float((_MINUS_I_POWER[table.n % 4] * _fold(table, logs)).real)


def fdld_cumulants(cs, mu, n_max=4):
    """
    对 Log Z_q 作有限差分得到累积量 C_1..C_nmax, 同时填入约化累积量 c_n

    对数发散的项在报告中标记无效, 不抛异常

    Parameters:
        cs - CharSeq
        mu - int, 精度阶
        n_max - int, 最高阶, <= 4

    Returns:
        CumulantReport, scheme 为 FDLD

    Raises:
        exceptions.InsufficientQMax - q_max 小于所需模板半宽
    """
    tables = [stencil(n, mu) for n in range(1, n_max + 1)]
    _require_q_max(cs, max(t.radius for t in tables))

    report = CumulantReport(CumulantReport.FDLD, mu, cs.L)
    ratio = cs.L / (2 * np.pi)
    for table in tables:
        logs, bad_q = _principal_logs(cs, table.radius)
        name = "C{}".format(table.n)
        if logs is None:
            reason = "logarithmic terms diverge: |Z_{}| below threshold".format(bad_q)
            report.invalidate(name, reason)
            report.invalidate("c{}".format(table.n), reason)
            continue
        reduced = _reduced(table, logs)
        report.set("c{}".format(table.n), reduced)
        report.set(name, ratio ** table.n * reduced)

    _fill_shape(report, n_max)
    if report.flags:
        Logger().warning("FDLD cumulants flagged invalid at mu={}: {}".format(mu, sorted(report.flags)))
    return report


def _fill_shape(report, n_max):
    """
    由 C2..C4 计算偏度与超额峰度, 未计算的阶跳过
    """
    if n_max < 3:
        return
    C2 = report.get("C2")
    if C2 is None or C2 <= 0:
        for name in ("skew", "kurtosis", "U4"):
            report.invalidate(name, "C2 not positive")
        return
    if report.is_valid("C3"):
        report.set("skew", report.get("C3") / C2 ** 1.5)
    else:
        report.invalidate("skew", "C3 invalid")
    if n_max < 4:
        return
    if report.is_valid("C4"):
        kurtosis = report.get("C4") / C2 ** 2
        report.set("kurtosis", kurtosis)
        report.set("U4", -kurtosis / 3)
    else:
        report.invalidate("kurtosis", "C4 invalid")
        report.invalidate("U4", "C4 invalid")


def reduced_cumulants(cs, mu, n_max=4):
    """
    无量纲约化累积量 c_n = i^{-n} sum_j c_j Log Z_j

    Parameters:
        cs - CharSeq
        mu - int
        n_max - int

    Returns:
        list, [c_1, ..., c_nmax]

    Raises:
        exceptions.LogDivergence - 所需 |Z_q| 低于阈值
        exceptions.InsufficientQMax - q_max 不足
    """
    tables = [stencil(n, mu) for n in range(1, n_max + 1)]
    radius = max(t.radius for t in tables)
    _require_q_max(cs, radius)
    logs, bad_q = _principal_logs(cs, radius)
    if logs is None:
        raise exceptions.LogDivergence("|Z_{}| = {:.3e}".format(bad_q, abs(cs.values[bad_q])))
    return [_reduced(table, logs) for table in tables]


def reference_kurtosis(kind):
    """
    参考分布的超额峰度

    Parameters:
        kind - str, Flat / RaisedCosine / Gaussian

    Returns:
        float
    """
    if kind not in _REFERENCE_KURTOSIS:
        raise exceptions.UnknownReference(repr(kind))
    return _REFERENCE_KURTOSIS[kind]


def analytic_char_seq(kind, L, q_max, j0=0):
    """
    解析特征序列: flat (Z_q = delta_q0), degenerate (|Z_1| = 1/2), point (粒子位于 j0)

    Returns:
        CharSeq, source 为 analytic
    """
    values = np.zeros(q_max + 1, dtype=complex)
    values[0] = 1.0
    if kind == "flat":
        pass
    elif kind == "degenerate":
        if q_max >= 1:
            values[1] = 0.5
    elif kind == "point":
        q = np.arange(q_max + 1)
        values = np.exp(2j * np.pi * q * j0 / L)
    else:
        raise exceptions.UnknownReference(repr(kind))
    return CharSeq(L, values, CharSeq.ANALYTIC)
