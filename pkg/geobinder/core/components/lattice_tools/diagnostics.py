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

from core.components import exceptions
from core.components.logger import Logger
from core.components.config import Config
from core.components.lattice_tools import lattice_models
from core.components.lattice_tools import genfun_calculus
from core.components.lattice_tools import slater
from core.model.lattice_model import ModelMatrix
from core.model.result_model import FidelityPoint
from core.model.sequence_model import CumulantReport


def binder_u4(M2, M4):
    """
    几何 Binder 累积量 U4 = 1 - M4 / (3 M2^2), 同时给出超额峰度 M4 / M2^2 - 3 (= -3 U4)

    Parameters:
        M2, M4 - float, 中心矩

    Returns:
        (U4, kurtosis)

    Raises:
        exceptions.MomentsDegenerate - M2 <= 0
    """
    if not M2 > 0:
        raise exceptions.MomentsDegenerate("M2 = {!r}".format(M2))
    ratio = M4 / (3.0 * M2 ** 2)
    return 1.0 - ratio, 3.0 * ratio - 3.0


def fdd_report(cs, mu):
    """
    FDD 方案的矩报告, M2 非正时标记 U4 与峰度无效
    """
    M2, M4 = genfun_calculus.fdd_moments(cs, mu)
    report = CumulantReport(CumulantReport.FDD, mu, cs.L)
    report.set("M2", M2)
    report.set("M4", M4)
    try:
        U4, kurtosis = binder_u4(M2, M4)
    except exceptions.MomentsDegenerate as e:
        report.invalidate("U4", str(e))
        report.invalidate("kurtosis", str(e))
    else:
        report.set("U4", U4)
        report.set("kurtosis", kurtosis)
    return report


def u4_vs_order(cs, mu_list):
    """
    U4 随差分精度阶的变化

    Parameters:
        cs - CharSeq
        mu_list - iterable of int

    Returns:
        list, [(mu, U4), ...]
    """
    table = []
    for mu in mu_list:
        M2, M4 = genfun_calculus.fdd_moments(cs, mu)
        table.append((mu, binder_u4(M2, M4)[0]))
    return table


def _ground(model, N):
    if isinstance(model, ModelMatrix):
        spectrum = lattice_models.eigensolve(model)
    else:
        spectrum = lattice_models.eigensolve(lattice_models.build_model(model))
    try:
        state = lattice_models.occupy_ground(spectrum, N)
    except exceptions.DegeneracyTooDeep as e:
        raise exceptions.FidelityUndefined(str(e))
    if state.degenerate_flag:
        raise exceptions.FidelityUndefined("degenerate ground state")
    return state


def fidelity_susceptibility(family, W, delta=0.01, N=1):
    """
    chi_F = -ln|<Psi(W - delta)|Psi(W + delta)>| / (2 delta^2)

    先取模再取对数, 数值本征向量的相位任意

    Parameters:
        family - callable, W -> ModelSpec 或 ModelMatrix
        W - float, 参数值
        delta - float, 有限差分步长
        N - int, 粒子数

    Returns:
        FidelityPoint

    Raises:
        exceptions.FidelityUndefined - 任一端点基态简并
    """
    if not delta > 0:
        raise exceptions.DiagnosticsException("delta must be positive, got {!r}".format(delta))
    left = _ground(family(W - delta), N)
    right = _ground(family(W + delta), N)
    overlap = abs(slater.state_overlap(left, right))
    if overlap <= Config().get_config("numeric.overlap_floor"):
        Logger().warning("Zero ground-state overlap at W={}, delta={}".format(W, delta))
        return FidelityPoint(W, delta, float("inf"), overlap, divergent=True)
    chi_F = -np.log(overlap) / (2 * delta ** 2)
    return FidelityPoint(W, delta, float(chi_F), overlap)


def fit_power_law(xs, ys):
    """
    最小二乘拟合 y = A x^p (双对数坐标)

    Returns:
        (p, A)

    Raises:
        ValueError - 数据点少于两个或存在非正值
    """
    xs = np.asarray(xs, dtype=float)
    ys = np.asarray(ys, dtype=float)
    if xs.shape != ys.shape or xs.size < 2:
        raise ValueError("need at least two paired points")
    if np.any(xs <= 0) or np.any(ys <= 0):
        raise ValueError("power-law fit needs positive data")
    exponent, intercept = np.polyfit(np.log(xs), np.log(ys), 1)
    return float(exponent), float(np.exp(intercept))


def interior_local_maxima(xs, ys):
    """
    严格的内部局部极大值, 跳过无效点 (None / nan)

    Returns:
        list, [(x, y), ...]
    """
    points = [(x, y) for x, y in zip(xs, ys) if y is not None and np.isfinite(y)]
    maxima = []
    for i in range(1, len(points) - 1):
        if points[i][1] > points[i - 1][1] and points[i][1] > points[i + 1][1]:
            maxima.append(points[i])
    return maxima
