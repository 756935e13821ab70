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

from core.components import common
from core.components import exceptions
from core.components.logger import Logger
from core.components.config import Config
from core.model.sequence_model import CharSeq


def _weighted_determinant_sum(items):
    """
    计算 sum w_k det(M_k), 行列式以 (符号, log|det|) 形式合并, 避免 N 较大时下溢

    Parameters:
        items - list, 每项为 (complex 权重, N x N 矩阵)

    Returns:
        complex
    """
    signs = []
    logs = []
    for weight, matrix in items:
        sign, logabs = np.linalg.slogdet(matrix)
        if sign == 0 or weight == 0:
            continue
        signs.append(weight * sign)
        logs.append(logabs)
    if not logs:
        return 0j
    logs = np.array(logs)
    top = np.max(logs)
    return complex(np.exp(top) * np.sum(np.array(signs) * np.exp(logs - top)))


def _check_pair(a, b):
    if a.L != b.L or a.N != b.N:
        raise exceptions.StateMismatch("(L={}, N={}) vs (L={}, N={})".format(a.L, a.N, b.L, b.N))


def twist_expectation(state, q):
    """
    Z_q = <Psi| exp(i 2pi q X / L) |Psi>, q 可为任意整数

    Parameters:
        state - SlaterState
        q - int

    Returns:
        complex
    """
    phase = np.exp(2j * np.pi * q * np.arange(state.L) / state.L)
    items = []
    for coeff_r, orbitals_r in state.terms:
        bra = orbitals_r.conj().T
        for coeff_s, orbitals_s in state.terms:
            items.append((np.conj(coeff_r) * coeff_s, bra @ (phase[:, None] * orbitals_s)))
    return _weighted_determinant_sum(items)


def char_seq(state, q_max):
    """
    计算特征序列 Z_0..Z_qmax

    Parameters:
        state - SlaterState
        q_max - int, >= 1

    Returns:
        CharSeq, source 为 slater
    """
    if isinstance(q_max, bool) or not isinstance(q_max, (int, np.integer)) or q_max < 1:
        raise exceptions.ShiftOutOfRange("q_max must be >= 1, got {!r}".format(q_max))
    values = [twist_expectation(state, q) for q in range(q_max + 1)]
    Logger().debug("Char seq of L={}, N={}, terms={} up to q={}".format(
        state.L, state.N, len(state.terms), q_max))
    return CharSeq(state.L, values, CharSeq.SLATER)


def resta_polarization(cs):
    """
    单点 Berry 相位 gamma_R = Arg Z_1 与位置期望 <X> = L gamma_R / 2pi

    <X> 只在模 L 意义下确定, 这里取 (-L/2, L/2] 的代表元

    Parameters:
        cs - CharSeq

    Returns:
        (gamma_R, X), float

    Raises:
        exceptions.PolarizationUndefined - |Z_1| 低于阈值
    """
    z1 = cs.at(1)
    threshold = Config().get_config("numeric.polarization_threshold")
    if abs(z1) < threshold:
        raise exceptions.PolarizationUndefined("|Z_1| = {:.3e}".format(abs(z1)))
    gamma = common.principal_angle(z1)
    return gamma, cs.L * gamma / (2 * np.pi)


def state_overlap(a, b):
    """
    两个 Slater 态 (或二项叠加) 的内积 <a|b>

    Parameters:
        a, b - SlaterState

    Returns:
        complex

    Raises:
        exceptions.StateMismatch - L 或 N 不一致
    """
    _check_pair(a, b)
    items = []
    for coeff_a, orbitals_a in a.terms:
        bra = orbitals_a.conj().T
        for coeff_b, orbitals_b in b.terms:
            items.append((np.conj(coeff_a) * coeff_b, bra @ orbitals_b))
    return _weighted_determinant_sum(items)
