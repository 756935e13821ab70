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
from core.components.lattice_tools import genfun_calculus
from core.model.path_model import StatePath
from core.model.sequence_model import CharSeq


def _links(path, q):
    """
    <Psi_J | Psi_{J+q}>, J = 0..M-1, 越界的 ket 按闭合方式拉回
    """
    if isinstance(q, bool) or not isinstance(q, (int, np.integer)) or not 0 <= q < path.M:
        raise exceptions.ShiftOutOfRange("q = {!r}, M = {}".format(q, path.M))
    return np.array([np.vdot(path.ket(J), path.ket(J + q)) for J in range(path.M)])


def gamma_q(path, q):
    """
    扩展 Bargmann 不变量 Gamma_q = prod_J <Psi_J | Psi_{J+q}>

    Parameters:
        path - StatePath
        q - int, 0 <= q < M

    Returns:
        complex

    Raises:
        exceptions.ShiftOutOfRange - q 越界
    """
    product = 1 + 0j
    # 固定顺序相乘, 保证结果可复现
    for link in _links(path, q):
        product *= link
    return complex(product)


def discrete_berry_phase(path):
    """
    离散 Berry 相位 Im Log Gamma_1, 取 (-pi, pi]

    逐个累加链接的辐角, 长路径上链接乘积下溢时结果仍然有效

    Raises:
        exceptions.DegeneracyCrossed - 路径上存在零重叠
    """
    links = _links(path, 1)
    threshold = Config().get_config("numeric.link_threshold")
    magnitudes = np.abs(links)
    weakest = int(np.argmin(magnitudes))
    if magnitudes[weakest] < threshold:
        raise exceptions.DegeneracyCrossed("link {} -> {} has magnitude {:.3e}".format(
            weakest, (weakest + 1) % path.M, magnitudes[weakest]))
    return common.wrap_phase(float(np.sum(np.angle(links))))


def two_level_path(M, center=(0.0, 0.0), radii=(1.0, 1.0)):
    """
    H(theta) = h_z sigma_z + h_x sigma_x 沿椭圆 h = center + (r_z cos theta, r_x sin theta) 的基态路径

    Parameters:
        M - int, 路径点数
        center - (c_z, c_x)
        radii - (r_z, r_x), r_x = 0 时路径穿过简并点

    Returns:
        StatePath, Cyclic
    """
    if M < 2:
        raise exceptions.PathInvalid("M = {}".format(M))
    theta = 2 * np.pi * np.arange(M) / M
    h_z = center[0] + radii[0] * np.cos(theta)
    h_x = center[1] + radii[1] * np.sin(theta)
    phi = np.arctan2(h_x, h_z)
    states = np.column_stack([-np.sin(phi / 2), np.cos(phi / 2)]).astype(complex)
    return StatePath(states, StatePath.CYCLIC)


def path_char_seq(path, q_max):
    """
    将 Gamma_0..Gamma_qmax 视为特征序列, 长度尺度 L = M
    """
    values = [gamma_q(path, q) for q in range(q_max + 1)]
    return CharSeq(path.M, values, CharSeq.PATH)


def bloch_char_seq(band, q_max):
    """
    Bloch 向量的 Zak 型乘积给出 Z_q, L = N_c * l_cell

    Parameters:
        band - BlochBand
        q_max - int, < N_c

    Returns:
        CharSeq, source 为 bloch
    """
    path = band.as_path()
    values = [gamma_q(path, q) for q in range(q_max + 1)]
    return CharSeq(band.L, values, CharSeq.BLOCH)


def swm_discrete_cumulants(band, n_max=4, mu=1):
    """
    规范不变累积量的格点估计 c_n / dk^{n-1}, 其中 dk = 2pi / (N_c l_cell); n = 1 时即 Zak 相位

    Parameters:
        band - BlochBand
        n_max - int, <= 4
        mu - int, 差分精度阶

    Returns:
        list, [C_1, ..., C_nmax]

    Raises:
        exceptions.GaplessBand - 相邻 k 点重叠低于阈值
    """
    path = band.as_path()
    weakest = float(np.min(np.abs(_links(path, 1))))
    if weakest < Config().get_config("numeric.link_threshold"):
        raise exceptions.GaplessBand("min link {:.3e} at J_o={}, J_e={}".format(weakest, band.J_o, band.J_e))

    radius = max(genfun_calculus.stencil_radius(n, mu) for n in range(1, n_max + 1))
    cs = bloch_char_seq(band, radius)
    try:
        reduced = genfun_calculus.reduced_cumulants(cs, mu, n_max)
    except exceptions.LogDivergence as e:
        raise exceptions.GaplessBand(str(e))
    Logger().debug("SWM cumulants for N_c={} with mu={}".format(band.n_cells, mu))
    return [c / band.dk ** (n - 1) for n, c in enumerate(reduced, start=1)]
