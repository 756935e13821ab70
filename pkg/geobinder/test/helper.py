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

from core.model.path_model import StatePath
from core.model.sequence_model import CharSeq
from core.model.lattice_model import SlaterState


def random_char_seq(rng, q_max, L=2 * np.pi):
    """
    随机合法特征序列: Z_0 = 1, 其余模长在 [0.1, 1) 内, 辐角均匀

    Parameters:
        rng - np.random.RandomState
        q_max - int
        L - float, 默认 2pi 使 L/2pi = 1
    """
    magnitudes = rng.uniform(0.1, 1.0, q_max)
    phases = rng.uniform(-np.pi * 0.99, np.pi * 0.99, q_max)
    values = np.concatenate([[1.0], magnitudes * np.exp(1j * phases)])
    return CharSeq(L, values, CharSeq.ANALYTIC)


def first_order_cumulants(cs):
    """
    mu = 1 时 C1..C4 的闭式
    """
    L = cs.L
    log1 = np.log(cs.values[1])
    log2 = np.log(cs.values[2])
    C1 = L / (2 * np.pi) * log1.imag
    C2 = -L ** 2 / (2 * np.pi ** 2) * log1.real
    C3 = -L ** 3 / (8 * np.pi ** 3) * (log2.imag - 2 * log1.imag)
    C4 = L ** 4 / (8 * np.pi ** 4) * (log2.real - 4 * log1.real)
    return C1, C2, C3, C4


def second_order_moments(cs):
    """
    mu = 2 时 M2, M4 的闭式
    """
    z1, z2, z3 = (abs(cs.values[q]) for q in (1, 2, 3))
    scale2 = (cs.L / (2 * np.pi)) ** 2
    M2 = scale2 * (z2 - 16 * z1 + 15) / 6
    M4 = scale2 ** 2 * (-z3 + 12 * z2 - 39 * z1 + 28) / 3
    return M2, M4


def pinned_state(L, j0):
    """
    单粒子完全局域在格点 j0 上
    """
    orbital = np.zeros((L, 1))
    orbital[j0, 0] = 1.0
    return SlaterState(L, 1, [(1.0, orbital)])


def random_path(rng, M, dim):
    states = rng.normal(size=(M, dim)) + 1j * rng.normal(size=(M, dim))
    states /= np.linalg.norm(states, axis=1)[:, None]
    return StatePath(states, StatePath.CYCLIC)


def two_level_chi_F(W):
    """
    H(W) = W sigma_z + sigma_x 的解析保真度磁化率
    """
    return 0.25 / (1 + W ** 2) ** 2


def phase_distance(a, b):
    """
    两个相位模 2pi 的距离
    """
    d = np.mod(a - b, 2 * np.pi)
    return min(d, 2 * np.pi - d)
