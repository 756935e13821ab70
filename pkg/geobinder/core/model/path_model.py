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


class StatePath(object):
    """
    离散参数路径上的归一化态 |Psi(xi_J)>, J = 0..M-1
    """

    CYCLIC = "Cyclic"
    SYMMETRY_CLOSED = "SymmetryClosed"

    def __init__(self, states, closure=CYCLIC, symmetry=None):
        """
        Parameters:
            states - array-like, M x d 复向量
            closure - str, Cyclic / SymmetryClosed
            symmetry - array-like, 长度 d 的对角幺正作用, SymmetryClosed 时必须给出
        """
        states = np.array(states, dtype=complex)
        if states.ndim != 2 or states.shape[0] < 2:
            raise exceptions.PathInvalid("need at least two states of equal length")
        norms = np.linalg.norm(states, axis=1)
        if np.max(np.abs(norms - 1.0)) > 1e-10:
            raise exceptions.PathInvalid("states must be normalized")
        if closure not in (self.CYCLIC, self.SYMMETRY_CLOSED):
            raise exceptions.PathInvalid("unknown closure {!r}".format(closure))
        if closure == self.SYMMETRY_CLOSED:
            if symmetry is None:
                raise exceptions.PathInvalid("SymmetryClosed path needs a symmetry action")
            symmetry = np.asarray(symmetry, dtype=complex)
            if symmetry.shape != (states.shape[1],) or \
                    np.max(np.abs(np.abs(symmetry) - 1.0)) > 1e-12:
                raise exceptions.PathInvalid("symmetry must be a diagonal of unit phases")

        self.states = states
        self.closure = closure
        self.symmetry = symmetry

    @property
    def M(self):
        return self.states.shape[0]

    def ket(self, index):
        """
        获取下标 index 处的态, 越界时按闭合方式拉回

        Parameters:
            index - int, 0 <= index

        Returns:
            array, 复向量
        """
        wraps, stored = divmod(index, self.M)
        state = self.states[stored]
        if wraps and self.closure == self.SYMMETRY_CLOSED:
            state = state * self.symmetry ** wraps
        return state


class BlochBand(object):
    """
    SSH 下能带的周期规范 Bloch 二分量向量

    embedding 为 site 时两个轨道位于 x_A = 0, x_B = 1 (元胞长度 2),
    与实空间扭转算符一致; 为 cell 时两个轨道都放在元胞原点.
    """

    SITE = "site"
    CELL = "cell"

    CELL_LENGTH = 2.0

    def __init__(self, J_o, J_e, n_cells, embedding=SITE):
        if n_cells < 2:
            raise exceptions.ModelSpecInvalid("Bloch band needs at least two cells")
        if embedding not in (self.SITE, self.CELL):
            raise exceptions.ModelSpecInvalid("unknown embedding {!r}".format(embedding))
        self.J_o = J_o
        self.J_e = J_e
        self.n_cells = n_cells
        self.embedding = embedding

        if embedding == self.SITE:
            self.positions = np.array([0.0, 1.0])
        else:
            self.positions = np.array([0.0, 0.0])
        self.k_points = 2 * np.pi * np.arange(n_cells) / (n_cells * self.CELL_LENGTH)
        self.u = np.array([self._lower_band_vector(k) for k in self.k_points])

    @property
    def L(self):
        return self.n_cells * self.CELL_LENGTH

    @property
    def dk(self):
        return 2 * np.pi / self.L

    def _lower_band_vector(self, k):
        """
        2x2 Bloch 哈密顿量 [[0, g], [g*, 0]] 的下能带向量, 第一个分量取正实数
        """
        d = self.positions[1] - self.positions[0]
        g = -(self.J_o * np.exp(1j * k * d) +
              self.J_e * np.exp(1j * k * (d - self.CELL_LENGTH)))
        if abs(g) == 0.0:
            # 恰好闭隙的 k 点, 取对称组合
            return np.array([1.0, 1.0], dtype=complex) / np.sqrt(2)
        return np.array([1.0, -np.conj(g) / abs(g)], dtype=complex) / np.sqrt(2)

    def symmetry(self):
        """
        k -> k + 2pi/l_cell 的拉回相位 exp(-i 2pi x / l_cell)
        """
        return np.exp(-2j * np.pi * self.positions / self.CELL_LENGTH)

    def as_path(self):
        """
        转换为 SymmetryClosed 的 StatePath
        """
        return StatePath(self.u, StatePath.SYMMETRY_CLOSED, self.symmetry())
