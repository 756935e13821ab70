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


class CharSeq(object):
    """
    离散特征序列 Z_q, q = 0..q_max, 负 q 由 Z_{-q} = conj(Z_q) 给出
    """

    SLATER = "slater"
    BLOCH = "bloch"
    ANALYTIC = "analytic"
    PATH = "path"

    def __init__(self, L, values, source):
        """
        Parameters:
            L - float, 长度尺度 (格点数 x l)
            values - array-like, complex Z_0..Z_qmax
            source - str, slater / bloch / analytic / path
        """
        self.L = L
        self.values = np.asarray(values, dtype=complex)
        self.source = source

    @property
    def q_max(self):
        return self.values.shape[0] - 1

    def at(self, q):
        """
        获取 Z_q, 支持负下标

        Parameters:
            q - int, |q| <= q_max

        Returns:
            complex
        """
        if q >= 0:
            return self.values[q]
        return np.conj(self.values[-q])

    def magnitudes(self):
        return np.abs(self.values)


class StencilTable(object):
    """
    中心差分模板: 导数阶 n, 精度 O(h^{2 mu}), 偏移 -radius..radius
    """

    def __init__(self, n, mu, coeffs):
        """
        Parameters:
            n - int, 导数阶
            mu - int, 精度阶
            coeffs - tuple of fractions.Fraction, 对应偏移 -radius..radius
        """
        self.n = n
        self.mu = mu
        self.coeffs = tuple(coeffs)
        self.radius = (len(self.coeffs) - 1) // 2
        self.offsets = tuple(range(-self.radius, self.radius + 1))
        self.float_coeffs = np.array([float(c) for c in self.coeffs])
        self.float_coeffs.setflags(write=False)

    @property
    def central(self):
        return self.coeffs[self.radius]

    def __repr__(self):
        return "StencilTable(n={}, mu={}, coeffs=[{}])".format(
            self.n, self.mu, ", ".join(str(c) for c in self.coeffs))


class CumulantReport(object):
    """
    矩/累积量报告, 无效项记录在 flags 中而不是抛异常
    """

    FDD = "FDD"
    FDLD = "FDLD"

    FIELDS = ("M2", "M4", "C1", "C2", "C3", "C4", "c1", "c2", "c3", "c4",
              "U4", "skew", "kurtosis")

    def __init__(self, scheme, mu, L):
        self.scheme = scheme
        self.mu = mu
        self.L = L
        self.values = dict.fromkeys(self.FIELDS)
        self.flags = {}

    def set(self, name, value):
        self.values[name] = value

    def invalidate(self, name, reason):
        self.values[name] = None
        self.flags[name] = reason

    def get(self, name):
        """
        获取字段值, 无效或未计算时返回 None
        """
        return self.values[name]

    def is_valid(self, name):
        return name not in self.flags and self.values[name] is not None

    def __getattr__(self, name):
        if name in CumulantReport.FIELDS:
            return self.__dict__["values"][name]
        raise AttributeError(name)
