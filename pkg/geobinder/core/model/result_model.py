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


class FidelityPoint(object):
    """
    单个参数点的保真度磁化率
    """

    def __init__(self, W, delta, chi_F, overlap, divergent=False):
        """
        Parameters:
            W - float, 参数值 (以 t 为单位)
            delta - float, 有限差分步长
            chi_F - float, 保真度磁化率, divergent 时为 inf
            overlap - float, 使用的重叠模长
            divergent - bool, 重叠为零时置位
        """
        self.W = W
        self.delta = delta
        self.chi_F = chi_F
        self.overlap = overlap
        self.divergent = divergent

    def to_dict(self):
        return {
            "W": self.W,
            "delta": self.delta,
            "chi_F": self.chi_F,
            "overlap": self.overlap,
            "divergent": self.divergent
        }


class ZeckendorfDecomposition(object):
    """
    N = sum F_{I_m}, 下标严格递减且相邻下标差 >= 2
    """

    def __init__(self, N, indices, values):
        self.N = N
        self.indices = tuple(indices)
        self.values = tuple(values)

    @property
    def M(self):
        return len(self.indices)

    def __iter__(self):
        return iter(zip(self.indices, self.values))

    def __repr__(self):
        return "{} = {}".format(self.N, " + ".join(str(v) for v in self.values))


class FillingReport(object):
    """
    填充分类结果
    """

    LOCALIZED_FOR_ALL_W = "LocalizedForAllW"
    TRANSITION_NEAR_WC2 = "TransitionNearWc2"

    def __init__(self, N, L, fib_index, decomposition, verdict, terms):
        """
        Parameters:
            N - int, 粒子数
            L - int, 格点数 F_n
            fib_index - int, n
            decomposition - ZeckendorfDecomposition
            verdict - str, LocalizedForAllW / TransitionNearWc2
            terms - list, 每项为 dict: index, value, ratio, shift, shifted_ratio, limit
        """
        self.N = N
        self.L = L
        self.fib_index = fib_index
        self.decomposition = decomposition
        self.verdict = verdict
        self.terms = terms

    @property
    def is_good(self):
        return self.verdict == self.LOCALIZED_FOR_ALL_W

    def to_dict(self):
        return {
            "N": self.N,
            "L": self.L,
            "fib_index": self.fib_index,
            "decomposition": list(self.decomposition.values),
            "verdict": self.verdict,
            "terms": self.terms
        }


class ScanRow(object):
    """
    扫描结果中的一行, 按插件声明的列顺序输出

    values 中缺失或为 None 的列按无效数据处理, error 记录该网格点的异常信息
    """

    def __init__(self, index, values, error=None, warning=None):
        self.index = index
        self.values = values
        self.error = error
        self.warning = warning

    @property
    def failed(self):
        return self.error is not None

    def cells(self, columns):
        """
        按列顺序取值

        Parameters:
            columns - list, 列名

        Returns:
            list
        """
        return [self.values.get(name) for name in columns]
