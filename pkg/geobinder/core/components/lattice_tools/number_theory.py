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

from core.components import exceptions
from core.components.config import Config
from core.model.result_model import ZeckendorfDecomposition, FillingReport

GOLDEN_RATIO = (1 + math.sqrt(5)) / 2


def fibonacci(n):
    """
    第 n 个 Fibonacci 数, F_1 = F_2 = 1, 使用 python 整数, 不会溢出

    Parameters:
        n - int, >= 1

    Returns:
        int

    Raises:
        exceptions.FibonacciIndexInvalid - n < 1
    """
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise exceptions.FibonacciIndexInvalid("got {!r}".format(n))
    prev, cur = 0, 1
    for _ in range(n - 1):
        prev, cur = cur, prev + cur
    return cur


def fibonacci_index(value):
    """
    求 value = F_n 的下标 n (取 n >= 2 中最小者, 1 返回 2)

    Parameters:
        value - int

    Returns:
        int, value 不是 Fibonacci 数时返回 None
    """
    if value < 1:
        return None
    n = 2
    prev, cur = 1, 1
    while cur < value:
        prev, cur = cur, prev + cur
        n += 1
    if cur == value:
        return n
    return None


def zeckendorf(N):
    """
    贪心求 Zeckendorf 分解, 下标取 >= 2 (1 记为 F_2)

    Parameters:
        N - int, >= 1

    Returns:
        ZeckendorfDecomposition

    Raises:
        exceptions.FillingInvalid - N < 1
    """
    if isinstance(N, bool) or not isinstance(N, int) or N < 1:
        raise exceptions.FillingInvalid("cannot decompose {!r}".format(N))

    table = [(2, 1)]
    while table[-1][1] <= N:
        index = table[-1][0] + 1
        table.append((index, fibonacci(index)))

    indices = []
    values = []
    rest = N
    for index, value in reversed(table):
        if value <= rest:
            indices.append(index)
            values.append(value)
            rest -= value
            if rest == 0:
                break
    return ZeckendorfDecomposition(N, indices, values)


def ratio_limit(m, n):
    """
    F_{m+s}/F_{n+s} 在 s -> inf 时的极限 phi^{m-n}
    """
    return GOLDEN_RATIO ** (m - n)


def shifted_ratio(m, n, s):
    """
    下标平移后的比值 F_{m+s}/F_{n+s}, 用于估计无理极限

    Returns:
        float
    """
    return fibonacci(m + s) / fibonacci(n + s)


def classify_filling(N, L):
    """
    按 Zeckendorf 分解将 AA 填充分为 "好" (所有 W 均局域) 与 "坏" (W/t ~ 2 处有转变)

    Parameters:
        N - int, 粒子数, 1 <= N < L
        L - int, Fibonacci 数 F_n

    Returns:
        FillingReport

    Raises:
        exceptions.NotFibonacci - L 不是 Fibonacci 数
        exceptions.FillingInvalid - N 超出范围
    """
    fib_index = fibonacci_index(L)
    if fib_index is None or L < 2:
        raise exceptions.NotFibonacci("L = {}".format(L))
    if not 1 <= N < L:
        raise exceptions.FillingInvalid("N = {}, L = {}".format(N, L))

    threshold = Config().get_config("filling.small_value_threshold")
    shift = Config().get_config("filling.limit_shift")

    decomposition = zeckendorf(N)
    terms = []
    bad = False
    for index, value in decomposition:
        if value <= threshold:
            bad = True
        terms.append({
            "index": index,
            "value": value,
            "ratio": value / L,
            "shift": shift,
            "shifted_ratio": shifted_ratio(index, fib_index, shift),
            "limit": ratio_limit(index, fib_index)
        })

    if bad:
        verdict = FillingReport.TRANSITION_NEAR_WC2
    else:
        verdict = FillingReport.LOCALIZED_FOR_ALL_W
    return FillingReport(N, L, fib_index, decomposition, verdict, terms)


def opposite_parity_half_filling(L):
    """
    与 L 奇偶性相反的最近半填充粒子数
    """
    N = L // 2
    if N % 2 == L % 2:
        N -= 1
    return N
