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

import time

import numpy as np
import scipy.linalg

from core.components import exceptions
from core.components.logger import Logger
from core.components.config import Config
from core.components.lattice_tools import number_theory
from core.model.lattice_model import ModelSpec, ModelMatrix, Spectrum, SlaterState

NUMERIC = "Numeric"
PLANE_WAVE = "PlaneWave"


def _check_size(L, minimum=2):
    if isinstance(L, bool) or not isinstance(L, (int, np.integer)) or L < minimum:
        raise exceptions.ModelSpecInvalid("site count must be an integer >= {}, got {!r}".format(minimum, L))


def _resolve_aubry_andre(spec):
    """
    由 fib_index 或 L 确定 AA 尺寸, 并记录 alpha = F_{n+1}/F_n
    """
    if spec.fib_index is not None:
        if spec.fib_index < 3:
            raise exceptions.NotFibonacci("fib_index {} gives fewer than two sites".format(spec.fib_index))
        L = number_theory.fibonacci(spec.fib_index)
        if spec.L is not None and spec.L != L:
            raise exceptions.NotFibonacci("L = {} does not match F_{} = {}".format(spec.L, spec.fib_index, L))
        fib_index = spec.fib_index
    else:
        if spec.L is None:
            raise exceptions.ModelSpecInvalid("AubryAndre needs fib_index or L")
        _check_size(spec.L)
        fib_index = number_theory.fibonacci_index(spec.L)
        if fib_index is None:
            raise exceptions.NotFibonacci("L = {}".format(spec.L))
        L = spec.L
    spec.L = L
    spec.fib_index = fib_index
    spec.set_alpha(number_theory.fibonacci(fib_index + 1), L)
    return L


def build_model(spec):
    """
    构造一维紧束缚哈密顿量矩阵, 近邻键取 -amp, 周期边界时加入角上耦合

    Parameters:
        spec - ModelSpec

    Returns:
        ModelMatrix

    Raises:
        exceptions.ModelSpecInvalid - 参数非法
        exceptions.NotFibonacci - AA 尺寸不是 Fibonacci 数
        exceptions.OddSSHLength - SSH 格点数为奇数
    """
    if spec.kind not in ModelSpec.KINDS:
        raise exceptions.ModelSpecInvalid("unknown kind {!r}".format(spec.kind))
    if spec.bc not in ModelSpec.BOUNDARIES:
        raise exceptions.ModelSpecInvalid("unknown boundary {!r}".format(spec.bc))

    if spec.kind == ModelSpec.AUBRY_ANDRE:
        L = _resolve_aubry_andre(spec)
    else:
        _check_size(spec.L)
        L = spec.L

    if spec.kind == ModelSpec.SSH:
        if L % 2 != 0:
            raise exceptions.OddSSHLength("L = {}".format(L))
        if spec.J_o is None or spec.J_e is None:
            raise exceptions.ModelSpecInvalid("SSH needs both J_o and J_e")
        bonds = np.where(np.arange(L - 1) % 2 == 0, spec.J_o, spec.J_e).astype(float)
        corner = spec.J_e
    else:
        bonds = np.full(L - 1, float(spec.t))
        corner = spec.t

    entries = np.zeros((L, L))
    j = np.arange(L - 1)
    entries[j, j + 1] = -bonds
    entries[j + 1, j] = -bonds
    if spec.bc == ModelSpec.PERIODIC:
        # L = 2 时角上耦合与唯一的键重合, 叠加
        entries[0, L - 1] += -corner
        entries[L - 1, 0] += -corner

    if spec.kind == ModelSpec.AUBRY_ANDRE:
        numerator, denominator = spec.alpha.numerator, spec.alpha.denominator
        sites = np.arange(L)
        # 用整数取模保证势能严格以 L 为周期
        reduced = (numerator * sites) % denominator
        entries[sites, sites] = spec.W * np.cos(2 * np.pi * reduced / denominator + spec.phase_offset)

    return ModelMatrix(entries, spec)


def eigensolve(m):
    """
    稠密实对称矩阵的完整本征分解

    Parameters:
        m - ModelMatrix

    Returns:
        Spectrum, 本征值升序

    Raises:
        exceptions.EigenNotConverged - LAPACK 未收敛或残差超限
    """
    start = time.time()
    driver = Config().get_config("eigen.driver")
    try:
        eigenvalues, eigenvectors = scipy.linalg.eigh(m.entries, driver=driver)
    except scipy.linalg.LinAlgError as e:
        raise exceptions.EigenNotConverged(float("nan"), str(e))

    residual = 0.0
    if Config().get_config("eigen.check_residual"):
        defect = m.entries @ eigenvectors - eigenvectors * eigenvalues[None, :]
        residual = float(np.max(np.linalg.norm(defect, axis=0)))
        scale = max(1.0, float(np.max(np.abs(eigenvalues))))
        if residual > Config().get_config("numeric.residual_tol") * scale:
            raise exceptions.EigenNotConverged(residual, "driver {}".format(driver))

    Logger().debug("Eigensolve of dim {} with driver {} took {:.3f}s, residual {:.3e}".format(
        m.dim, driver, time.time() - start, residual))
    return Spectrum(eigenvalues, eigenvectors, residual, m.spec)


def _is_uniform_periodic(spec):
    return spec is not None and spec.kind == ModelSpec.UNIFORM_CHAIN and spec.bc == ModelSpec.PERIODIC


def _check_parity_rule(spec, N, degenerate):
    """
    均匀周期链: 文献规则认为 N 与 L 同奇偶时基态非简并, 与谱判定不一致时记录
    """
    if not _is_uniform_periodic(spec):
        return
    rule_non_degenerate = (N % 2) == (spec.L % 2)
    if rule_non_degenerate == degenerate:
        Logger().warning("Parity rule disagrees with spectral detection for L={}, N={}: "
                         "spectrum says {}".format(spec.L, N, "degenerate" if degenerate else "non-degenerate"))


def _two_term_state(L, N, closed, frontier_a, frontier_b):
    weight = 1 / np.sqrt(2)
    terms = [
        (weight, np.column_stack([closed, frontier_a])),
        (weight, np.column_stack([closed, frontier_b]))
    ]
    return SlaterState(L, N, terms, degenerate_flag=True)


def _numeric_ground(s, N):
    energies = s.eigenvalues
    vectors = s.eigenvectors
    L = s.dim
    if N == L:
        return SlaterState(L, N, [(1.0, vectors)])

    tol = Config().get_config("numeric.degeneracy_tol") * max(1.0, s.width)
    if energies[N] - energies[N - 1] >= tol:
        return SlaterState(L, N, [(1.0, vectors[:, :N])])

    cluster = np.nonzero(np.abs(energies - energies[N - 1]) < tol)[0]
    low, high = int(cluster[0]), int(cluster[-1])
    size = high - low + 1
    occupied_in_cluster = N - low
    if size != 2 or occupied_in_cluster != 1:
        raise exceptions.DegeneracyTooDeep(
            "{} levels at the Fermi energy hold {} particles".format(size, occupied_in_cluster))
    return _two_term_state(L, N, vectors[:, :N - 1], vectors[:, N - 1], vectors[:, N])


def _plane_wave_ground(spec, N):
    """
    解析平面波轨道 e^{i 2pi m x/L}/sqrt(L), 按 |m| 壳层能量从低到高填充
    """
    if not _is_uniform_periodic(spec) or spec.t == 0:
        raise exceptions.ModelSpecInvalid("PlaneWave mode needs a periodic uniform chain with t != 0")
    L = spec.L
    x = np.arange(L)

    def orbital(m):
        return np.exp(2j * np.pi * m * x / L) / np.sqrt(L)

    shells = {}
    for m in range(-((L - 1) // 2), L // 2 + 1):
        shells.setdefault(abs(m), []).append(m)
    order = sorted(shells, key=lambda k: (-2 * spec.t * np.cos(2 * np.pi * k / L), k))

    occupied = []
    for k in order:
        members = sorted(shells[k], reverse=True)
        missing = N - len(occupied)
        if missing == 0:
            break
        if missing >= len(members):
            occupied.extend(members)
            continue
        if len(members) != 2 or missing != 1:
            raise exceptions.DegeneracyTooDeep("shell |m| = {}".format(k))
        closed = np.column_stack([orbital(m) for m in occupied]) if occupied else np.zeros((L, 0))
        return _two_term_state(L, N, closed, orbital(members[0]), orbital(members[1]))

    return SlaterState(L, N, [(1.0, np.column_stack([orbital(m) for m in occupied]))])


def occupy_ground(s, N, mode=NUMERIC):
    """
    占据 N 个最低单粒子轨道构造基态, 费米面二重简并时返回等权叠加

    Parameters:
        s - Spectrum
        N - int, 粒子数, 1 <= N <= dim
        mode - str, Numeric / PlaneWave

    Returns:
        SlaterState

    Raises:
        exceptions.ParticleNumberInvalid - N 超出范围
        exceptions.DegeneracyTooDeep - 费米面简并度超过二
        exceptions.ModelSpecInvalid - PlaneWave 用于非均匀周期链
    """
    if isinstance(N, bool) or not isinstance(N, (int, np.integer)) or not 1 <= N <= s.dim:
        raise exceptions.ParticleNumberInvalid("N = {!r}, dim = {}".format(N, s.dim))
    if mode == NUMERIC:
        state = _numeric_ground(s, int(N))
    elif mode == PLANE_WAVE:
        state = _plane_wave_ground(s.spec, int(N))
    else:
        raise exceptions.ModelSpecInvalid("unknown occupation mode {!r}".format(mode))
    _check_parity_rule(s.spec, N, state.degenerate_flag)
    return state


def ground_state(spec, N, mode=NUMERIC):
    """
    build_model -> eigensolve -> occupy_ground 的便捷组合
    """
    return occupy_ground(eigensolve(build_model(spec)), N, mode)


def obc_position_moments(s, N):
    """
    开边界下占据轨道位置分布的中心矩, x_j = j + 1

    Parameters:
        s - Spectrum, 开边界模型
        N - int, 粒子数

    Returns:
        (M2, M4), float
    """
    if s.spec is not None and s.spec.bc != ModelSpec.OPEN:
        raise exceptions.ModelSpecInvalid("position moments need open boundaries")
    if isinstance(N, bool) or not isinstance(N, (int, np.integer)) or not 1 <= N <= s.dim:
        raise exceptions.ParticleNumberInvalid("N = {!r}, dim = {}".format(N, s.dim))

    x = np.arange(1, s.dim + 1, dtype=float)
    density = np.sum(np.abs(s.eigenvectors[:, :N]) ** 2, axis=1) / N
    mean = float(np.dot(x, density))
    shifted = x - mean
    M2 = float(np.dot(shifted ** 2, density))
    M4 = float(np.dot(shifted ** 4, density))
    return M2, M4
