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

import numpy as np

from core.components import exceptions


class ModelSpec(object):
    """
    一维紧束缚模型描述, 晶格常数 l = 1
    """

    UNIFORM_CHAIN = "UniformChain"
    SSH = "SSH"
    AUBRY_ANDRE = "AubryAndre"
    KINDS = (UNIFORM_CHAIN, SSH, AUBRY_ANDRE)

    OPEN = "Open"
    PERIODIC = "Periodic"
    BOUNDARIES = (OPEN, PERIODIC)

    def __init__(self, kind, L=None, bc=PERIODIC, t=1.0, J_o=None, J_e=None,
                 W=0.0, fib_index=None, phase_offset=0.0):
        """
        初始化, 不做校验, 校验在 build_model 中进行

        Parameters:
            kind - str, UniformChain / SSH / AubryAndre
            L - int, 格点数; AubryAndre 给定 fib_index 时可为 None
            bc - str, Open / Periodic
            t - float, 跃迁能量
            J_o, J_e - float, SSH 奇/偶键跃迁
            W - float, AA 势强度
            fib_index - int, AA 尺寸下标 n, L = F_n, alpha = F_{n+1}/F_n
            phase_offset - float, AA 势的相位
        """
        self.kind = kind
        self.L = L
        self.bc = bc
        self.t = t
        self.J_o = J_o
        self.J_e = J_e
        self.W = W
        self.fib_index = fib_index
        self.phase_offset = phase_offset
        self.alpha = None

    @classmethod
    def uniform_chain(cls, L, bc=PERIODIC, t=1.0):
        return cls(cls.UNIFORM_CHAIN, L=L, bc=bc, t=t)

    @classmethod
    def ssh(cls, L, J_o, J_e, bc=PERIODIC):
        return cls(cls.SSH, L=L, bc=bc, J_o=J_o, J_e=J_e)

    @classmethod
    def ssh_from_mean(cls, L, J_mean, delta_J, bc=PERIODIC):
        """
        以平均跃迁和交替量构造 SSH: J_o = J_mean + delta_J, J_e = J_mean - delta_J
        """
        return cls.ssh(L, J_mean + delta_J, J_mean - delta_J, bc=bc)

    @classmethod
    def aubry_andre(cls, fib_index, W, t=1.0, bc=PERIODIC, phase_offset=0.0):
        return cls(cls.AUBRY_ANDRE, bc=bc, t=t, W=W, fib_index=fib_index,
                   phase_offset=phase_offset)

    @property
    def J_mean(self):
        return (self.J_o + self.J_e) / 2.0

    @property
    def delta_J(self):
        return (self.J_o - self.J_e) / 2.0

    def set_alpha(self, numerator, denominator):
        self.alpha = fractions.Fraction(numerator, denominator)

    def to_dict(self):
        return {
            "kind": self.kind,
            "L": self.L,
            "bc": self.bc,
            "t": self.t,
            "J_o": self.J_o,
            "J_e": self.J_e,
            "W": self.W,
            "fib_index": self.fib_index,
            "phase_offset": self.phase_offset
        }

    def __repr__(self):
        return "ModelSpec({})".format(
            ", ".join("{}={!r}".format(k, v) for k, v in self.to_dict().items() if v is not None))


class ModelMatrix(object):
    """
    单粒子哈密顿量的稠密实对称矩阵
    """

    def __init__(self, entries, spec=None):
        entries = np.asarray(entries, dtype=float)
        if entries.ndim != 2 or entries.shape[0] != entries.shape[1]:
            raise exceptions.ModelSpecInvalid("model matrix must be square")
        if not np.array_equal(entries, entries.T):
            raise exceptions.ModelSpecInvalid("model matrix must be exactly symmetric")
        self.entries = entries
        self.dim = entries.shape[0]
        self.spec = spec


class Spectrum(object):
    """
    本征值升序排列, eigenvectors 的列与本征值一一对应
    """

    def __init__(self, eigenvalues, eigenvectors, residual_bound=0.0, spec=None):
        self.eigenvalues = np.asarray(eigenvalues, dtype=float)
        self.eigenvectors = np.asarray(eigenvectors)
        self.residual_bound = residual_bound
        self.spec = spec

    @property
    def dim(self):
        return self.eigenvalues.shape[0]

    @property
    def width(self):
        return float(self.eigenvalues[-1] - self.eigenvalues[0])


class SlaterState(object):
    """
    自由费米子基态: 一个或两个 (系数, 占据轨道矩阵 L x N) 的叠加
    """

    def __init__(self, L, N, terms, degenerate_flag=False):
        if len(terms) not in (1, 2):
            raise exceptions.StateMismatch("a state holds one or two determinants")
        if len(terms) == 2 and not degenerate_flag:
            raise exceptions.StateMismatch("two determinants require degenerate_flag")
        checked = []
        for coeff, orbitals in terms:
            orbitals = np.asarray(orbitals)
            if orbitals.shape != (L, N):
                raise exceptions.StateMismatch(
                    "orbital block shape {} differs from ({}, {})".format(orbitals.shape, L, N))
            checked.append((complex(coeff), orbitals))
        norm = sum(abs(coeff) ** 2 for coeff, _ in checked)
        if abs(norm - 1.0) > 1e-10:
            raise exceptions.StateMismatch("coefficients are not normalized: {!r}".format(norm))

        self.L = L
        self.N = N
        self.terms = checked
        self.degenerate_flag = degenerate_flag

    @property
    def coefficients(self):
        return [coeff for coeff, _ in self.terms]

    def rephased(self, phases):
        """
        返回每个占据轨道乘以相位后的新态, 用于规范不变性检查

        Parameters:
            phases - array, 长度 N 的单位复数

        Returns:
            SlaterState
        """
        phases = np.asarray(phases)
        terms = [(coeff, orbitals * phases[None, :]) for coeff, orbitals in self.terms]
        return SlaterState(self.L, self.N, terms, self.degenerate_flag)
