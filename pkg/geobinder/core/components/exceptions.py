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


def _with_detail(message, detail):
    if detail:
        return "{}: {}".format(message, detail)
    return message


class GeoException(Exception):
    pass


# normal exception 此类为调用时的预期异常，应当被正确捕获并处理
class GeoExpectedException(GeoException):
    pass


# Fatal error 此类异常表示无法正常运行当前逻辑，通常意味着错误的使用了某些方法或产生了未知错误
class GeoFatalError(GeoException):
    pass


# ModelException
class ModelException(GeoException):
    pass


class ModelSpecInvalid(ModelException, GeoExpectedException):
    def __init__(self, detail=""):
        message = "Model spec is invalid"
        super().__init__(_with_detail(message, detail))


class NotFibonacci(ModelException, GeoExpectedException):
    def __init__(self, detail=""):
        message = "Aubry-Andre size must be a Fibonacci number"
        super().__init__(_with_detail(message, detail))


class OddSSHLength(ModelException, GeoExpectedException):
    def __init__(self, detail=""):
        message = "SSH chain needs an even site count (two sites per cell)"
        super().__init__(_with_detail(message, detail))


class EigenNotConverged(ModelException, GeoFatalError):
    def __init__(self, residual, detail=""):
        self.residual = residual
        message = "Eigensolver did not converge, achieved residual {!r}".format(residual)
        super().__init__(_with_detail(message, detail))


class ParticleNumberInvalid(ModelException, GeoExpectedException):
    def __init__(self, detail=""):
        message = "Particle number out of range"
        super().__init__(_with_detail(message, detail))


class DegeneracyTooDeep(ModelException, GeoExpectedException):
    def __init__(self, detail=""):
        message = "Ground state degeneracy deeper than two-fold at the Fermi level"
        super().__init__(_with_detail(message, detail))


# SlaterException
class SlaterException(GeoException):
    pass


class StateMismatch(SlaterException, GeoExpectedException):
    def __init__(self, detail=""):
        message = "Slater states have mismatched dimensions"
        super().__init__(_with_detail(message, detail))


class PolarizationUndefined(SlaterException, GeoExpectedException):
    def __init__(self, detail=""):
        message = "Polarization undefined (metallic/flat distribution)"
        super().__init__(_with_detail(message, detail))


# BargmannException
class BargmannException(GeoException):
    pass


class PathInvalid(BargmannException, GeoExpectedException):
    def __init__(self, detail=""):
        message = "State path is invalid"
        super().__init__(_with_detail(message, detail))


class ShiftOutOfRange(BargmannException, GeoExpectedException):
    def __init__(self, detail=""):
        message = "Shift index out of range"
        super().__init__(_with_detail(message, detail))


class DegeneracyCrossed(BargmannException, GeoExpectedException):
    def __init__(self, detail=""):
        message = "Degeneracy point crossed; phase undefined"
        super().__init__(_with_detail(message, detail))


class GaplessBand(BargmannException, GeoExpectedException):
    def __init__(self, detail=""):
        message = "Gapless; SWM cumulants undefined"
        super().__init__(_with_detail(message, detail))


# CalculusException
class CalculusException(GeoException):
    pass


class StencilWindowOverflow(CalculusException, GeoExpectedException):
    def __init__(self, detail=""):
        message = "Stencil window too large"
        super().__init__(_with_detail(message, detail))


class StencilOrderInvalid(CalculusException, GeoExpectedException):
    def __init__(self, detail=""):
        message = "Stencil derivative order and accuracy must be positive"
        super().__init__(_with_detail(message, detail))


class InsufficientQMax(CalculusException, GeoExpectedException):
    def __init__(self, required, available):
        self.required = required
        message = "Characteristic sequence too short, need q_max >= {}, got {}".format(
            required, available)
        super().__init__(message)


class LogDivergence(CalculusException, GeoExpectedException):
    def __init__(self, detail=""):
        message = "The logarithmic terms in the cumulants diverge"
        super().__init__(_with_detail(message, detail))


class UnknownReference(CalculusException, GeoExpectedException):
    def __init__(self, detail=""):
        message = "Unknown reference distribution"
        super().__init__(_with_detail(message, detail))


# DiagnosticsException
class DiagnosticsException(GeoException):
    pass


class MomentsDegenerate(DiagnosticsException, GeoExpectedException):
    def __init__(self, detail=""):
        message = "Second moment must be positive"
        super().__init__(_with_detail(message, detail))


class FidelityUndefined(DiagnosticsException, GeoExpectedException):
    def __init__(self, detail=""):
        message = "Fidelity undefined at degeneracy"
        super().__init__(_with_detail(message, detail))


# NumberTheoryException
class NumberTheoryException(GeoException):
    pass


class FibonacciIndexInvalid(NumberTheoryException, GeoExpectedException):
    def __init__(self, detail=""):
        message = "Fibonacci index must be >= 1"
        super().__init__(_with_detail(message, detail))


class FillingInvalid(NumberTheoryException, GeoExpectedException):
    def __init__(self, detail=""):
        message = "Filling must satisfy 1 <= N < L"
        super().__init__(_with_detail(message, detail))


# ScanException
class ScanException(GeoException):
    pass


class ScanConfigInvalid(ScanException, GeoExpectedException):
    def __init__(self, detail=""):
        message = "Scan config is invalid"
        super().__init__(_with_detail(message, detail))


class ManifestInvalid(ScanException, GeoFatalError):
    def __init__(self, detail=""):
        message = "Scan manifest failed schema validation"
        super().__init__(_with_detail(message, detail))


class NoPluginError(ScanException, GeoFatalError):
    def __init__(self, detail=""):
        message = "Scan plugin not found"
        super().__init__(_with_detail(message, detail))


class WorkerLost(ScanException, GeoExpectedException):
    def __init__(self, detail=""):
        message = "Scan worker exited before returning the point"
        super().__init__(_with_detail(message, detail))


# CommunicatorException
class CommunicatorException(GeoException):
    pass


class QueueEmpty(CommunicatorException, GeoExpectedException):
    def __init__(self):
        message = "GeoQueue which get in communicator is empty"
        super().__init__(message)


class QueueValueError(CommunicatorException, GeoExpectedException):
    def __init__(self):
        message = "GeoQueue send data too large"
        super().__init__(message)


class QueueNotExist(CommunicatorException, GeoFatalError):
    def __init__(self):
        message = "GeoQueue which put in communicator is not exist"
        super().__init__(message)
