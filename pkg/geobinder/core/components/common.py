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
import datetime

import numpy as np


def principal_angle(z):
    """
    复数辐角, 取主值分支 (-pi, pi]

    Parameters:
        z - complex

    Returns:
        float
    """
    angle = float(np.angle(z))
    # np.angle 对虚部为 -0.0 的负实数返回 -pi
    if angle <= -np.pi:
        angle = np.pi
    return angle


def principal_log(z):
    """
    主值分支复对数 Log z = ln|z| + i Arg z

    Parameters:
        z - complex, 非零

    Returns:
        complex
    """
    return complex(np.log(abs(z)), principal_angle(z))


def wrap_phase(phase):
    """
    将相位折回 (-pi, pi]
    """
    wrapped = float(np.mod(phase + np.pi, 2 * np.pi) - np.pi)
    if wrapped <= -np.pi:
        wrapped = np.pi
    return wrapped


def get_iso_time():
    """
    获取当前时间的ISO格式字符串

    Returns:
        str, 型如: 2020-01-01T08:00:00
    """
    return datetime.datetime.now().replace(microsecond=0).isoformat()


def parse_grid(grid_str):
    """
    解析 start:stop:step 形式的网格, 包含端点

    Parameters:
        grid_str - str, 如 0.5:3.5:0.05

    Returns:
        list, float 网格点

    Raises:
        ValueError - 格式错误或步长非正
    """
    parts = grid_str.split(":")
    if len(parts) != 3:
        raise ValueError("grid must look like start:stop:step, got {!r}".format(grid_str))
    start, stop, step = (float(item) for item in parts)
    if step <= 0 or stop < start:
        raise ValueError("grid {!r} is empty or has non-positive step".format(grid_str))
    # 步长不整除区间时截断, 网格点不超过 stop
    count = int(math.floor((stop - start) / step + 1e-9)) + 1
    # 四舍五入到12位, 避免 0.1 + 0.2 类误差进入输出
    return [round(start + i * step, 12) for i in range(count)]
