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
from core.components import lattice_tools
from core.components.logger import Logger
from core.components.communicator import Communicator
from core.model.result_model import ScanRow


class ScanPluginBase(object):

    plugin_info = {
        "name": "No_name_plugin",  # 使用数字字母下划线命名, 应与文件名（不含扩展名）相同
        "show_name": "No_show_name",  # 命令行帮助中展示的名字
        "description": "No description",  # 插件描述
        "cli_name": "no-name",  # 子命令名
        "parity_check": False  # 是否检查 N 与 L 的奇偶性
    }

    lattice_tools = lattice_tools

    # 网格参数列与输出列, CSV 表头为 param_columns + columns + ["error"]
    param_columns = []
    columns = []

    # 生成绘图脚本时使用的默认坐标轴
    plot_axes = {"x": None, "y": None, "series": None}

    # 插件参数的 jsonschema
    params_schema = {"type": "object"}

    def __init__(self, params):
        """
        初始化

        Parameters:
            params - dict, 已通过 params_schema 校验的插件参数
        """
        if Communicator().is_worker():
            self.logger = Logger().get_scan_plugin_logger(self.plugin_info["name"])
        else:
            self.logger = Logger()
        self.params = params

    @classmethod
    def add_arguments(cls, parser):
        """
        向子命令 parser 添加插件参数

        Parameters:
            parser - argparse.ArgumentParser
        """
        raise NotImplementedError

    @classmethod
    def params_from_args(cls, args):
        """
        从命令行参数生成插件参数 dict
        """
        raise NotImplementedError

    @classmethod
    def get_header(cls):
        return cls.param_columns + cls.columns + ["error"]

    def mutant(self):
        """
        按确定顺序生成网格点, 每个网格点为只含参数列的 dict
        """
        raise NotImplementedError

    def check(self, point):
        """
        计算一个网格点

        Parameters:
            point - dict, mutant 生成的网格点

        Returns:
            dict, 输出列 -> 值, 缺失的列视为无效
        """
        raise NotImplementedError

    def parity_warnings(self):
        """
        检查 (N, L) 奇偶性, 返回警告字符串列表
        """
        warnings = []
        if not self.plugin_info["parity_check"]:
            return warnings
        seen = set()
        for point in self.mutant():
            pair = (point["N"], point["L"])
            if pair in seen:
                continue
            seen.add(pair)
            if pair[0] % 2 == pair[1] % 2:
                warnings.append(
                    "N={} and L={} share parity; the polarization distribution may be bimodal".format(*pair))
        return warnings

    def summarize(self, rows):
        """
        扫描结束后的汇总信息, 写入 manifest

        Parameters:
            rows - list, 按网格顺序排列的 ScanRow

        Returns:
            dict
        """
        return {}

    def evaluate(self, index, point):
        """
        计算一个网格点并捕获异常, 单点失败不影响扫描

        Parameters:
            index - int, 网格点序号
            point - dict

        Returns:
            ScanRow
        """
        values = dict(point)
        error = None
        try:
            values.update(self.check(point))
        except exceptions.GeoExpectedException as e:
            self.logger.warning("Point {} {} rejected: {}".format(index, point, e))
            error = str(e)
        except Exception as e:
            self.logger.error("scanner plugin: [{}] error at point {}:".format(
                self.plugin_info["name"], index), exc_info=e)
            error = "{}: {}".format(type(e).__name__, e)
        return ScanRow(index, values, error)

    def q_max_for(self, mu):
        """
        mu 阶 FDD/FDLD 所需的 q_max
        """
        return self.lattice_tools.genfun_calculus.stencil_radius(4, mu)

    @staticmethod
    def finite_or_none(value):
        if value is None:
            return None
        if isinstance(value, float) and not math.isfinite(value):
            return None
        return value
