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

import os
import time
import psutil

from core.components import common
from core.components.logger import Logger
from core.components.config import Config
from core.components.result_writer import ResultWriter
from core.components.communicator import Communicator
from core.components.scanner_manager import ScannerManager, get_plugin_class


class Launcher(object):
    """
    扫描入口类
    """

    def _set_affinity(self):
        if Config().get_config("affinity.enable") is True:
            try:
                core_num = Config().get_config("affinity.core_num")
                cpu_count = psutil.cpu_count()
                if core_num <= 0 or cpu_count < core_num:
                    mask = range(1)
                    Logger().warning("Config item affinity.core_num invalid, use defaut (1)")
                else:
                    mask = range(core_num)
                os.sched_setaffinity(os.getpid(), mask)
            except Exception as e:
                Logger().error("set affinity error!", exc_info=e)

    def _get_version(self):
        with open(Config().get_main_path() + "/VERSION") as f:
            return f.read().strip()

    def launch(self, scan_config):
        """
        启动器主函数

        Parameters:
            scan_config - ScanConfig

        Returns:
            list, 按网格顺序排列的 ScanRow

        Raises:
            exceptions.NoPluginError - 子命令没有对应插件
            exceptions.ScanConfigInvalid - 配置校验失败
        """
        self._set_affinity()
        Communicator()
        Logger().init_module_logger()

        plugin_cls = get_plugin_class(scan_config.plugin_name)
        scan_config.validate(plugin_cls)
        plugin = plugin_cls(scan_config.params)
        scan_config.warnings = plugin.parity_warnings()
        for warning in scan_config.warnings:
            Logger().warning(warning)
        Logger().info("Launcher init success!")

        started_at = common.get_iso_time()
        start = time.time()
        ScannerManager().init_manager(scan_config, plugin)
        rows = ScannerManager().run()
        wall_time = time.time() - start

        header = plugin_cls.get_header()
        version = self._get_version()
        writer = ResultWriter()
        writer.write_csv(scan_config.out, header, rows)
        manifest = {
            "tool": "geobinder",
            "version": version,
            "subcommand": scan_config.subcommand,
            "config": Config().dump(),
            "params": scan_config.to_dict()["params"],
            "columns": header,
            "rows": len(rows),
            "failed_rows": [{"index": row.index, "error": row.error} for row in rows if row.failed],
            "warnings": scan_config.warnings,
            "summary": plugin.summarize(rows),
            "wall_time": wall_time,
            "started_at": started_at
        }
        writer.write_manifest(scan_config.get_manifest_path(), manifest)
        if scan_config.plot_script is not None:
            writer.write_plot_script(scan_config.plot_script, scan_config.subcommand, version,
                                     scan_config.out, plugin_cls.plot_axes)

        Logger().info("Scan {} finished in {:.2f}s, {} of {} points failed".format(
            scan_config.subcommand, wall_time, len(manifest["failed_rows"]), len(rows)))
        return rows


def run_scan(scan_config):
    """
    运行一次扫描并写出 CSV / manifest / 绘图脚本
    """
    return Launcher().launch(scan_config)
