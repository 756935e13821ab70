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

from core import modules
from core.components import exceptions
from core.components.logger import Logger
from core.components.config import Config
from core.components.plugin import scan_plugin_base
from core.components.communicator import Communicator
from core.model.result_model import ScanRow


def load_scan_plugin(plugin_name, params):
    """
    加载并实例化扫描插件

    Parameters:
        plugin_name - str, plugin.scanner 下的模块名
        params - dict, 插件参数

    Returns:
        ScanPluginBase 实例

    Raises:
        exceptions.NoPluginError - 插件不存在或未继承 ScanPluginBase
    """
    return get_plugin_class(plugin_name)(params)


def get_plugin_class(plugin_name):
    """
    获取扫描插件类
    """
    try:
        plugin_module = __import__("plugin.scanner", fromlist=[plugin_name])
        plugin_cls = getattr(plugin_module, plugin_name).ScanPlugin
    except Exception as e:
        Logger().error("Error in load plugin: {}".format(plugin_name), exc_info=e)
        raise exceptions.NoPluginError(plugin_name)
    if not issubclass(plugin_cls, scan_plugin_base.ScanPluginBase):
        Logger().warning("scanner plugin {} not inherit class ScanPluginBase!".format(plugin_name))
        raise exceptions.NoPluginError(plugin_name)
    return plugin_cls


class ScannerManager(object):
    """
    网格点调度: 单进程时直接计算, 多进程时分发给 ScanWorker 并按网格顺序收集结果
    """

    POLL_INTERVAL = 0.5
    # 有 worker 退出且其余 worker 空闲超过该时间时, 未完成网格点记为丢失
    LOST_GRACE = 10

    def __new__(cls):
        if not hasattr(cls, "instance"):
            cls.instance = super(ScannerManager, cls).__new__(cls)
        return cls.instance

    @classmethod
    def reset(cls):
        if hasattr(cls, "instance"):
            del cls.instance

    def init_manager(self, scan_config, plugin):
        """
        初始化

        Parameters:
            scan_config - ScanConfig
            plugin - 主进程中的插件实例, 用于生成网格点
        """
        self._scan_config = scan_config
        self._plugin = plugin

    def run(self):
        """
        计算全部网格点

        Returns:
            list, 按网格顺序排列的 ScanRow
        """
        points = list(self._plugin.mutant())
        Logger().info("Scan {} with {} points on {} thread(s)".format(
            self._scan_config.subcommand, len(points), self._scan_config.threads))
        if self._scan_config.threads == 1 or len(points) <= 1:
            return self._run_inline(points)
        return self._run_workers(points)

    def _run_inline(self, points):
        rows = []
        for index, point in enumerate(points):
            rows.append(self._plugin.evaluate(index, point))
            self._log_progress(len(rows), len(points))
        return rows

    def _log_progress(self, done, total):
        step = max(1, total // 10)
        if done % step == 0 or done == total:
            Logger().info("Progress: {}/{}".format(done, total))

    def _lost_row(self, index, point, detail):
        return ScanRow(index, dict(point), str(exceptions.WorkerLost(detail)))

    def _run_workers(self, points):
        """
        多进程计算, 任务队列中最多保留 2 * threads 个未完成任务
        """
        threads = min(self._scan_config.threads, len(points))
        Communicator().open_scan_queues()

        workers = {}
        dead = set()
        for i in range(threads):
            proc = modules.ScanWorker(i, self._scan_config.plugin_name, self._scan_config.params)
            proc.start()
            workers[proc.worker_id] = proc
        Logger().info("{} scan workers forked".format(threads))

        results = {}
        outstanding = set()
        in_progress = {}
        next_index = 0
        max_outstanding = 2 * threads
        timeout = Config().get_config("scan.result_timeout")
        last_progress = time.time()

        try:
            while next_index < len(points) or outstanding:
                while next_index < len(points) and len(outstanding) < max_outstanding:
                    Communicator().send_task(next_index, points[next_index])
                    outstanding.add(next_index)
                    next_index += 1

                try:
                    kind, worker_id, index, row = Communicator().get_result(timeout=self.POLL_INTERVAL)
                except exceptions.QueueEmpty:
                    kind = None
                self._check_workers(workers, dead, in_progress, outstanding, results, points)

                if kind is None:
                    idle = time.time() - last_progress
                    if outstanding and not any(p.is_alive() for p in workers.values()):
                        Logger().error("All scan workers exited, {} points lost".format(len(outstanding)))
                        for index in sorted(outstanding):
                            results[index] = self._lost_row(index, points[index], "no live worker")
                        outstanding.clear()
                        next_index = self._drain(next_index, points, results)
                    elif outstanding and dead and not in_progress and idle > self.LOST_GRACE:
                        # 存活 worker 均空闲, 未完成的网格点只能是被退出的 worker 取走
                        Logger().error("{} points taken by exited workers {}".format(
                            len(outstanding), sorted(dead)))
                        for index in sorted(outstanding):
                            results[index] = self._lost_row(index, points[index], "worker exited before start")
                        outstanding.clear()
                    elif idle > timeout:
                        Logger().error("No scan result within {}s, {} points lost".format(timeout, len(outstanding)))
                        for index in sorted(outstanding):
                            results[index] = self._lost_row(index, points[index], "timeout")
                        outstanding.clear()
                        next_index = self._drain(next_index, points, results)
                    continue

                last_progress = time.time()
                if kind == Communicator.BEGIN:
                    in_progress[worker_id] = index
                    continue
                in_progress.pop(worker_id, None)
                if index in outstanding:
                    outstanding.discard(index)
                    results[index] = row
                    self._log_progress(len(results), len(points))
        finally:
            self._stop_workers(workers)
            Communicator().close_scan_queues()

        return [results[index] for index in range(len(points))]

    def _drain(self, next_index, points, results):
        """
        无可用 worker 时, 剩余网格点全部记为丢失
        """
        for index in range(next_index, len(points)):
            results[index] = self._lost_row(index, points[index], "no live worker")
        return len(points)

    def _check_workers(self, workers, dead, in_progress, outstanding, results, points):
        """
        检测退出的 worker, 其正在计算的网格点记为丢失
        """
        for worker_id, proc in list(workers.items()):
            if worker_id in dead or proc.is_alive():
                continue
            dead.add(worker_id)
            Logger().warning("ScanWorker_{} exited with code {}".format(worker_id, proc.exitcode))
            index = in_progress.pop(worker_id, None)
            if index is not None and index in outstanding:
                Logger().error("ScanWorker_{} exited with code {} while evaluating point {}".format(
                    worker_id, proc.exitcode, index))
                outstanding.discard(index)
                results[index] = self._lost_row(index, points[index], "worker {} exit code {}".format(
                    worker_id, proc.exitcode))

    def _stop_workers(self, workers):
        for proc in workers.values():
            if proc.is_alive():
                try:
                    Communicator().send_stop()
                except Exception:
                    pass
        for proc in workers.values():
            proc.join(timeout=5)
            if proc.is_alive():
                proc.terminate()
                proc.join(timeout=5)
