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

import multiprocessing

from core.components import exceptions
from core.components.logger import Logger
from core.components.communicator import Communicator
from core.components import scanner_manager


class ScanWorker(multiprocessing.Process):
    """
    扫描子进程, 从任务队列逐个取网格点计算, 结果写回结果队列
    """

    def __init__(self, worker_id, plugin_name, params):
        """
        Parameters:
            worker_id - int, worker 序号
            plugin_name - str, 扫描插件名
            params - dict, 插件参数
        """
        self.worker_id = str(worker_id)
        self.plugin_name = plugin_name
        self.params = params
        super(ScanWorker, self).__init__(name="ScanWorker_" + self.worker_id, daemon=True)

    def run(self):
        Communicator().init_new_module(self.name)
        Logger().init_module_logger()
        Logger().debug("Worker {} started for plugin {}".format(self.worker_id, self.plugin_name))
        try:
            plugin = scanner_manager.load_scan_plugin(self.plugin_name, self.params)
            count = self._serve(plugin)
        except KeyboardInterrupt:
            return
        except Exception as e:
            Logger().error("Worker {} down with exception:".format(self.worker_id), exc_info=e)
            raise
        Logger().info("Worker {} evaluated {} points".format(self.worker_id, count))

    def _serve(self, plugin):
        count = 0
        while True:
            task = Communicator().get_task()
            if task is None:
                return count
            index, point = task
            Communicator().send_begin(self.worker_id, index)
            row = plugin.evaluate(index, point)
            try:
                Communicator().send_done(self.worker_id, index, row)
            except exceptions.QueueValueError:
                row.values = dict(point)
                row.error = "result too large to transfer"
                Communicator().send_done(self.worker_id, index, row)
            count += 1
