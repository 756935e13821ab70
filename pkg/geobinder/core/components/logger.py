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
import sys
import shutil
import logging
import cloghandler

from core.components.config import Config
from core.components.communicator import Communicator


class Logger(object):
    """
    日志记录模块

    每个进程写自己的模块日志 (Main.log, ScanWorker_<i>/ScanWorker.log),
    ERROR 以上统一写入 error.log 并输出到 stderr
    """

    LOG_FMT = '[%(asctime)s - %(levelname)s] %(message)s [file: %(pathname)s , line %(lineno)d]'
    ERROR_FMT = '[%(asctime)s - %(levelname)s][%(processName)s] %(message)s [file: %(pathname)s , line %(lineno)d]'
    DATE_FMT = '%Y-%m-%d %H:%M:%S'
    LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")

    def __new__(cls):
        """
        单例模式初始化
        """
        if not hasattr(cls, "instance"):
            cls.instance = super(Logger, cls).__new__(cls)
            cls.instance._init_logger()
        return cls.instance

    @classmethod
    def reset(cls):
        """
        用于重置Logger实例, 修改log.path后需要调用
        """
        if hasattr(cls, "instance"):
            del cls.instance

    def _new_handler(self, file_name, log_fmt=LOG_FMT):
        """
        生成可多进程写入的rotate handler

        Parameters:
            file_name - str, 相对 log.path 的文件名
            log_fmt - str, 日志格式
        """
        handler = cloghandler.ConcurrentRotatingFileHandler(
            os.path.join(self.log_path, file_name),
            mode='a',
            maxBytes=Config().get_config("log.rotate_size") * 1024 * 1024,
            backupCount=Config().get_config("log.rotate_num"),
            encoding='utf-8',
            debug=False
        )
        handler.setFormatter(logging.Formatter(fmt=log_fmt, datefmt=self.DATE_FMT))
        return handler

    @staticmethod
    def _console_handler(level, prefix):
        handler = logging.StreamHandler(sys.stderr)
        handler.setLevel(level)
        handler.setFormatter(logging.Formatter(prefix + ' %(message)s'))
        return handler

    @staticmethod
    def _configure(logger, handlers, level):
        logger.propagate = False
        logger.handlers = []
        for handler in handlers:
            logger.addHandler(handler)
        logger.setLevel(level)

    def _init_error_log(self):
        """
        配置统一的error.log
        """
        error_logger = logging.getLogger("geobinder.error")
        self._configure(error_logger, [
            self._new_handler("error.log", self.ERROR_FMT),
            self._console_handler(logging.ERROR, "[!]")
        ], logging.ERROR)
        self.error_logger = error_logger
        self.critical = error_logger.critical
        self.error = error_logger.error

    def init_module_logger(self):
        """
        初始化模块日志配置, 应当在每个进程初始化时调用

        扫描 worker 的日志放在 log.path/ScanWorker_<i>/ 下; 主进程额外把
        WARNING 输出到 stderr, 便于命令行看到奇偶性等提示
        """
        module_name = Communicator().get_module_name()
        if module_name.startswith("ScanWorker"):
            self.module_log_path = os.path.join(self.log_path, module_name)
            if not os.path.exists(self.module_log_path):
                os.makedirs(self.module_log_path)
            handlers = [self._new_handler(os.path.join(module_name, "ScanWorker.log"))]
        else:
            self.module_log_path = self.log_path
            handlers = [self._new_handler(module_name + ".log")]
            if self._echo_warnings:
                handlers.append(self._console_handler(logging.WARNING, "[-]"))
        self._configure(logging.getLogger(), handlers, self._log_level)

        module_logger = logging.getLogger("geobinder." + module_name)
        self.warning = module_logger.warning
        self.info = module_logger.info
        self.debug = module_logger.debug

    def get_scan_plugin_logger(self, plugin_name):
        """
        配置扫描插件logger, 写入当前 worker 目录下的 plugin_<name>.log

        Parameters:
            plugin_name - str, 扫描插件名

        Returns:
            logging.Logger
        """
        relative_dir = os.path.relpath(self.module_log_path, self.log_path)
        handler = self._new_handler(os.path.join(relative_dir, "plugin_" + plugin_name + ".log"))
        logger = logging.getLogger("geobinder.plugin_" + plugin_name)
        logger.parent = None
        self._configure(logger, [handler], self._log_level)
        return logger

    def _init_logger(self):
        """
        初始化
        """
        self._log_level = Config().get_config("log.level").upper()
        if self._log_level not in self.LEVELS:
            self._log_level = "INFO"
        self._echo_warnings = os.environ.get("GEOBINDER_TEST_MODE") != "1"
        self.log_path = Config().get_config("log.path")
        self.module_log_path = self.log_path

        if not os.path.exists(self.log_path):
            os.makedirs(self.log_path)

        self._init_error_log()
        self.init_module_logger()

        # log目录添加VERSION文件
        shutil.copyfile(os.path.join(Config().get_main_path(), "VERSION"),
                        os.path.join(self.log_path, "VERSION"))
