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

import copy
import jsonschema

from core.components import exceptions
from core.components.config import Config


class ScanConfig(object):
    """
    一次扫描的完整配置: 子命令, 插件参数, 输出路径与并发数
    """

    base_schema = {
        "type": "object",
        "required": ["subcommand", "plugin_name", "params", "out", "threads"],
        "properties": {
            "subcommand": {
                "type": "string"
            },
            "plugin_name": {
                "type": "string",
                "pattern": "^[a-z0-9_]+$"
            },
            "params": {
                "type": "object"
            },
            "out": {
                "type": "string",
                "minLength": 1
            },
            "manifest": {
                "type": ["string", "null"]
            },
            "plot_script": {
                "type": ["string", "null"]
            },
            "threads": {
                "type": "integer",
                "minimum": 1
            }
        }
    }

    base_validator = jsonschema.Draft7Validator(base_schema)

    def __init__(self, subcommand, params, out, manifest=None, plot_script=None, threads=None):
        """
        Parameters:
            subcommand - str, 子命令名, 如 fermi-pbc
            params - dict, 插件参数
            out - str, CSV 输出路径
            manifest - str, JSON manifest 路径, 为 None 时使用 <out>.json
            plot_script - str, 绘图脚本路径, 为 None 时不生成
            threads - int, 并发进程数, 为 None 时使用 scan.threads
        """
        self.subcommand = subcommand
        self.plugin_name = subcommand.replace("-", "_")
        self.params = params
        self.out = out
        self.manifest = manifest
        self.plot_script = plot_script
        if threads is None:
            threads = Config().get_config("scan.threads")
        self.threads = threads
        self.warnings = []

    def get_manifest_path(self):
        if self.manifest is not None:
            return self.manifest
        if self.out.endswith(".csv"):
            return self.out[:-4] + ".json"
        return self.out + ".json"

    def validate(self, plugin_cls):
        """
        使用 jsonschema 校验配置与插件参数

        Parameters:
            plugin_cls - ScanPluginBase 子类

        Raises:
            exceptions.ScanConfigInvalid - 校验失败
        """
        try:
            self.base_validator.validate(self.to_dict())
            jsonschema.Draft7Validator(plugin_cls.params_schema).validate(self.params)
        except jsonschema.exceptions.ValidationError as e:
            path = ".".join(str(item) for item in e.absolute_path)
            raise exceptions.ScanConfigInvalid("{}: {}".format(path or "<root>", e.message))

    def to_dict(self):
        return {
            "subcommand": self.subcommand,
            "plugin_name": self.plugin_name,
            "params": copy.deepcopy(self.params),
            "out": self.out,
            "manifest": self.manifest,
            "plot_script": self.plot_script,
            "threads": self.threads
        }
