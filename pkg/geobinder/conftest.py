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
import tempfile

from core.components.config import Config

os.environ["GEOBINDER_TEST_MODE"] = "1"

# 测试配置与日志写到临时目录, 不污染工作目录
_test_root = tempfile.mkdtemp(prefix="geobinder_test_")
Config().generate_config(os.path.join(_test_root, "config.yaml"))
Config().load_config(os.path.join(_test_root, "config.yaml"))
Config().config_dict["log.path"] = os.path.join(_test_root, "log")
Config().config_dict["eigen.check_residual"] = True

try:
    from pytest_cov.embed import cleanup_on_sigterm
except ImportError:
    pass
else:
    # 用于支持多进程覆盖率统计
    cleanup_on_sigterm()


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: large Aubry-Andre chains, takes minutes.")
    config.addinivalue_line(
        "markers", "test: mark test to run specified only.")


sys.path.append(os.path.dirname(__file__) + "/test")
