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

from core.components.config import Config


def _checked(overrides):
    origin = copy.deepcopy(Config().config_dict)
    try:
        Config().config_dict.update(overrides)
        Config()._check_values(Config()._load_default())
        return {key: Config().config_dict[key] for key in overrides}
    finally:
        Config().config_dict = origin


def test_value_out_of_range(capsys):
    checked = _checked({
        "numeric.log_threshold": -1.0,
        "scan.threads": 0,
        "eigen.driver": "lapack",
        "scan.float_digits": 30
    })
    assert checked == {
        "numeric.log_threshold": 1.0e-12,
        "scan.threads": 1,
        "eigen.driver": "evr",
        "scan.float_digits": 17
    }
    assert "eigen.driver" in capsys.readouterr().out


def test_value_in_range(capsys):
    checked = _checked({"numeric.log_threshold": 1.0e-10, "scan.threads": 4, "eigen.driver": "evd"})
    assert checked == {"numeric.log_threshold": 1.0e-10, "scan.threads": 4, "eigen.driver": "evd"}
    assert capsys.readouterr().out == ""


def test_default_template_valid():
    default = Config()._load_default()
    assert set(Config.value_schema["properties"]) <= set(default)
    assert Config().get_config("filling.limit_shift") == 20
