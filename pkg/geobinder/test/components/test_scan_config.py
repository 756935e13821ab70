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

import pytest

from core.components import exceptions
from core.components.scan_config import ScanConfig
from plugin.scanner import fermi_obc


def test_manifest_path():
    assert ScanConfig("fermi-obc", {}, "a/b.csv").get_manifest_path() == "a/b.json"
    assert ScanConfig("fermi-obc", {}, "a/b.out").get_manifest_path() == "a/b.out.json"
    assert ScanConfig("fermi-obc", {}, "b.csv", manifest="m.json").get_manifest_path() == "m.json"


def test_default_threads():
    scan_config = ScanConfig("fermi-obc", {"L_list": [10]}, "b.csv")
    assert scan_config.threads == 1
    assert scan_config.plugin_name == "fermi_obc"
    assert scan_config.to_dict()["params"] == {"L_list": [10]}


def test_validate():
    ScanConfig("fermi-obc", {"L_list": [10, 20]}, "b.csv").validate(fermi_obc.ScanPlugin)

    with pytest.raises(exceptions.ScanConfigInvalid) as e:
        ScanConfig("fermi-obc", {"L_list": [1]}, "b.csv").validate(fermi_obc.ScanPlugin)
    assert "L_list.0" in str(e.value)

    with pytest.raises(exceptions.ScanConfigInvalid):
        ScanConfig("fermi-obc", {}, "b.csv").validate(fermi_obc.ScanPlugin)

    with pytest.raises(exceptions.ScanConfigInvalid):
        ScanConfig("fermi-obc", {"L_list": [10]}, "b.csv", threads=0).validate(fermi_obc.ScanPlugin)

    with pytest.raises(exceptions.ScanConfigInvalid):
        ScanConfig("fermi-obc", {"L_list": [10]}, "").validate(fermi_obc.ScanPlugin)
