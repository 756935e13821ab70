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

import plugin_helper
from plugin.scanner import fermi_obc
from plugin.scanner import fermi_pbc


def test_fermi_obc_args():
    params = plugin_helper.parse_plugin_args(fermi_obc.ScanPlugin, ["--L-list", "10", "20"])
    assert params == {"L_list": [10, 20], "N_list": None, "t": 1.0}
    plugin_ins = fermi_obc.ScanPlugin(params)
    assert list(plugin_ins.mutant()) == [{"L": 10, "N": 5}, {"L": 20, "N": 10}]
    assert fermi_obc.ScanPlugin.get_header() == ["L", "N", "M2", "M4", "M2_per_N", "U4", "kurtosis", "error"]


def test_fermi_obc_full_band():
    L = 10
    plugin_ins = fermi_obc.ScanPlugin({"L_list": [L], "N_list": [L]})
    row = plugin_ins.evaluate(0, {"L": L, "N": L})
    assert not row.failed
    assert row.values["M2"] == pytest.approx((L ** 2 - 1) / 12, rel=1e-10)
    assert row.values["M2_per_N"] == pytest.approx(row.values["M2"] / L)
    assert row.values["U4"] == pytest.approx(1 - 0.2 * (3 * L ** 2 - 7) / (L ** 2 - 1), rel=1e-9)
    assert row.values["kurtosis"] == pytest.approx(-3 * row.values["U4"])


def test_fermi_obc_invalid_point():
    plugin_ins = fermi_obc.ScanPlugin({"L_list": [6]})
    row = plugin_ins.evaluate(3, {"L": 6, "N": 7})
    assert row.failed
    assert row.index == 3
    assert "N = 7" in row.error


def test_fermi_pbc_args():
    params = plugin_helper.parse_plugin_args(
        fermi_pbc.ScanPlugin, ["--L-list", "100", "--N", "49", "50", "--mu-max", "3"])
    assert params["mu_list"] == [1, 2, 3]
    assert params["mode"] == "Numeric"
    plugin_ins = fermi_pbc.ScanPlugin(params)
    points = list(plugin_ins.mutant())
    assert len(points) == 6
    assert points[0] == {"L": 100, "N": 49, "mu": 1}
    assert points[-1] == {"L": 100, "N": 50, "mu": 3}


def test_fermi_pbc_closed_and_open_shell():
    plugin_ins = fermi_pbc.ScanPlugin({"L_list": [100], "N_list": [49, 50], "mu_list": [1]})
    rows = plugin_helper.run_points(plugin_ins)
    closed, opened = rows
    assert not closed.failed and not opened.failed
    assert closed.values["degenerate"] is False
    assert closed.values["Z1_abs"] < 1e-10
    assert closed.values["U4"] == pytest.approx(0.5, abs=1e-8)
    assert opened.values["degenerate"] is True
    assert opened.values["Z1_abs"] == pytest.approx(0.5, abs=1e-8)
    assert opened.values["U4"] == pytest.approx(1 / 3, abs=1e-8)


def test_fermi_pbc_analytic():
    plugin_ins = fermi_pbc.ScanPlugin({"L_list": [50], "mu_list": [1, 2], "analytic": "flat"})
    rows = plugin_helper.run_points(plugin_ins)
    assert [row.values["N"] for row in rows] == [None, None]
    assert rows[0].values["U4"] == pytest.approx(0.5)
    assert rows[1].values["U4"] == pytest.approx(113 / 225)
    assert rows[0].values["M2_per_N"] is None
