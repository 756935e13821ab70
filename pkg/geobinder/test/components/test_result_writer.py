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

import json

import numpy as np
import pytest

from core.components import exceptions
from core.components.result_writer import ResultWriter
from core.model.result_model import ScanRow


@pytest.fixture
def writer():
    return ResultWriter()


def test_format_cell(writer):
    assert writer.format_cell(None) == "NA"
    assert writer.format_cell(True) == "1"
    assert writer.format_cell(False) == "0"
    assert writer.format_cell(np.bool_(True)) == "1"
    assert writer.format_cell(np.bool_(False)) == "0"
    assert writer.format_cell(42) == "42"
    assert writer.format_cell(np.int64(7)) == "7"
    assert writer.format_cell(0.1) == "0.10000000000000001"
    assert writer.format_cell(np.float64(0.5)) == "0.5"
    assert writer.format_cell(float("nan")) == "NA"
    assert writer.format_cell(float("-inf")) == "NA"
    assert writer.format_cell("8+2") == "8+2"


def test_write_csv(writer, tmp_path):
    path = str(tmp_path / "out" / "scan.csv")
    rows = [
        ScanRow(0, {"L": 10, "N": 5, "U4": 0.25}),
        ScanRow(1, {"L": 10, "N": 11}, error="N = 11, dim = 10")
    ]
    writer.write_csv(path, ["L", "N", "U4", "error"], rows)
    with open(path, "rb") as f:
        content = f.read()
    assert b"\r" not in content
    assert content.decode() == "L,N,U4,error\n10,5,0.25,NA\n10,11,NA,\"N = 11, dim = 10\"\n"


def get_manifest():
    return {
        "tool": "geobinder",
        "version": "1.0.0",
        "subcommand": "fermi-obc",
        "config": {"scan.threads": 1},
        "params": {"L_list": [10]},
        "columns": ["L", "N", "error"],
        "rows": 1,
        "failed_rows": [],
        "warnings": [],
        "summary": {"exponent": np.float64(1.02), "count": np.int64(3), "bad": float("nan")},
        "wall_time": 0.1,
        "started_at": "2020-01-01T08:00:00"
    }


def test_write_manifest(writer, tmp_path):
    path = str(tmp_path / "scan.json")
    writer.write_manifest(path, get_manifest())
    with open(path) as f:
        manifest = json.load(f)
    assert manifest["summary"]["exponent"] == 1.02
    assert manifest["summary"]["count"] == 3
    assert manifest["columns"] == ["L", "N", "error"]


def test_write_manifest_non_finite(writer, tmp_path):
    path = str(tmp_path / "scan.json")
    manifest = get_manifest()
    manifest["rows"] = np.int64(1)
    manifest["summary"] = {
        "chi_F_peaks": [(np.float64(1.5), float("inf"))],
        "degenerate": np.bool_(True),
        "fit": np.array([np.nan, 2.0])
    }
    writer.write_manifest(path, manifest)
    with open(path) as f:
        content = f.read()
    assert "Infinity" not in content
    assert "NaN" not in content
    summary = json.loads(content)["summary"]
    assert summary == {"chi_F_peaks": [[1.5, None]], "degenerate": True, "fit": [None, 2.0]}


def test_write_manifest_invalid(writer, tmp_path):
    manifest = get_manifest()
    del manifest["rows"]
    with pytest.raises(exceptions.ManifestInvalid):
        writer.write_manifest(str(tmp_path / "scan.json"), manifest)

    manifest = get_manifest()
    manifest["failed_rows"] = [{"index": -1, "error": "x"}]
    with pytest.raises(exceptions.ManifestInvalid):
        writer.write_manifest(str(tmp_path / "scan.json"), manifest)


def test_write_plot_script(writer, tmp_path):
    path = str(tmp_path / "plot.py")
    csv_path = str(tmp_path / "scan.csv")
    writer.write_plot_script(path, "ssh", "1.0.0", csv_path,
                             {"x": "dJ", "y": "U4", "series": "L"})
    with open(path) as f:
        content = f.read()
    assert 'subcommand "ssh"' in content
    assert "CSV_PATH = {!r}".format(csv_path) in content
    assert "X, Y, SERIES = 'dJ', 'U4', 'L'" in content
    assert "NA = 'NA'" in content
    compile(content, path, "exec")
