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
import json
import multiprocessing

import pytest

from core.launcher import run_scan
from core.components import exceptions
from core.components.communicator import Communicator
from core.components.scan_config import ScanConfig
from core.components.scanner_manager import ScannerManager


@pytest.fixture(autouse=True)
def reset_singletons():
    yield
    ScannerManager.reset()
    Communicator.reset()


def run_zeckendorf(tmp_path, name, threads):
    scan_config = ScanConfig("zeckendorf", {"fib_index": 8, "N_list": list(range(1, 23))},
                             str(tmp_path / "{}.csv".format(name)), threads=threads,
                             plot_script=str(tmp_path / "{}_plot.py".format(name)))
    rows = run_scan(scan_config)
    with open(scan_config.out, "rb") as f:
        content = f.read()
    with open(scan_config.get_manifest_path()) as f:
        manifest = json.load(f)
    return rows, content, manifest


def test_launcher_inline(tmp_path):
    rows, content, manifest = run_zeckendorf(tmp_path, "inline", 1)
    assert [row.index for row in rows] == list(range(22))
    lines = content.decode().split("\n")
    assert lines[0] == "L,N,decomposition,indices,terms,smallest_value,verdict,leading_ratio," \
                       "leading_shifted_ratio,leading_limit,error"
    assert lines[-1] == ""
    assert len(lines) == 24
    assert lines[1].startswith("21,1,1,2,1,1,TransitionNearWc2,")

    assert manifest["tool"] == "geobinder"
    assert manifest["subcommand"] == "zeckendorf"
    assert manifest["rows"] == 22
    assert [item["index"] for item in manifest["failed_rows"]] == [20, 21]
    assert manifest["params"]["fib_index"] == 8
    assert manifest["config"]["scan.na_sentinel"] == "NA"
    assert (tmp_path / "inline_plot.py").exists()


def test_launcher_threads_identical(tmp_path):
    _, inline, _ = run_zeckendorf(tmp_path, "inline", 1)
    ScannerManager.reset()
    Communicator.reset()
    rows, forked, manifest = run_zeckendorf(tmp_path, "forked", 2)
    assert forked == inline
    assert len(rows) == 22
    assert manifest["failed_rows"][0]["index"] == 20


@pytest.mark.skipif(multiprocessing.get_start_method() != "fork",
                    reason="monkeypatch reaches workers only through fork")
def test_worker_exit_before_start(tmp_path, monkeypatch):
    send_begin = Communicator.send_begin

    def exit_on_fourth_point(self, worker_id, index):
        if index == 3:
            os._exit(3)
        send_begin(self, worker_id, index)

    monkeypatch.setattr(Communicator, "send_begin", exit_on_fourth_point)
    monkeypatch.setattr(ScannerManager, "LOST_GRACE", 1)
    scan_config = ScanConfig("zeckendorf", {"fib_index": 8, "N_list": list(range(1, 9))},
                             str(tmp_path / "lost.csv"), threads=2)
    rows = run_scan(scan_config)
    assert len(rows) == 8
    assert "worker exited before start" in rows[3].error
    assert [row.index for row in rows if row.error] == [3]


def test_launcher_unknown_plugin(tmp_path):
    with pytest.raises(exceptions.NoPluginError):
        run_scan(ScanConfig("no-such-scan", {}, str(tmp_path / "x.csv")))
