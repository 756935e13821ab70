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

from core.components import common
from core.components import exceptions
from core.components.plugin import scan_plugin_base
from core.model.lattice_model import ModelSpec
from core.model.result_model import FillingReport


class ScanPlugin(scan_plugin_base.ScanPluginBase):

    plugin_info = {
        "name": "aa_fidelity",
        "show_name": "AA 模型保真度磁化率",
        "description": "Aubry-Andre 模型基态对势强度 W 的保真度磁化率",
        "cli_name": "aa-fidelity",
        "parity_check": True
    }

    param_columns = ["L", "N", "W"]
    columns = ["chi_F", "overlap", "divergent"]
    plot_axes = {"x": "W", "y": "chi_F", "series": "N"}

    # 判定 W/t ~ 2 处存在峰的窗口
    PEAK_WINDOW = 0.1

    params_schema = {
        "type": "object",
        "required": ["fib_index", "N_list", "W_list", "delta"],
        "properties": {
            "fib_index": {"type": "integer", "minimum": 3},
            "N_list": {
                "type": "array",
                "items": {"type": "integer", "minimum": 1},
                "minItems": 1
            },
            "W_list": {
                "type": "array",
                "items": {"type": "number"},
                "minItems": 1
            },
            "delta": {"type": "number", "exclusiveMinimum": 0},
            "t": {"type": "number"}
        }
    }

    @classmethod
    def add_arguments(cls, parser):
        parser.add_argument("--fib-index", help="Size selector n, L = F_n", type=int, default=15)
        parser.add_argument("--N", help="Particle counts", type=int, nargs="+", required=True)
        parser.add_argument("--w-grid", help="W/t grid as start:stop:step", type=str, default="0.5:3.5:0.05")
        parser.add_argument("--delta", help="Finite-difference step", type=float, default=0.01)
        parser.add_argument("--t", help="Hopping energy", type=float, default=1.0)

    @classmethod
    def params_from_args(cls, args):
        return {
            "fib_index": args.fib_index,
            "N_list": args.N,
            "W_list": common.parse_grid(args.w_grid),
            "delta": args.delta,
            "t": args.t
        }

    def _family(self, W):
        return ModelSpec.aubry_andre(self.params["fib_index"], W, t=self.params.get("t", 1.0))

    def mutant(self):
        L = self.lattice_tools.number_theory.fibonacci(self.params["fib_index"])
        for N in self.params["N_list"]:
            for W in self.params["W_list"]:
                yield {"L": L, "N": N, "W": W}

    def check(self, point):
        fidelity = self.lattice_tools.diagnostics.fidelity_susceptibility(
            self._family, point["W"], self.params["delta"], point["N"])
        return {
            "chi_F": self.finite_or_none(fidelity.chi_F),
            "overlap": fidelity.overlap,
            "divergent": fidelity.divergent
        }

    def summarize(self, rows):
        """
        每个 N 的内部局部极大值, 以及与 Zeckendorf 分类的对照
        """
        tools = self.lattice_tools
        summary = {}
        for N in self.params["N_list"]:
            series = sorted((row.values["W"], row.values.get("chi_F")) for row in rows
                            if row.values["N"] == N and not row.failed)
            maxima = tools.diagnostics.interior_local_maxima(
                [W for W, _ in series], [chi for _, chi in series])
            peak_near_two = any(abs(W - 2.0) <= self.PEAK_WINDOW for W, _ in maxima)
            item = {
                "local_maxima": [{"W": W, "chi_F": chi} for W, chi in maxima],
                "peak_near_W2": peak_near_two
            }
            try:
                report = tools.number_theory.classify_filling(N, tools.number_theory.fibonacci(
                    self.params["fib_index"]))
            except exceptions.GeoExpectedException as e:
                item["verdict"] = None
                item["classifier_error"] = str(e)
            else:
                item["verdict"] = report.verdict
                item["decomposition"] = list(report.decomposition.values)
                item["consistent"] = peak_near_two == (report.verdict == FillingReport.TRANSITION_NEAR_WC2)
            summary[str(N)] = item
        return summary
