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

from core.components.plugin import scan_plugin_base


class ScanPlugin(scan_plugin_base.ScanPluginBase):

    plugin_info = {
        "name": "zeckendorf",
        "show_name": "Zeckendorf 填充分类",
        "description": "按 Zeckendorf 分解对 AA 填充 N/F_n 分类",
        "cli_name": "zeckendorf",
        "parity_check": False
    }

    param_columns = ["L", "N"]
    columns = ["decomposition", "indices", "terms", "smallest_value", "verdict",
               "leading_ratio", "leading_shifted_ratio", "leading_limit"]
    plot_axes = {"x": "N", "y": "smallest_value", "series": None}

    params_schema = {
        "type": "object",
        "required": ["fib_index", "N_list"],
        "properties": {
            "fib_index": {"type": "integer", "minimum": 3},
            "N_list": {
                "type": "array",
                "items": {"type": "integer"},
                "minItems": 1
            }
        }
    }

    @classmethod
    def add_arguments(cls, parser):
        parser.add_argument("--fib-index", help="Size selector n, L = F_n", type=int, default=15)
        parser.add_argument("--N", help="Particle counts, default all 1..L-1", type=int, nargs="+", default=None)

    @classmethod
    def params_from_args(cls, args):
        N_list = args.N
        if N_list is None:
            L = cls.lattice_tools.number_theory.fibonacci(args.fib_index)
            N_list = list(range(1, L))
        return {"fib_index": args.fib_index, "N_list": N_list}

    def mutant(self):
        L = self.lattice_tools.number_theory.fibonacci(self.params["fib_index"])
        for N in self.params["N_list"]:
            yield {"L": L, "N": N}

    def check(self, point):
        report = self.lattice_tools.number_theory.classify_filling(point["N"], point["L"])
        leading = report.terms[0]
        return {
            "decomposition": "+".join(str(v) for v in report.decomposition.values),
            "indices": "+".join(str(i) for i in report.decomposition.indices),
            "terms": report.decomposition.M,
            "smallest_value": min(report.decomposition.values),
            "verdict": report.verdict,
            "leading_ratio": leading["ratio"],
            "leading_shifted_ratio": leading["shifted_ratio"],
            "leading_limit": leading["limit"]
        }
