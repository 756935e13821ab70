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
from core.model.lattice_model import ModelSpec


class ScanPlugin(scan_plugin_base.ScanPluginBase):

    plugin_info = {
        "name": "fermi_obc",
        "show_name": "开边界费米海",
        "description": "开边界均匀链的位置中心矩与 Binder 累积量",
        "cli_name": "fermi-obc",
        "parity_check": False
    }

    param_columns = ["L", "N"]
    columns = ["M2", "M4", "M2_per_N", "U4", "kurtosis"]
    plot_axes = {"x": "L", "y": "U4", "series": None}

    params_schema = {
        "type": "object",
        "required": ["L_list"],
        "properties": {
            "L_list": {
                "type": "array",
                "items": {"type": "integer", "minimum": 2},
                "minItems": 1
            },
            "N_list": {
                "type": ["array", "null"],
                "items": {"type": "integer", "minimum": 1},
                "minItems": 1
            },
            "t": {"type": "number"}
        }
    }

    @classmethod
    def add_arguments(cls, parser):
        parser.add_argument("--L-list", help="Site counts", type=int, nargs="+", required=True)
        parser.add_argument("--N", help="Particle counts, default L/2", type=int, nargs="+", default=None)
        parser.add_argument("--t", help="Hopping energy", type=float, default=1.0)

    @classmethod
    def params_from_args(cls, args):
        return {"L_list": args.L_list, "N_list": args.N, "t": args.t}

    def mutant(self):
        for L in self.params["L_list"]:
            N_list = self.params.get("N_list") or [L // 2]
            for N in N_list:
                yield {"L": L, "N": N}

    def check(self, point):
        models = self.lattice_tools.lattice_models
        spec = ModelSpec.uniform_chain(point["L"], ModelSpec.OPEN, self.params.get("t", 1.0))
        spectrum = models.eigensolve(models.build_model(spec))
        M2, M4 = models.obc_position_moments(spectrum, point["N"])
        U4, kurtosis = self.lattice_tools.diagnostics.binder_u4(M2, M4)
        return {
            "M2": M2,
            "M4": M4,
            "M2_per_N": M2 / point["N"],
            "U4": U4,
            "kurtosis": kurtosis
        }
