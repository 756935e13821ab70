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

import lru

from core.components.plugin import scan_plugin_base
from core.model.lattice_model import ModelSpec


class ScanPlugin(scan_plugin_base.ScanPluginBase):

    plugin_info = {
        "name": "fermi_pbc",
        "show_name": "周期边界费米海",
        "description": "周期均匀链 (或解析序列) 的 U4 随差分精度阶的变化",
        "cli_name": "fermi-pbc",
        "parity_check": False
    }

    param_columns = ["L", "N", "mu"]
    columns = ["Z1_abs", "Z2_abs", "degenerate", "M2", "M4", "M2_per_N", "U4", "kurtosis"]
    plot_axes = {"x": "mu", "y": "U4", "series": "N"}

    params_schema = {
        "type": "object",
        "required": ["L_list", "mu_list"],
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
            "mu_list": {
                "type": "array",
                "items": {"type": "integer", "minimum": 1},
                "minItems": 1
            },
            "mode": {"enum": ["Numeric", "PlaneWave"]},
            "analytic": {"enum": [None, "flat", "degenerate"]},
            "t": {"type": "number"}
        }
    }

    def __init__(self, params):
        super(ScanPlugin, self).__init__(params)
        self._char_seqs = lru.LRU(8)
        self._q_max = max(self.q_max_for(mu) for mu in self.params["mu_list"])

    @classmethod
    def add_arguments(cls, parser):
        parser.add_argument("--L-list", help="Site counts", type=int, nargs="+", required=True)
        parser.add_argument("--N", help="Particle counts, default L/2", type=int, nargs="+", default=None)
        parser.add_argument("--mu-max", help="Scan accuracy orders 1..mu_max", type=int, default=10)
        parser.add_argument("--mode", help="Ground state construction", choices=["Numeric", "PlaneWave"],
                            default="Numeric")
        parser.add_argument("--analytic", help="Use an analytic sequence instead of a lattice model",
                            choices=["flat", "degenerate"], default=None)
        parser.add_argument("--t", help="Hopping energy", type=float, default=1.0)

    @classmethod
    def params_from_args(cls, args):
        return {
            "L_list": args.L_list,
            "N_list": args.N,
            "mu_list": list(range(1, args.mu_max + 1)),
            "mode": args.mode,
            "analytic": args.analytic,
            "t": args.t
        }

    def mutant(self):
        for L in self.params["L_list"]:
            if self.params.get("analytic"):
                N_list = [None]
            else:
                N_list = self.params.get("N_list") or [L // 2]
            for N in N_list:
                for mu in self.params["mu_list"]:
                    yield {"L": L, "N": N, "mu": mu}

    def _char_seq(self, L, N):
        key = (L, N)
        if key in self._char_seqs:
            return self._char_seqs[key]
        tools = self.lattice_tools
        if self.params.get("analytic"):
            cs = tools.genfun_calculus.analytic_char_seq(self.params["analytic"], L, self._q_max)
            degenerate = self.params["analytic"] == "degenerate"
        else:
            spec = ModelSpec.uniform_chain(L, ModelSpec.PERIODIC, self.params.get("t", 1.0))
            state = tools.lattice_models.ground_state(spec, N, self.params.get("mode", "Numeric"))
            cs = tools.slater.char_seq(state, min(self._q_max, L - 1))
            degenerate = state.degenerate_flag
        self._char_seqs[key] = (cs, degenerate)
        return cs, degenerate

    def check(self, point):
        cs, degenerate = self._char_seq(point["L"], point["N"])
        report = self.lattice_tools.diagnostics.fdd_report(cs, point["mu"])
        M2 = report.get("M2")
        return {
            "Z1_abs": abs(cs.at(1)),
            "Z2_abs": abs(cs.at(2)) if cs.q_max >= 2 else None,
            "degenerate": degenerate,
            "M2": M2,
            "M4": report.get("M4"),
            "M2_per_N": M2 / point["N"] if point["N"] else None,
            "U4": report.get("U4"),
            "kurtosis": report.get("kurtosis")
        }
