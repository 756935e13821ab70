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

from core.components import common
from core.components import exceptions
from core.components.plugin import scan_plugin_base
from core.model.lattice_model import ModelSpec
from core.model.path_model import BlochBand


class ScanPlugin(scan_plugin_base.ScanPluginBase):

    plugin_info = {
        "name": "ssh",
        "show_name": "SSH 能隙闭合",
        "description": "SSH 链的 U4 与 Zak 相位随交替跃迁 delta_J 的变化",
        "cli_name": "ssh",
        "parity_check": False
    }

    param_columns = ["L", "dJ", "mu"]
    columns = ["Z1_abs", "M2", "M4", "U4", "U4_times_L", "zak_phase", "c2"]
    plot_axes = {"x": "dJ", "y": "U4", "series": "L"}

    params_schema = {
        "type": "object",
        "required": ["L_list", "dJ_list", "mu_list"],
        "properties": {
            "L_list": {
                "type": "array",
                "items": {"type": "integer", "minimum": 4, "multipleOf": 2},
                "minItems": 1
            },
            "dJ_list": {
                "type": "array",
                "items": {"type": "number"},
                "minItems": 1
            },
            "mu_list": {
                "type": "array",
                "items": {"type": "integer", "minimum": 1},
                "minItems": 1
            },
            "J_mean": {"type": "number"},
            "embedding": {"enum": ["site", "cell"]},
            "real_space": {"type": "boolean"}
        }
    }

    def __init__(self, params):
        super(ScanPlugin, self).__init__(params)
        self._char_seqs = lru.LRU(64)
        self._q_max = max(self.q_max_for(mu) for mu in self.params["mu_list"])

    @classmethod
    def add_arguments(cls, parser):
        parser.add_argument("--L-list", help="Site counts (even)", type=int, nargs="+", required=True)
        parser.add_argument("--dj-grid", help="delta_J grid as start:stop:step", type=str, default="-0.5:0.5:0.05")
        parser.add_argument("--J-mean", help="Mean hopping", type=float, default=1.0)
        parser.add_argument("--mu", help="Accuracy orders", type=int, nargs="+", default=[1])
        parser.add_argument("--embedding", help="Orbital positions inside the cell", choices=["site", "cell"],
                            default="site")
        parser.add_argument("--real-space", help="Use the real-space periodic chain instead of Bloch vectors",
                            action="store_true")

    @classmethod
    def params_from_args(cls, args):
        return {
            "L_list": args.L_list,
            "dJ_list": common.parse_grid(args.dj_grid),
            "J_mean": args.J_mean,
            "mu_list": args.mu,
            "embedding": args.embedding,
            "real_space": args.real_space
        }

    def mutant(self):
        for L in self.params["L_list"]:
            for dJ in self.params["dJ_list"]:
                for mu in self.params["mu_list"]:
                    yield {"L": L, "dJ": dJ, "mu": mu}

    def _char_seq(self, L, dJ):
        key = (L, dJ)
        if key in self._char_seqs:
            return self._char_seqs[key]
        J_mean = self.params.get("J_mean", 1.0)
        if self.params.get("real_space"):
            spec = ModelSpec.ssh_from_mean(L, J_mean, dJ)
            state = self.lattice_tools.lattice_models.ground_state(spec, L // 2)
            cs = self.lattice_tools.slater.char_seq(state, min(self._q_max, L - 1))
        else:
            if L % 2 != 0:
                raise exceptions.OddSSHLength("L = {}".format(L))
            band = BlochBand(J_mean + dJ, J_mean - dJ, L // 2, self.params.get("embedding", "site"))
            cs = self.lattice_tools.bargmann.bloch_char_seq(band, min(self._q_max, L // 2 - 1))
        self._char_seqs[key] = cs
        return cs

    def check(self, point):
        tools = self.lattice_tools
        cs = self._char_seq(point["L"], point["dJ"])
        report = tools.diagnostics.fdd_report(cs, point["mu"])
        U4 = report.get("U4")
        try:
            zak_phase = tools.slater.resta_polarization(cs)[0]
        except exceptions.PolarizationUndefined:
            zak_phase = None
        cumulants = tools.genfun_calculus.fdld_cumulants(cs, point["mu"], n_max=2)
        return {
            "Z1_abs": abs(cs.at(1)),
            "M2": report.get("M2"),
            "M4": report.get("M4"),
            "U4": U4,
            "U4_times_L": U4 * point["L"] if U4 is not None else None,
            "zak_phase": zak_phase,
            "c2": cumulants.get("c2")
        }
