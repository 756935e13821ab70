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

from core.components import exceptions
from core.components.plugin import scan_plugin_base
from core.model.lattice_model import ModelSpec


class ScanPlugin(scan_plugin_base.ScanPluginBase):

    plugin_info = {
        "name": "aa_variance",
        "show_name": "AA 模型极化方差",
        "description": "Aubry-Andre 模型在 FDD / FDLD 两种方案下的矩与累积量",
        "cli_name": "aa-variance",
        "parity_check": True
    }

    param_columns = ["fib_index", "L", "N", "W", "mu"]
    columns = ["degenerate", "X_expect", "M2", "M4", "M2_per_N", "U4",
               "C1", "C2", "C3", "C4", "C2_per_N", "skew", "kurtosis", "rel_diff"]
    plot_axes = {"x": "mu", "y": "M2_per_N", "series": "W"}

    params_schema = {
        "type": "object",
        "required": ["fib_index_list", "W_list", "mu_list", "scheme"],
        "properties": {
            "fib_index_list": {
                "type": "array",
                "items": {"type": "integer", "minimum": 3},
                "minItems": 1
            },
            "N": {"type": ["integer", "null"], "minimum": 1},
            "W_list": {
                "type": "array",
                "items": {"type": "number"},
                "minItems": 1
            },
            "mu_list": {
                "type": "array",
                "items": {"type": "integer", "minimum": 1},
                "minItems": 1
            },
            "scheme": {"enum": ["fdd", "fdld", "both"]},
            "t": {"type": "number"},
            "phase_offset": {"type": "number"}
        }
    }

    def __init__(self, params):
        super(ScanPlugin, self).__init__(params)
        self._char_seqs = lru.LRU(16)
        self._q_max = max(self.q_max_for(mu) for mu in self.params["mu_list"])

    @classmethod
    def add_arguments(cls, parser):
        parser.add_argument("--fib-index", help="Size selectors n, L = F_n", type=int, nargs="+", required=True)
        parser.add_argument("--N", help="Particle count, default nearest opposite-parity half filling",
                            type=int, default=None)
        parser.add_argument("--w-list", help="Potential strengths W/t", type=float, nargs="+",
                            default=[1.99, 2.0, 2.01])
        parser.add_argument("--mu-max", help="Scan accuracy orders 1..mu_max", type=int, default=6)
        parser.add_argument("--scheme", help="Moment extraction scheme", choices=["fdd", "fdld", "both"],
                            default="both")
        parser.add_argument("--t", help="Hopping energy", type=float, default=1.0)
        parser.add_argument("--phase-offset", help="Phase of the quasiperiodic potential", type=float, default=0.0)

    @classmethod
    def params_from_args(cls, args):
        return {
            "fib_index_list": args.fib_index,
            "N": args.N,
            "W_list": args.w_list,
            "mu_list": list(range(1, args.mu_max + 1)),
            "scheme": args.scheme,
            "t": args.t,
            "phase_offset": args.phase_offset
        }

    def mutant(self):
        number_theory = self.lattice_tools.number_theory
        for fib_index in self.params["fib_index_list"]:
            L = number_theory.fibonacci(fib_index)
            N = self.params.get("N") or number_theory.opposite_parity_half_filling(L)
            for W in self.params["W_list"]:
                for mu in self.params["mu_list"]:
                    yield {"fib_index": fib_index, "L": L, "N": N, "W": W, "mu": mu}

    def _char_seq(self, fib_index, N, W):
        key = (fib_index, N, W)
        if key in self._char_seqs:
            return self._char_seqs[key]
        spec = ModelSpec.aubry_andre(fib_index, W, t=self.params.get("t", 1.0),
                                     phase_offset=self.params.get("phase_offset", 0.0))
        state = self.lattice_tools.lattice_models.ground_state(spec, N)
        cs = self.lattice_tools.slater.char_seq(state, min(self._q_max, spec.L - 1))
        self._char_seqs[key] = (cs, state.degenerate_flag)
        return cs, state.degenerate_flag

    def check(self, point):
        tools = self.lattice_tools
        cs, degenerate = self._char_seq(point["fib_index"], point["N"], point["W"])
        N = point["N"]
        scheme = self.params["scheme"]
        result = {"degenerate": degenerate}
        try:
            result["X_expect"] = tools.slater.resta_polarization(cs)[1]
        except exceptions.PolarizationUndefined:
            result["X_expect"] = None

        if scheme in ("fdd", "both"):
            report = tools.diagnostics.fdd_report(cs, point["mu"])
            result.update({
                "M2": report.get("M2"),
                "M4": report.get("M4"),
                "M2_per_N": report.get("M2") / N,
                "U4": report.get("U4")
            })
        if scheme in ("fdld", "both"):
            report = tools.genfun_calculus.fdld_cumulants(cs, point["mu"])
            for name in ("C1", "C2", "C3", "C4", "skew", "kurtosis"):
                result[name] = report.get(name)
            if report.get("C2") is not None:
                result["C2_per_N"] = report.get("C2") / N
        if result.get("M2") and result.get("C2") is not None:
            result["rel_diff"] = abs(result["C2"] - result["M2"]) / result["M2"]
        return result

    def summarize(self, rows):
        """
        对每组 (W, mu) 拟合 M2/N ~ L^p
        """
        if self.params["scheme"] == "fdld":
            return {}
        groups = {}
        for row in rows:
            value = row.values.get("M2_per_N")
            if row.failed or value is None or value <= 0:
                continue
            key = (row.values["W"], row.values["mu"])
            groups.setdefault(key, []).append((row.values["L"], value))

        scaling = []
        for (W, mu), points in sorted(groups.items()):
            if len({L for L, _ in points}) < 2:
                continue
            exponent, prefactor = self.lattice_tools.diagnostics.fit_power_law(
                [L for L, _ in points], [value for _, value in points])
            scaling.append({"W": W, "mu": mu, "exponent": exponent, "prefactor": prefactor})
        return {"M2_per_N_scaling": scaling}
