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


class ScanPlugin(scan_plugin_base.ScanPluginBase):

    plugin_info = {
        "name": "berry",
        "show_name": "二能级回路 Berry 相位",
        "description": "二能级回路的离散 Berry 相位与路径生成函数的 U4",
        "cli_name": "berry",
        "parity_check": False
    }

    param_columns = ["M", "offset", "radius_x"]
    columns = ["berry_phase", "crossed", "gamma1_abs", "U4"]
    plot_axes = {"x": "offset", "y": "berry_phase", "series": "M"}

    params_schema = {
        "type": "object",
        "required": ["M_list", "offset_list"],
        "properties": {
            "M_list": {
                "type": "array",
                "items": {"type": "integer", "minimum": 4},
                "minItems": 1
            },
            "offset_list": {
                "type": "array",
                "items": {"type": "number"},
                "minItems": 1
            },
            "radius_x": {"type": "number"},
            "mu": {"type": "integer", "minimum": 1}
        }
    }

    @classmethod
    def add_arguments(cls, parser):
        parser.add_argument("--M", help="Path lengths", type=int, nargs="+", default=[50, 100, 200])
        parser.add_argument("--offset-grid", help="Centre offset h_z as start:stop:step", type=str,
                            default="0:2:0.5")
        parser.add_argument("--rx", help="Ellipse radius along sigma_x, 0 runs through the degeneracy",
                            type=float, default=1.0)
        parser.add_argument("--mu", help="Accuracy order of the path U4", type=int, default=1)

    @classmethod
    def params_from_args(cls, args):
        return {
            "M_list": args.M,
            "offset_list": common.parse_grid(args.offset_grid),
            "radius_x": args.rx,
            "mu": args.mu
        }

    def mutant(self):
        for M in self.params["M_list"]:
            for offset in self.params["offset_list"]:
                yield {"M": M, "offset": offset, "radius_x": self.params.get("radius_x", 1.0)}

    def check(self, point):
        bargmann = self.lattice_tools.bargmann
        path = bargmann.two_level_path(point["M"], center=(point["offset"], 0.0),
                                       radii=(1.0, point["radius_x"]))
        try:
            phase = bargmann.discrete_berry_phase(path)
            crossed = False
        except exceptions.DegeneracyCrossed:
            phase = None
            crossed = True

        mu = self.params.get("mu", 1)
        cs = bargmann.path_char_seq(path, self.q_max_for(mu))
        report = self.lattice_tools.diagnostics.fdd_report(cs, mu)
        return {
            "berry_phase": phase,
            "crossed": crossed,
            "gamma1_abs": abs(cs.at(1)),
            "U4": report.get("U4")
        }
