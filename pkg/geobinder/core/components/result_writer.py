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
import csv
import json
import math
import numbers

import jsonschema
import numpy as np

from core.components import exceptions
from core.components.logger import Logger
from core.components.config import Config


PLOT_SCRIPT_TEMPLATE = '''#!/usr/bin/env python3
# -*- coding: UTF-8 -*-
# generated by geobinder {version} for subcommand "{subcommand}"

import csv
import collections

import matplotlib
import matplotlib.pyplot as plt

matplotlib.rcParams.update({{
    "font.size": 9,
    "axes.labelsize": 9,
    "legend.fontsize": 8,
    "xtick.labelsize": 8,
    "ytick.labelsize": 8,
    "lines.linewidth": 1.0,
    "lines.markersize": 3,
    "figure.figsize": (3.4, 2.6),
    "savefig.dpi": 300
}})

CSV_PATH = {csv_path!r}
X, Y, SERIES = {x!r}, {y!r}, {series!r}
NA = {na!r}

curves = collections.OrderedDict()
with open(CSV_PATH) as f:
    for row in csv.DictReader(f):
        if row[X] == NA or row[Y] == NA:
            continue
        key = row[SERIES] if SERIES else ""
        curves.setdefault(key, ([], []))
        curves[key][0].append(float(row[X]))
        curves[key][1].append(float(row[Y]))

fig, ax = plt.subplots()
for key, (xs, ys) in curves.items():
    label = "{{}}={{}}".format(SERIES, key) if SERIES else None
    ax.plot(xs, ys, marker="o", label=label)
ax.set_xlabel(X)
ax.set_ylabel(Y)
if SERIES:
    ax.legend()
fig.tight_layout()
fig.savefig(CSV_PATH.rsplit(".", 1)[0] + ".pdf")
'''


class ResultWriter(object):
    """
    输出 CSV 结果, JSON manifest 与绘图脚本
    """

    manifest_schema = {
        "type": "object",
        "required": ["tool", "version", "subcommand", "config", "params", "columns",
                     "rows", "failed_rows", "warnings", "summary", "wall_time", "started_at"],
        "properties": {
            "tool": {"type": "string"},
            "version": {"type": "string"},
            "subcommand": {"type": "string"},
            "config": {"type": "object"},
            "params": {"type": "object"},
            "columns": {
                "type": "array",
                "items": {"type": "string"},
                "minItems": 1
            },
            "rows": {"type": "integer", "minimum": 0},
            "failed_rows": {
                "type": "array",
                "items": {
                    "type": "object",
                    "required": ["index", "error"],
                    "properties": {
                        "index": {"type": "integer", "minimum": 0},
                        "error": {"type": "string"}
                    }
                }
            },
            "warnings": {
                "type": "array",
                "items": {"type": "string"}
            },
            "summary": {"type": "object"},
            "wall_time": {"type": "number", "minimum": 0},
            "started_at": {"type": "string"}
        }
    }

    manifest_validator = jsonschema.Draft7Validator(manifest_schema)

    def __init__(self):
        self._na = Config().get_config("scan.na_sentinel")
        self._float_fmt = "{{:.{}g}}".format(Config().get_config("scan.float_digits"))

    def format_cell(self, value):
        """
        单元格格式化: 浮点数固定有效位数, 无效值输出占位符
        """
        if value is None:
            return self._na
        if isinstance(value, (bool, np.bool_)):
            return "1" if value else "0"
        if isinstance(value, numbers.Integral):
            return str(int(value))
        if isinstance(value, numbers.Real):
            value = float(value)
            if not math.isfinite(value):
                return self._na
            return self._float_fmt.format(value)
        return str(value)

    def write_csv(self, path, header, rows):
        """
        Parameters:
            path - str, 输出路径
            header - list, 列名
            rows - list, 按网格顺序排列的 ScanRow
        """
        self._prepare_dir(path)
        with open(path, "w", newline="") as f:
            writer = csv.writer(f, lineterminator="\n")
            writer.writerow(header)
            for row in rows:
                values = dict(row.values)
                values["error"] = row.error
                writer.writerow([self.format_cell(values.get(name)) for name in header])
        Logger().info("Wrote {} rows to {}".format(len(rows), path))

    def write_manifest(self, path, manifest):
        """
        Raises:
            exceptions.ManifestInvalid - manifest 不符合 schema
        """
        manifest = self.to_json_value(manifest)
        try:
            self.manifest_validator.validate(manifest)
        except jsonschema.exceptions.ValidationError as e:
            raise exceptions.ManifestInvalid(e.message)
        self._prepare_dir(path)
        with open(path, "w") as f:
            json.dump(manifest, f, indent=2, sort_keys=True, allow_nan=False)
            f.write("\n")

    def write_plot_script(self, path, subcommand, version, csv_path, plot_axes):
        self._prepare_dir(path)
        content = PLOT_SCRIPT_TEMPLATE.format(
            version=version,
            subcommand=subcommand,
            csv_path=os.path.abspath(csv_path),
            x=plot_axes["x"],
            y=plot_axes["y"],
            series=plot_axes["series"],
            na=self._na
        )
        with open(path, "w") as f:
            f.write(content)

    def _prepare_dir(self, path):
        target_dir = os.path.dirname(os.path.abspath(path))
        if not os.path.exists(target_dir):
            os.makedirs(target_dir)

    @classmethod
    def to_json_value(cls, value):
        """
        转换为纯 JSON 值: numpy 标量转为 Python 类型, 非有限浮点数转为 null
        """
        if isinstance(value, dict):
            return {str(k): cls.to_json_value(v) for k, v in value.items()}
        if isinstance(value, (list, tuple, np.ndarray)):
            return [cls.to_json_value(v) for v in value]
        if value is None or isinstance(value, str):
            return value
        if isinstance(value, (bool, np.bool_)):
            return bool(value)
        if isinstance(value, numbers.Integral):
            return int(value)
        if isinstance(value, numbers.Real):
            value = float(value)
            return value if math.isfinite(value) else None
        return str(value)
