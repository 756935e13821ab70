#!/usr/bin/env python3
# -*- coding: UTF-8 -*-

import setuptools

packages = [
    "geobinder",
    "geobinder.core",
    "geobinder.core.components",
    "geobinder.core.components.plugin",
    "geobinder.core.components.lattice_tools",
    "geobinder.core.model",
    "geobinder.core.modules",
    "geobinder.plugin",
    "geobinder.plugin.scanner"
]

try:
    with open("geobinder/requirements.txt") as f:
        req_str = f.read()
    install_requires = [line for line in req_str.split("\n") if line]
except Exception:
    install_requires = []

entry_points = {
    "console_scripts": [
        "geobinder=geobinder.main:run"
    ]
}


setuptools.setup(
    name='geobinder',
    version='v1.0',
    description='Geometric Binder cumulants and polarization diagnostics for 1D lattice models',
    long_description="Geometric Binder cumulants and polarization diagnostics for 1D lattice models",
    author='geobinder',
    packages=packages,
    install_requires=install_requires,
    package_dir={"geobinder": "geobinder"},
    package_data={"geobinder": ["VERSION", "config.default.yaml"]},
    include_package_data=True,
    entry_points=entry_points,
    platforms=["linux"],
    python_requires='>=3.6',
    license="Apache-2.0"
)
