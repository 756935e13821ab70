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
import sys
import platform
import argparse

main_path = os.path.abspath(__file__)
main_path = os.path.dirname(main_path)
sys.path.append(main_path)

from core.components.config import Config

SCAN_PLUGINS = ("fermi_obc", "fermi_pbc", "ssh", "aa_variance", "aa_fidelity", "zeckendorf", "berry")


def init_check():
    version = tuple(int(item) for item in platform.python_version_tuple()[:2])
    if version < (3, 6):
        print("[!] You must run this tool with Python 3.6 or newer version.")
        sys.exit(1)

    try:
        import numpy, scipy, sympy, jsonschema, lru, psutil, yaml, cloghandler, dictdiffer
    except ModuleNotFoundError as e:
        print(e, ", use command 'pip3 install -r requirements.txt' to install dependency packages.")
        sys.exit(1)


def scan(args):
    """
    运行一个扫描子命令
    """
    Config().load_config(args.config_path)

    if os.environ.get("GEOBINDER_TEST_MODE", "0") != "1":
        init_check()

    real_log_path = os.path.realpath(Config().get_config("log.path"))
    log_level = Config().get_config("log.level").upper()
    print("[-] Log file will generate to {}, log level: {}".format(real_log_path, log_level))

    from core.components import exceptions
    from core.components.scan_config import ScanConfig
    from core.launcher import run_scan

    try:
        params = args.plugin_cls.params_from_args(args)
        scan_config = ScanConfig(args.subcommand, params, args.out, args.manifest,
                                 args.plot_script, args.threads)
        rows = run_scan(scan_config)
    except ValueError as e:
        print("[!] Invalid argument: {}".format(e))
        sys.exit(1)
    except exceptions.GeoException as e:
        print("[!] {}".format(e))
        sys.exit(1)

    failed = len([row for row in rows if row.failed])
    print("[-] {} rows written to {}, {} failed.".format(len(rows), args.out, failed))


def set_config(args):
    """
    生成并修改配置文件
    """
    Config().generate_config(args.output_path)
    Config().load_config(Config().get_config_path())
    if args.log_level is not None:
        Config().config_dict["log.level"] = args.log_level
    if args.threads is not None:
        Config().config_dict["scan.threads"] = args.threads
    Config().save_config()


def show_version(args):
    with open(os.path.join(main_path, "VERSION")) as f:
        print("geobinder v{}".format(f.read().strip()))


def add_scan_parsers(subparsers):
    """
    每个扫描插件注册一个子命令
    """
    from core.components.scanner_manager import get_plugin_class

    for plugin_name in SCAN_PLUGINS:
        plugin_cls = get_plugin_class(plugin_name)
        info = plugin_cls.plugin_info
        parser_scan = subparsers.add_parser(info["cli_name"], help=info["description"])
        parser_scan.set_defaults(func=scan, plugin_cls=plugin_cls, subcommand=info["cli_name"])
        parser_scan.add_argument("--out", help="Output csv path", required=True)
        parser_scan.add_argument("--manifest", help="Output manifest path, default <out>.json", default=None)
        parser_scan.add_argument("--threads", help="Worker process count", type=int, default=None)
        parser_scan.add_argument("--plot-script", help="Generate a matplotlib script rendering the csv",
                                 default=None)
        parser_scan.add_argument(
            "-c", "--config-path", help="Assign config file path, like /path/to/config.yaml")
        plugin_cls.add_arguments(parser_scan)


def run():
    parser = argparse.ArgumentParser(usage='%(prog)s [options]')

    subparsers = parser.add_subparsers(title="options")

    add_scan_parsers(subparsers)

    # 显示版本
    parser_version = subparsers.add_parser('version', help='show version')
    parser_version.set_defaults(func=show_version)

    # 修改配置
    parser_config = subparsers.add_parser('config', help='config help')
    parser_config.set_defaults(func=set_config)

    # 输出路径
    parser_config.add_argument(
        "-o", "--output-path",
        help="Assign path config file path to generate, default is /home/username/geobinder/config.yaml",
        type=str, default=None, nargs='?')

    # log
    parser_config.add_argument(
        "-l", "--log-level", help="Assign log level", choices=['DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL'])

    # 并发
    parser_config.add_argument(
        "-t", "--threads", help="Assign default worker process count", type=int)

    args = parser.parse_args()

    if len(vars(args)) == 0:
        parser.print_help()
    else:
        args.func(args)


if __name__ == '__main__':
    run()
