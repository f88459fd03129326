#!/usr/bin/env python3

import os

from typing import List

import src.api.config

from src.api.utils import open_file
from src.api.config import OPTIONS
from src.api import errmsg
from src.eph import args_parser

__all__ = ["parse_options"]

# Command line dest -> option name
OPTION_ARGS = {
    "sigma": "sigma",
    "sigma_breve": "sigma_breve",
    "s": "s",
    "varsigma": "varsigma",
    "backend": "backend",
    "seed": "seed",
    "trials": "trials",
    "samples": "samples",
    "json_output": "json_output",
    "json_indent": "json_indent",
    "debug": "debug_level",
    "stderr": "stderr_filename",
    "output_file": "output_filename",
    "hide_warning_codes": "hide_warning_codes",
}


def parse_options(args: List[str] = None):
    """Parses command line options and setup global Options container"""
    parser = args_parser.parser()
    options = parser.parse_args(args=args)

    config_file = getattr(options, "config_file", None) or OPTIONS.project_filename
    if os.path.isfile(config_file):
        if src.api.config.load_config_from_file(config_file, src.api.config.ConfigSections.EPH):
            errmsg.info(f"Config file {config_file} loaded")
    elif getattr(options, "config_file", None):
        parser.error(f"No such file or directory: '{config_file}'")

    # ------------------------------------------------------------
    # Setting of internal parameters according to command line
    # ------------------------------------------------------------
    for dest, name in OPTION_ARGS.items():
        value = getattr(options, dest, None)
        if value is not None:
            OPTIONS[name].value = value

    if OPTIONS.trials < 0:
        parser.error(f"Invalid --trials value {OPTIONS.trials}")

    # region [Enable/Disable Warnings]
    enabled_warnings = set(getattr(options, "enable_warning", None) or [])
    disabled_warnings = set(getattr(options, "disable_warning", None) or [])
    duplicated_options = [f"W{x}" for x in enabled_warnings.intersection(disabled_warnings)]

    if duplicated_options:
        parser.error(f"Warning(s) {', '.join(duplicated_options)} cannot be enabled " f"and disabled simultaneously")

    for warn_code in enabled_warnings:
        errmsg.enable_warning(warn_code)

    for warn_code in disabled_warnings:
        errmsg.disable_warning(warn_code)

    # endregion

    OPTIONS.seed = src.api.config.seed_from_env(OPTIONS.seed)

    if getattr(options, "save_config", None):
        src.api.config.save_config_into_file(options.save_config, src.api.config.ConfigSections.EPH)

    if options.command == "figure" and not OPTIONS.output_filename:
        OPTIONS.output_filename = options.NAME + os.path.extsep + "svg"

    if getattr(options, "INPUT", None) and not os.path.exists(options.INPUT):
        parser.error("No such file or directory: '%s'" % options.INPUT)

    if OPTIONS.stderr_filename:
        OPTIONS.stderr = open_file(OPTIONS.stderr_filename, "wt", "utf-8")

    return options
