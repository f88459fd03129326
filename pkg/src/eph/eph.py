#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# vim: ts=4:sw=4:et:

from typing import IO, Any, Dict, Optional

from src.api import config
from src.api import debug
from src.api import errmsg
from src.api import global_ as gl
from src.api.config import OPTIONS
from src.api.constants import BACKEND
from src.api.errors import Error
from src.api.utils import open_file
from src.cycles.context import CycleContext
from src.figures import render_figure
from src.verify import run_suite

from src.eph import jsonio
from src.eph.args_config import parse_options
from src.eph.commands import COMMANDS

__all__ = ["main", "run_command"]


def run_command(command: str, document: Dict[str, Any], ctx: Optional[CycleContext] = None) -> Dict[str, Any]:
    """Runs a document subcommand. A "context" object in the document
    overrides the signs of ctx (or of the command line options).
    """
    if ctx is None:
        ctx = CycleContext.from_options()
    ctx = jsonio.read_context(document.get("context"), ctx)
    backend = BACKEND(document.get("backend", OPTIONS.backend))
    return COMMANDS[command](document, ctx, backend)


def _write(result: Dict[str, Any]) -> None:
    if OPTIONS.output_filename:
        with open_file(OPTIONS.output_filename, "wt", "utf-8") as f:
            jsonio.dump_document(result, f, OPTIONS.json_indent)
        return
    jsonio.dump_document(result, config.console_stdout(), OPTIONS.json_indent)


def _read(input_filename: Optional[str]) -> Dict[str, Any]:
    if input_filename is None:
        return jsonio.load_document(OPTIONS.stdin)

    stream: IO[str]
    with open_file(input_filename, "rt", "utf-8") as stream:
        return jsonio.load_document(stream)


def _verify(only: Optional[str]) -> int:
    report = run_suite(OPTIONS.seed, OPTIONS.trials, OPTIONS.backend, only)
    if OPTIONS.json_output:
        jsonio.dump_document(report.as_dict(), config.console_stdout(), OPTIONS.json_indent)
    else:
        for line in report.summary():
            config.console_stdout().write(line + "\n")

    if not report.ok:
        errmsg.error(f"{report.failures} verification failure(s) (seed {report.seed})")
    return report.exit_code


def _figure(name: str) -> int:
    figure = render_figure(name, OPTIONS.output_filename)
    errmsg.info(f"Figure {name} written to {OPTIONS.output_filename}")
    if OPTIONS.json_output:
        jsonio.dump_document(
            {"figure": figure.name, "caption": figure.caption, "panels": len(figure.panels), "output": OPTIONS.output_filename},
            config.console_stdout(),
            OPTIONS.json_indent,
        )
    return 0


def main(args=None) -> int:
    """Entry point when executed from command line.
    eph can be used as python module. If so, bear in mind this function
    won't be executed unless explicitly called.
    """
    config.init()
    gl.has_errors = gl.has_warnings = 0
    gl.error_msg_cache.clear()

    options = parse_options(args)
    debug.__DEBUG__(f"command {options.command} in context {CycleContext.from_options().as_dict()}")

    try:
        if options.command == "verify":
            return _verify(options.only)

        if options.command == "figure":
            return _figure(options.NAME)

        result = run_command(options.command, _read(options.INPUT))
        _write(result)
    except Error as e:
        errmsg.error(str(e))
        return 2
    except ValueError as e:  # unknown backend in the document
        errmsg.error(f"Invalid input: {e}")
        return 2

    return 0
