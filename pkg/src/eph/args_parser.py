# -*- coding: utf-8 -*-

import argparse

from src.api import errmsg
from src.api.config import BACKENDS, OPTIONS, SIGNS
from src.figures import figure_names

from .version import VERSION


def parse_warning_option(code: str) -> str:
    if not errmsg.is_valid_warning_code(code):
        raise argparse.ArgumentTypeError(f"Invalid warning option 'W{code}'")
    return code


def common_parser() -> argparse.ArgumentParser:
    """Options accepted both before and after the subcommand. Unset options
    are left out of the namespace so config file values survive.
    """
    common = argparse.ArgumentParser(add_help=False, prefix_chars="-+", argument_default=argparse.SUPPRESS)

    signs = common.add_argument_group("signature context")
    signs.add_argument("--sigma", type=int, choices=SIGNS, help=f"Point space signature (default {OPTIONS.sigma})")
    signs.add_argument(
        "--sigma-breve", type=int, choices=SIGNS, help="Cycle space signature (defaults to --sigma)"
    )
    signs.add_argument("--s", type=int, choices=SIGNS, help=f"FSC matrix multiplier (default {OPTIONS.s})")
    signs.add_argument(
        "--varsigma", type=int, choices=SIGNS, help="Centre and focus flavour (defaults to --sigma)"
    )

    common.add_argument(
        "--backend", type=str, choices=BACKENDS, help=f"Number backend (default '{OPTIONS.backend}')"
    )
    common.add_argument("--seed", type=int, help=f"Random seed for verify (default {OPTIONS.seed}, EPH_SEED overrides)")
    common.add_argument("--trials", type=int, help=f"Trials per check and combination (default {OPTIONS.trials})")
    common.add_argument("--samples", type=int, help=f"Samples per drawn cycle (default {OPTIONS.samples})")
    common.add_argument("--json", action="store_true", dest="json_output", help="JSON output")
    common.add_argument("--indent", type=int, dest="json_indent", help=f"JSON indentation (default {OPTIONS.json_indent})")

    common.add_argument(
        "-d",
        "--debug",
        dest="debug",
        action="count",
        help="Enable verbosity/debugging output. Additional -d increase verbosity/debug level",
    )
    common.add_argument(
        "-e", "--errmsg", type=str, dest="stderr", help="Error messages file (standard error console by default)"
    )
    common.add_argument(
        "-W",
        "--disable-warning",
        type=parse_warning_option,
        action="append",
        help="Disables warning WXXX (i.e. -W100 disables warning with code W100)",
    )
    common.add_argument(
        "+W",
        "--enable-warning",
        type=parse_warning_option,
        action="append",
        help="Enables warning WXXX (i.e. +W100 enables warning with code W100)",
    )
    common.add_argument("--hide-warning-codes", action="store_true", help="Hides WXXX codes")
    common.add_argument("-F", "--config-file", type=str, help="Loads config from config file")
    common.add_argument("--save-config", type=str, help="Save options into a config file")
    return common


def _add_document_command(subparsers, name: str, help_: str, common: argparse.ArgumentParser) -> None:
    cmd = subparsers.add_parser(name, help=help_, parents=[common], prefix_chars="-+", allow_abbrev=False)
    cmd.add_argument("INPUT", type=str, nargs="?", default=None, help="JSON document (standard input by default)")
    cmd.add_argument(
        "-o", "--output", type=str, dest="output_file", help="Sets output file (standard output by default)"
    )


# ------------------------------------------------------------
# Command line parser
# ------------------------------------------------------------
def parser() -> argparse.ArgumentParser:
    common = common_parser()
    parser_ = argparse.ArgumentParser(prog="eph", prefix_chars="-+", parents=[common], allow_abbrev=False)
    parser_.add_argument("--version", action="version", version="%(prog)s {0}".format(VERSION))

    subparsers = parser_.add_subparsers(dest="command", metavar="COMMAND")
    subparsers.required = True

    _add_document_command(subparsers, "transform", "Moebius action of SL(2,R) on points and cycles", common)
    _add_document_command(subparsers, "relate", "Orthogonality, ghosts, reflections and intersections", common)
    _add_document_command(subparsers, "measure", "Distances and lengths between two points", common)
    _add_document_command(subparsers, "cayley", "Cayley transforms of points and cycles", common)

    figure = subparsers.add_parser("figure", help="Renders a figure as SVG", parents=[common], prefix_chars="-+", allow_abbrev=False)
    figure.add_argument("NAME", type=str, help=f"Figure name. Available: {', '.join(figure_names())}")
    figure.add_argument("-o", "--output", type=str, dest="output_file", help="Sets output file. Default is NAME.svg")

    verify = subparsers.add_parser(
        "verify", help="Randomised check of the geometric identities", parents=[common], prefix_chars="-+", allow_abbrev=False
    )
    verify.add_argument("--only", type=str, default=None, help="Runs only the checks whose id starts with this prefix")

    return parser_
