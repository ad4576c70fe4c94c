"""Command-line front end: classify, tables --paper, check."""

import argparse
import logging
import sys

from . import acceptance, config
from .classify import classify, family_table, reference_tables
from .errors import USAGE_ERRORS, TorusDashError, UnsupportedShapeError
from .loaders import parse_spec
from .utils import frame_to_json_lines, frame_to_tsv

LOGGER = logging.getLogger(__name__)


def _non_negative_int(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {value}")
    return value


def build_parser():
    parser = argparse.ArgumentParser(
        prog="torusdash",
        description="Classify torus manifolds with non-abelian symmetry by admissible 5-tuples",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging on stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classify one group spec, e.g. SU(2)xT^1")
    p.add_argument("spec", help="FACTOR(xFACTOR)*(xT^n)?, factors SU(n), SO(n), Spin(n), Sp(n)")
    p.add_argument("--json", action="store_true", help="one JSON record per class")
    p.add_argument("--family", action="store_true", help="connected-sum family for SO(2l) shapes")
    p.add_argument(
        "--psi-bound", type=_non_negative_int, default=None,
        help=f"largest |psi weight| (default {config.PSI_BOUND_DEFAULT}, env {config.PSI_BOUND_ENV})",
    )

    t = sub.add_parser("tables", help="print the reference tables")
    t.add_argument(
        "--paper", "--reference", dest="paper", action="store_true", required=True,
        help="all seven golden classification tables",
    )
    t.add_argument("--json", action="store_true", help="JSON lines with a 'table' field")

    sub.add_parser("check", help="run the acceptance suite")
    return parser


def _classify_command(args):
    spec = parse_spec(args.spec)
    if args.family and spec.so_even_factors:
        try:
            table = family_table(spec)
        except UnsupportedShapeError:
            LOGGER.debug("%s has no family answer, enumerating instead", spec.label)
        else:
            render = frame_to_json_lines if args.json else frame_to_tsv
            sys.stdout.write(render(table))
            return config.EXIT_OK
    table = classify(spec, args.psi_bound)
    if args.json:
        sys.stdout.write(frame_to_json_lines(table, config.RECORD_FIELDS))
    else:
        sys.stdout.write(frame_to_tsv(table, config.TABLE_COLUMNS))
    return config.EXIT_OK


def _tables_command(args):
    chunks = []
    for name, table in reference_tables().items():
        if args.json:
            table = table.copy()
            table.insert(0, "table", name)
            chunks.append(frame_to_json_lines(table))
        else:
            chunks.append(f"# {name}\n" + frame_to_tsv(table))
    sys.stdout.write("".join(chunks) if args.json else "\n".join(chunks))
    return config.EXIT_OK


COMMANDS = {
    "classify": _classify_command,
    "tables": _tables_command,
    "check": lambda args: acceptance.main(),
}


def run(argv=None):
    """
    Run the command line and return the exit code.

    Args:
        argv: Argument list without the program name (default sys.argv[1:])

    Returns:
        0 on success, 1 on classification or acceptance failure, 2 on usage errors

    Example:
        run(["classify", "SU(2)xSU(2)"])  # prints the one-row table, returns 0
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else config.EXIT_USAGE_ERROR

    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format=config.LOG_FORMAT,
        stream=sys.stderr,
    )
    try:
        return COMMANDS[args.command](args)
    except USAGE_ERRORS as e:
        print(f"error: {e}", file=sys.stderr)
        return config.EXIT_USAGE_ERROR
    except TorusDashError as e:
        LOGGER.debug("classification failed", exc_info=True)
        print(f"error: {e}", file=sys.stderr)
        return config.EXIT_CLASSIFICATION_ERROR


def main():
    sys.exit(run())
