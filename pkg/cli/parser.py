"""
Argument parser for the nullfil command line.

Global options are attached to every subcommand so they may follow the
command name, e.g. `nullfil classify --algebra 3 "x1 x2 - x2 x1"`. Polynomials
that start with a minus sign follow `--`, e.g. `nullfil reduce --algebra 3 -- -x1^2`.
"""

import argparse
from typing import Optional

from application.verification_service import VerificationService
from core.algebra import AlgebraHandle
from core.exceptions import NullfilError
from core.scalars import ScalarField

POLYNOMIAL_HELP = "polynomial text; put -- before text starting with a minus sign"


def _algebra(text: str) -> AlgebraHandle:
    try:
        return AlgebraHandle.parse(text)
    except NullfilError as exc:
        raise argparse.ArgumentTypeError(exc.message) from exc


def _field(text: str) -> ScalarField:
    try:
        return ScalarField.parse_spec(text)
    except NullfilError as exc:
        raise argparse.ArgumentTypeError(exc.message) from exc


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected an integer, got '{text}'") from exc
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _common_options(require_algebra: bool) -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--algebra",
        type=_algebra,
        required=require_algebra,
        default=None,
        metavar="N|inf",
        help="target algebra: L_N or L_inf",
    )
    common.add_argument(
        "--field",
        type=_field,
        default=ScalarField.rationals(),
        metavar="q|fp:P",
        help="scalar field (default: q)",
    )
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument(
        "--log-level", choices=("DEBUG", "INFO", "WARNING", "ERROR"), default=None,
        type=str.upper,
    )
    common.add_argument("--log-format", choices=("text", "json"), default=None)
    common.add_argument("--config", default=None, metavar="PATH", help="YAML settings file")
    return common


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nullfil",
        description="Polynomial identities and images on null-filiform Leibniz algebras.",
    )
    commands = parser.add_subparsers(dest="command", metavar="COMMAND")
    commands.required = True
    with_algebra = [_common_options(require_algebra=True)]
    without_algebra = [_common_options(require_algebra=False)]

    for name, summary in (
        ("reduce", "left-normed expansion and normal form"),
        ("identity", "decide whether a polynomial is an identity"),
        ("classify", "describe the image of a multihomogeneous polynomial"),
    ):
        command = commands.add_parser(name, parents=with_algebra, help=summary)
        command.add_argument("polynomial", help=POLYNOMIAL_HELP)

    command = commands.add_parser(
        "preimage", parents=with_algebra, help="find an assignment hitting a target element"
    )
    command.add_argument("polynomial", help=POLYNOMIAL_HELP)
    command.add_argument("--target", required=True, metavar="ELEMENT")

    command = commands.add_parser("eval", parents=with_algebra, help="evaluate on elements")
    command.add_argument("polynomial", help=POLYNOMIAL_HELP)
    command.add_argument(
        "--assign",
        action="append",
        default=[],
        metavar="x<k>=ELEMENT",
        help="value of one variable (repeatable)",
    )

    command = commands.add_parser(
        "dim", parents=with_algebra, help="dimension of the relatively free algebra"
    )
    command.add_argument("--m", type=_positive, required=True)

    command = commands.add_parser("basis", parents=with_algebra, help="canonical basis words")
    command.add_argument("--m", type=_positive, required=True)
    command.add_argument("--max-degree", type=_positive, default=None)
    command.add_argument("--words", action="store_true", help="list the words")

    command = commands.add_parser("codim", parents=with_algebra, help="multilinear codimension")
    command.add_argument("--m", type=_positive, required=True)

    command = commands.add_parser(
        "verify", parents=without_algebra, help="run the self-verification suites"
    )
    command.add_argument("--seed", type=int, default=None)
    command.add_argument(
        "--suite", action="append", choices=VerificationService.SUITES, default=None
    )
    return parser


def parse_args(argv: Optional[list] = None) -> argparse.Namespace:
    return build_parser().parse_args(argv)
