"""
Custom click parameter types and helpers shared by the commands
"""

import math
from fractions import Fraction

import click

from gelfand_cetlin_cli.config import config
from gelfand_cetlin_cli.flagcombi import COORD_ORDERS, FlagType
from gelfand_cetlin_cli.gcpoly import GCPolytope, build_polytope
from gelfand_cetlin_cli.utils import dumps_json, parse_rational, write_json


class FlagParamType(click.ParamType):
    """
    Flag type in the compact "n1,...,nr|n" format, e.g. "1,2|3" or "2|4"
    """

    name = "flag"

    def convert(self, value, param, ctx):
        if isinstance(value, FlagType):
            return value
        try:
            return FlagType.from_string(value)
        except ValueError as e:
            self.fail(str(e), param, ctx)


class LambdaParamType(click.ParamType):
    """
    Comma separated rationals, e.g. "2,0,-2" or "1/2,1/2,-1"
    """

    name = "lambda"

    def convert(self, value, param, ctx):
        if isinstance(value, tuple):
            return value
        try:
            return tuple(parse_rational(v) for v in str(value).split(","))
        except ValueError as e:
            self.fail(str(e), param, ctx)


class TParamType(click.ParamType):
    """
    Numeric value of the Novikov parameter: "e-1" for e^-1, or a decimal in
    (0, 1)
    """

    name = "T"

    def convert(self, value, param, ctx):
        if isinstance(value, float):
            T = value
        elif str(value).strip().lower() == "e-1":
            T = math.exp(-1)
        else:
            try:
                T = float(value)
            except ValueError:
                self.fail(f"❌ Not a number or e-1: {value!r}", param, ctx)
        if not 0 < T < 1:
            self.fail(f"❌ T must lie in (0, 1), got {value!r}", param, ctx)
        return T


FLAG = FlagParamType()
LAMBDA = LambdaParamType()
T_VALUE = TParamType()

flag_option = click.option(
    "--flag",
    type=FLAG,
    required=True,
    help='Flag type "n1,...,nr|n", e.g. "1,2|3" or "2|4"',
)
lambda_option = click.option(
    "--lambda",
    "lambda_",
    type=LAMBDA,
    required=True,
    help="Weakly decreasing weights, constant on blocks, e.g. 2,0,-2",
)
order_option = click.option(
    "--order",
    type=click.Choice(COORD_ORDERS),
    default="top-down",
    help="Order of the ladder boxes identifying R^N coordinates",
)
out_option = click.option(
    "--out",
    type=click.Path(exists=False, file_okay=True, dir_okay=False),
    help="Write the JSON report to this path instead of stdout",
)
seed_option = click.option(
    "--seed",
    type=int,
    default=config["potential"]["seed"],
    show_default=True,
    help="Seed of every random generator used by the command",
)


def polytope_from_options(flag: FlagType, lambda_: tuple, order: str) -> GCPolytope:
    """
    Build the polytope, turning invalid flag/lambda pairs into usage errors
    """
    if len(lambda_) != flag.n:
        raise click.BadParameter(
            f"❌ {flag} needs {flag.n} weights, got {len(lambda_)}",
            param_hint="--lambda",
        )
    try:
        return build_polytope(flag, [Fraction(x) for x in lambda_], order)
    except ValueError as e:
        raise click.BadParameter(str(e), param_hint="--lambda") from e


def emit(report: dict, out=None) -> dict:
    """
    Print the report as JSON, or write it to out
    """
    indent = config["cli"]["json_indent"]
    if out:
        write_json(report, out, indent=indent)
        click.echo(f"✅ Wrote report to {out}", err=True)
    else:
        click.echo(dumps_json(report, indent=indent))
    return report
