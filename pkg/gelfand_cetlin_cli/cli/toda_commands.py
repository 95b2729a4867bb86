"""
Commands relating the potential of full flag manifolds to the Toda lattice
"""

import logging

import click

from gelfand_cetlin_cli.config import config
from gelfand_cetlin_cli.config.log import init_logger
from gelfand_cetlin_cli.cli.params import (
    emit,
    lambda_option,
    out_option,
    polytope_from_options,
    seed_option,
)
from gelfand_cetlin_cli.flagcombi import FlagType
from gelfand_cetlin_cli.potential import build_potential
from gelfand_cetlin_cli.toda import level_set_check, phase_critical_points

logger = logging.getLogger(__name__)


@click.command()
@lambda_option
@seed_option
@click.option(
    "--max-starts",
    type=click.IntRange(min=1),
    default=config["potential"]["max_starts"],
    show_default=True,
    help="Number of multi-start Newton starting points",
)
@out_option
def toda(lambda_, seed, max_starts, out):
    """
    Critical points of the phase function f_q of the full flag manifold
    with strictly decreasing lambda, and the Toda level-set diagnostic at
    the critical points of the potential (T = e^-1)

    \b
    Example:
      \b
      gc toda --lambda 2,0,-2
    """
    init_logger()

    if len(lambda_) < 2:
        raise click.BadParameter(
            "❌ The Toda lattice needs at least two weights", param_hint="--lambda"
        )
    flag = FlagType.full(len(lambda_))
    poly = polytope_from_options(flag, lambda_, "top-down")
    try:
        phase_points = phase_critical_points(
            poly.lambda_, seed=seed, max_starts=max_starts
        )
        level_set = level_set_check(
            build_potential(poly), seed=seed, max_starts=max_starts
        )
    except ValueError as e:
        raise click.ClickException(str(e)) from e

    report = {
        "n": flag.n,
        "lambda": list(poly.lambda_),
        "phase_critical_points": len(phase_points),
        "phase_constraint_residual": max(
            (pc.constraint_residual() for pc in phase_points), default=0.0
        ),
        "level_set": level_set,
    }
    return emit(report, out)
