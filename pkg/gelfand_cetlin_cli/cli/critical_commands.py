"""
Commands that solve for critical points of the potential function
"""

import logging

import click

from gelfand_cetlin_cli.config import config
from gelfand_cetlin_cli.config.log import init_logger
from gelfand_cetlin_cli.cli.params import (
    T_VALUE,
    emit,
    flag_option,
    lambda_option,
    order_option,
    out_option,
    polytope_from_options,
    seed_option,
)
from gelfand_cetlin_cli.flagcombi import cohomology_rank
from gelfand_cetlin_cli.potential import (
    build_potential,
    critical_points,
    newton_origin_interior,
    non_displaceable_fiber,
    render_potential,
    valuation_discrepancies,
    with_valuations,
)

logger = logging.getLogger(__name__)


def _compare(count: int, rank: int) -> str:
    if count < rank:
        return "less"
    if count > rank:
        return "greater"
    return "equal"


@click.command()
@flag_option
@lambda_option
@click.option(
    "--T",
    "T",
    type=T_VALUE,
    default="e-1",
    show_default=True,
    help='Value of the Novikov parameter, "e-1" or a decimal in (0, 1)',
)
@seed_option
@click.option(
    "--max-starts",
    type=click.IntRange(min=1),
    default=config["potential"]["max_starts"],
    show_default=True,
    help="Number of multi-start Newton starting points",
)
@click.option(
    "--valuations/--no-valuations",
    default=True,
    help="Estimate the valuation of every critical point by continuation",
)
@order_option
@out_option
def critical(flag, lambda_, T, seed, max_starts, valuations, order, out):
    """
    Find the critical points of the potential of the GC torus fibers, their
    valuations and Hessian flags, compare their number with the rank of
    H*(F) and locate the positive real minimum

    \b
    Example:
      \b
      gc critical --flag 1,2|3 --lambda 2,0,-2 --T e-1
    """
    init_logger()

    poly = polytope_from_options(flag, lambda_, order)
    pot = build_potential(poly)
    try:
        points = critical_points(pot, T, max_starts=max_starts, seed=seed)
        if valuations:
            points = with_valuations(pot, points)
        fiber = non_displaceable_fiber(pot, T)
    except ValueError as e:
        raise click.ClickException(str(e)) from e

    rank = cohomology_rank(flag)
    minimum = fiber.pop("critical_point")
    report = {
        "flag": flag.to_string(),
        "lambda": list(poly.lambda_),
        "T": T,
        "coords": [list(c) for c in poly.coords],
        "potential": render_potential(pot),
        "critical_points": points,
        "count": len(points),
        "nondegenerate": sum(cp.nondegenerate for cp in points),
        "cohomology_rank": rank,
        "count_vs_rank": _compare(len(points), rank),
        "newton_origin_interior": newton_origin_interior(pot),
        "positive_real_minimum": {"critical_point": minimum, **fiber},
        "discrepancies": valuation_discrepancies(pot, fiber["valuation"]),
    }
    return emit(report, out)
