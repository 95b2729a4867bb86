"""
Print the potential function of the GC torus fibers
"""

import logging

import click

from gelfand_cetlin_cli.config.log import init_logger
from gelfand_cetlin_cli.cli.params import (
    emit,
    flag_option,
    lambda_option,
    order_option,
    out_option,
    polytope_from_options,
)
from gelfand_cetlin_cli.potential import build_potential

logger = logging.getLogger(__name__)


@click.command()
@flag_option
@lambda_option
@order_option
@out_option
def potential(flag, lambda_, order, out):
    """
    Print the Laurent form of the potential, one term T^-tau y^v per facet

    \b
    Example:
      \b
      gc potential --flag 2|4 --lambda 1,1,0,0
    """
    init_logger()

    pot = build_potential(polytope_from_options(flag, lambda_, order))
    return emit(pot.to_dict(), out)
