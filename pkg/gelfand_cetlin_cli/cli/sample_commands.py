"""
Commands to generate files of sample points
"""

import logging

import click

from gelfand_cetlin_cli.config import config
from gelfand_cetlin_cli.config.log import init_logger
from gelfand_cetlin_cli.cli.params import (
    flag_option,
    lambda_option,
    order_option,
    polytope_from_options,
    seed_option,
)
from gelfand_cetlin_cli.sampling import (
    SAMPLE_KINDS,
    generate_sample_file as _generate_sample_file,
)

logger = logging.getLogger(__name__)


@click.command()
@flag_option
@lambda_option
@click.option(
    "--kind",
    type=click.Choice(SAMPLE_KINDS),
    default="interior",
    show_default=True,
    help="interior: uniform points of the polytope. orbit: GC images of"
    " Haar-random orbit matrices",
)
@click.option(
    "--total-rows",
    type=click.IntRange(min=1),
    default=100,
    show_default=True,
    help="Total number of rows to generate",
)
@seed_option
@order_option
@click.option(
    "--output-dir",
    default=config["sampling"]["output_dir"],
    type=click.Path(exists=False, file_okay=False, dir_okay=True),
    help="Where the output file will be written",
)
def sample(flag, lambda_, kind, total_rows, seed, order, output_dir):
    """
    Generate a csv file of seeded sample points of the GC polytope, with
    columns u1..uN in the chosen coordinate order.

    \b
    The same seed always produces the same file, so sample files can be
    used as fixtures for downstream tools.
    """
    init_logger()

    poly = polytope_from_options(flag, lambda_, order)
    try:
        return _generate_sample_file(
            poly,
            kind=kind,
            total_rows=total_rows,
            seed=seed,
            output_dir=output_dir,
        )
    except ValueError as e:
        raise click.ClickException(str(e)) from e
