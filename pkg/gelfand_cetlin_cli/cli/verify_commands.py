"""
Run the property suites from the command line
"""

import logging

import click

from gelfand_cetlin_cli.config import config
from gelfand_cetlin_cli.config.log import init_logger
from gelfand_cetlin_cli.cli.params import FLAG, emit, out_option
from gelfand_cetlin_cli.verify import run_suites
from gelfand_cetlin_cli.verify.suites import SUITES, SuiteOptions

logger = logging.getLogger(__name__)

settings = config["verify"]


@click.command()
@click.option(
    "--suite",
    "suites",
    multiple=True,
    type=click.Choice(list(SUITES)),
    help="Suite to run, may be repeated. Runs every suite when omitted",
)
@click.option(
    "--flag",
    type=FLAG,
    help="Restrict flag dependent suites to this flag type",
)
@click.option(
    "--n",
    "max_n",
    type=click.IntRange(min=2),
    default=settings["max_n"],
    show_default=True,
    help="Largest n of the flags checked",
)
@click.option(
    "--samples",
    type=click.IntRange(min=1),
    default=settings["samples"],
    show_default=True,
    help="Random samples per sampled case",
)
@click.option(
    "--gc-samples",
    type=click.IntRange(min=1),
    default=settings["gc_samples"],
    show_default=True,
    help="Random orbit points per weight in the interlacing suite",
)
@click.option(
    "--round-trips",
    type=click.IntRange(min=1),
    default=settings["round_trips"],
    show_default=True,
    help="Fiber point round trips per weight in the interlacing suite",
)
@click.option(
    "--seed",
    type=int,
    default=settings["seed"],
    show_default=True,
    help="Seed of the random samples",
)
@out_option
@click.pass_context
def verify(ctx, suites, flag, max_n, samples, gc_samples, round_trips, seed, out):
    """
    Run the verification suites and print a pass/fail report with
    residuals. Exits with code 1 when any suite fails.

    \b
    Examples:
      \b
      gc verify
      gc verify --suite toda --n 3
      gc verify --suite degeneration --flag 2|4
    """
    init_logger()

    options = SuiteOptions(
        seed=seed,
        samples=samples,
        gc_samples=gc_samples,
        round_trips=round_trips,
        max_n=max_n,
        flag=flag,
    )
    try:
        report = run_suites(suites, options)
    except ValueError as e:
        raise click.ClickException(str(e)) from e

    emit(report, out)
    if not report["passed"]:
        ctx.exit(1)
    return report
