"""
Entrypoint for the CLI

All commands are initialized here
"""

import click

from gelfand_cetlin_cli.cli.polytope_commands import polytope
from gelfand_cetlin_cli.cli.critical_commands import critical
from gelfand_cetlin_cli.cli.potential_commands import potential
from gelfand_cetlin_cli.cli.verify_commands import verify
from gelfand_cetlin_cli.cli.toda_commands import toda
from gelfand_cetlin_cli.cli.sample_commands import sample


@click.group()
@click.version_option(package_name="gelfand_cetlin_cli")
def main():
    """
    A CLI tool for Gelfand-Cetlin polytopes, the Gelfand-Cetlin integrable
    system on flag manifolds and the potential functions of its torus fibers.

    This method does not need to be implemented. main is the root group that
    all subcommands will implicitly be part of.
    """


main.add_command(polytope)
main.add_command(critical)
main.add_command(potential)
main.add_command(verify)
main.add_command(toda)
main.add_command(sample)
