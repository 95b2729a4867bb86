"""
Commands that build and report on Gelfand-Cetlin polytopes
"""

import logging

import click

from gelfand_cetlin_cli.config import config
from gelfand_cetlin_cli.config.log import init_logger
from gelfand_cetlin_cli.cli.params import (
    emit,
    flag_option,
    lambda_option,
    order_option,
    out_option,
    polytope_from_options,
)
from gelfand_cetlin_cli.flagcombi import cohomology_rank
from gelfand_cetlin_cli.gcpoly import (
    VOLUME_METHODS,
    count_lattice_points,
    dual_volume,
    dual_volume_formula,
    is_reflexive,
    vertices,
    volume as _volume,
    volume_formula,
    weyl_dimension,
    write_lattice_points_file,
)

logger = logging.getLogger(__name__)

TRIANGULATION_MAX_DIM = config["polytope"]["triangulation_max_dim"]


def polytope_report(poly, method: str = "integral") -> dict:
    """
    Facets, vertices, lattice-point count, volume, reflexivity and dual
    volume of a polytope
    """
    report = poly.to_dict()
    report["N"] = poly.N
    report["vertices"] = [list(p) for p, _ in vertices(poly)]
    report["volume"] = _volume(poly, method=method)
    report["volume_method"] = method
    report["volume_formula"] = volume_formula(poly.flag, poly.lambda_)
    report["cohomology_rank"] = cohomology_rank(poly.flag)

    if poly.is_integral:
        report["lattice_points"] = count_lattice_points(poly)
        report["weyl_dimension"] = weyl_dimension(poly.flag, poly.lambda_)
    else:
        report["lattice_points"] = None
        report["weyl_dimension"] = None

    reflexive, point = is_reflexive(poly)
    report["reflexive"] = reflexive
    report["interior_point"] = list(point) if reflexive else None
    report["translation"] = [-x for x in point] if reflexive else None
    report["dual_volume"] = None
    if reflexive and poly.N <= TRIANGULATION_MAX_DIM:
        report["dual_volume"] = dual_volume(poly)
    report["dual_volume_formula"] = (
        dual_volume_formula(poly.flag) if reflexive else None
    )
    return report


@click.command()
@flag_option
@lambda_option
@order_option
@out_option
@click.option(
    "--method",
    type=click.Choice(VOLUME_METHODS),
    default="integral",
    show_default=True,
    help="Exact volume method: iterated integral, pulling triangulation or"
    " the closed formula",
)
@click.option(
    "--csv",
    "csv_path",
    type=click.Path(exists=False, file_okay=True, dir_okay=False),
    help="Also export the lattice points to this CSV file",
)
def polytope(flag, lambda_, order, out, method, csv_path):
    """
    Build the GC polytope of a flag type and weight and print its facets,
    vertices, lattice-point count, volume, reflexivity and dual volume

    \b
    Example:
      \b
      gc polytope --flag 1,2|3 --lambda 2,0,-2
    """
    init_logger()

    poly = polytope_from_options(flag, lambda_, order)
    try:
        report = polytope_report(poly, method=method)
        if csv_path:
            if not poly.is_integral:
                raise click.BadParameter(
                    "❌ Lattice points need integral lambda",
                    param_hint="--csv",
                )
            report["lattice_points_csv"] = write_lattice_points_file(
                poly, csv_path
            )
    except ValueError as e:
        raise click.ClickException(str(e)) from e

    return emit(report, out)
