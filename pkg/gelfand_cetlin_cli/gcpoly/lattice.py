"""
Lattice points of Delta_lambda

For integral lambda the lattice points are exactly the integer GC patterns,
and their number is the dimension of the irreducible representation of
highest weight lambda.
"""

import logging
import os
from fractions import Fraction
from typing import Optional

from gelfand_cetlin_cli.config import config
from gelfand_cetlin_cli.gcpoly.patterns import fill_patterns, integer_choices
from gelfand_cetlin_cli.gcpoly.polytope import GCPolytope, build_polytope
from gelfand_cetlin_cli.utils import write_points_csv

logger = logging.getLogger(__name__)

LATTICE_POINT_LIMIT = config["polytope"]["lattice_point_limit"]


def _require_integral(poly: GCPolytope):
    if not poly.is_integral:
        raise ValueError(
            "❌ Lattice points are only defined here for integral lambda,"
            f" got {[str(x) for x in poly.lambda_]}"
        )


def lattice_points(
    poly: GCPolytope, limit: Optional[int] = LATTICE_POINT_LIMIT
) -> list[tuple[int, ...]]:
    """
    All integer points of Delta_lambda in the polytope's coordinate order,
    sorted lexicographically

    Raises ValueError for non-integral lambda or when more than limit points
    would be produced
    """
    _require_integral(poly)
    lam = tuple(int(x) for x in poly.lambda_)
    points = []
    for rows in fill_patterns(lam, integer_choices):
        points.append(tuple(rows[k - 1][i - 1] for k, i in poly.coords))
        if limit is not None and len(points) > limit:
            raise ValueError(
                f"❌ More than {limit} lattice points; raise the limit to"
                " enumerate them"
            )
    logger.info("✅ %s lattice points in %s", len(points), poly.flag)
    return sorted(points)


def count_lattice_points(poly: GCPolytope) -> int:
    """
    Number of integer patterns, counted without storing them
    """
    _require_integral(poly)
    lam = tuple(int(x) for x in poly.lambda_)
    return sum(1 for _ in fill_patterns(lam, integer_choices))


def ehrhart_counts(poly: GCPolytope, max_dilation: int = 3) -> list[int]:
    """
    #(m Delta) cap Z^N for m = 1..max_dilation
    """
    _require_integral(poly)
    if max_dilation < 1:
        raise ValueError("❌ max_dilation must be at least 1")
    counts = []
    for m in range(1, max_dilation + 1):
        dilated = build_polytope(
            poly.flag, [Fraction(m) * x for x in poly.lambda_], poly.coords
        )
        counts.append(count_lattice_points(dilated))
    return counts


def write_lattice_points_file(
    poly: GCPolytope, filepath: Optional[str] = None
) -> str:
    """
    Write the lattice points of poly to a CSV file with columns u1..uN
    """
    points = lattice_points(poly)
    if not filepath:
        filepath = os.path.join(
            config["sampling"]["output_dir"],
            f"lattice-points-{poly.flag.to_string().replace('|', '_')}.csv",
        )
    return write_points_csv(points, filepath)
