"""
Generate files of seeded sample points for testing and development
"""

import logging
import os
from typing import Optional

import numpy
import pandas

from gelfand_cetlin_cli.config import config
from gelfand_cetlin_cli.gcpoly import GCPolytope
from gelfand_cetlin_cli.gcsystem import (
    gc_map,
    random_orbit_point,
    sample_interior_points,
)

logger = logging.getLogger(__name__)

SAMPLE_KINDS = ("interior", "orbit")


def _orbit_images(poly: GCPolytope, total_rows: int, seed: int) -> numpy.ndarray:
    """
    GC images of seeded random orbit points; seed + row seeds each matrix
    """
    lam = [float(x) for x in poly.lambda_]
    return numpy.array(
        [
            gc_map(random_orbit_point(lam, seed + row), poly.flag, poly.coords)
            for row in range(total_rows)
        ]
    ).reshape(total_rows, poly.N)


def generate_sample_file(
    poly: GCPolytope,
    kind: Optional[str] = "interior",
    total_rows: Optional[int] = 100,
    seed: Optional[int] = 0,
    output_dir: Optional[str] = None,
) -> str:
    """
    Write a csv file of points of Delta_lambda with columns u1..uN.

    Options:
        - kind: "interior" for uniform samples of the interior, "orbit" for
        the GC images of Haar-random points of the orbit O_lambda

        - total_rows: Number of rows to generate

        - seed: Seed of the generator, so repeated calls write the same file

    Returns:
        Path to file
    """
    if kind not in SAMPLE_KINDS:
        raise ValueError(
            f"❌ Unknown sample kind {kind!r}, expected one of {SAMPLE_KINDS}"
        )
    logger.info("🏭 Generating %s %s sample points for %s", total_rows, kind, poly.flag)
    if not output_dir:
        output_dir = config["sampling"]["output_dir"]
    os.makedirs(output_dir, exist_ok=True)

    if kind == "interior":
        points = sample_interior_points(poly, total_rows, seed=seed)
    else:
        points = _orbit_images(poly, total_rows, seed)

    df = pandas.DataFrame(points, columns=[f"u{i + 1}" for i in range(poly.N)])

    flag_name = poly.flag.to_string().replace("|", "_").replace(",", "-")
    filepath = os.path.join(output_dir, f"{kind}-samples-{flag_name}.csv")
    df.to_csv(filepath, index=False)

    logger.info("✅ Completed writing %s sample points to %s", total_rows, filepath)

    return filepath
