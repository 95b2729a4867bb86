"""
Gelfand-Cetlin polytopes: facets, vertices, lattice points and volumes
"""

from gelfand_cetlin_cli.gcpoly.patterns import GCPattern, assemble_rows
from gelfand_cetlin_cli.gcpoly.polytope import (
    Facet,
    GCPolytope,
    affine_rank,
    build_polytope,
    contains,
    resolve_coords,
    validate_lambda,
    volume_formula,
    weyl_dimension,
)
from gelfand_cetlin_cli.gcpoly.lattice import (
    count_lattice_points,
    ehrhart_counts,
    lattice_points,
    write_lattice_points_file,
)
from gelfand_cetlin_cli.gcpoly.vertices import (
    active_facets,
    is_loop_free,
    loop_free_selections,
    simplicial_cone_determinant,
    vertices,
    vertices_bruteforce,
)
from gelfand_cetlin_cli.gcpoly.volume import (
    VOLUME_METHODS,
    anticanonical_point,
    dual_volume,
    dual_volume_formula,
    is_loop_free_everywhere,
    is_reflexive,
    reflexive_translation,
    simplex_volume,
    triangulate,
    volume,
)
