"""
Volumes, reflexivity and the dual polytope

Two exact volume methods are available:

    - "integral": iterated integration over the pattern rows, bottom row
      first. Each entry (k, i) runs between the entries (k+1, i+1) and
      (k+1, i) above it, so every integral is a polynomial one.
    - "triangulation": pulling triangulation from the lowest vertex, which
      also works for the dual polytope where no row structure exists.

The closed form volume_formula in gcpoly.polytope is a third, independent
value used by the verification suites.
"""

import logging
from fractions import Fraction
from math import factorial
from typing import Optional, Sequence

import sympy

from gelfand_cetlin_cli.config import config
from gelfand_cetlin_cli.flagcombi import FlagType, dimension
from gelfand_cetlin_cli.gcpoly.lattice import lattice_points
from gelfand_cetlin_cli.gcpoly.patterns import constant_value
from gelfand_cetlin_cli.gcpoly.polytope import (
    GCPolytope,
    affine_rank,
    sympy_matrix,
    volume_formula,
)
from gelfand_cetlin_cli.gcpoly.vertices import (
    loop_free_selections,
    simplicial_cone_determinant,
    vertices,
)
from gelfand_cetlin_cli.utils import to_fraction

logger = logging.getLogger(__name__)

VOLUME_METHODS = ("integral", "triangulation", "formula")
TRIANGULATION_MAX_DIM = config["polytope"]["triangulation_max_dim"]


def _integral_volume(poly: GCPolytope) -> Fraction:
    flag = poly.flag
    free = {box: sympy.Symbol(f"x_{box[0]}_{box[1]}") for box in poly.coords}

    def entry(k, i):
        if (k, i) in free:
            return free[(k, i)]
        c = constant_value(flag, poly.lambda_, k, i)
        return sympy.Rational(c.numerator, c.denominator)

    integrand = sympy.Integer(1)
    for k in range(1, flag.n):
        for i in range(1, k + 1):
            if (k, i) not in free:
                continue
            integrand = sympy.integrate(
                integrand, (free[(k, i)], entry(k + 1, i + 1), entry(k + 1, i))
            )
            integrand = sympy.expand(integrand)
    if integrand.free_symbols:
        raise ValueError(
            f"❌ Volume integral did not reduce to a number: {integrand}"
        )
    return to_fraction(sympy.Rational(integrand))


def _ridges(face: frozenset, facets: Sequence[frozenset], points, dim: int):
    """
    Facets of a (dim)-face: the distinct intersections with its neighbouring
    facets that have affine dimension dim - 1
    """
    out = set()
    for other in facets:
        common = face & other
        if common == face or len(common) < dim:
            continue
        if affine_rank([points[j] for j in common]) == dim - 1:
            out.add(frozenset(common))
    return list(out)


def triangulate(
    points: Sequence[Sequence], facet_sets: Sequence[frozenset], dim: int
) -> list[tuple[int, ...]]:
    """
    Pulling triangulation of conv(points)

    Arguments:
        points - the vertices of a dim-dimensional polytope
        facet_sets - for every facet, the indices of the vertices on it
        dim - the affine dimension of conv(points)

    Returns:
        List of simplices, each a sorted tuple of dim + 1 point indices
    """
    points = [tuple(to_fraction(x) for x in p) for p in points]

    def pull(face: frozenset, facets: list[frozenset], d: int):
        if len(face) == d + 1:
            return [tuple(sorted(face))]
        apex = min(face, key=lambda j: points[j])
        simplices = []
        for facet in facets:
            if apex in facet:
                continue
            sub_facets = _ridges(facet, facets, points, d - 1)
            for simplex in pull(facet, sub_facets, d - 1):
                simplices.append(tuple(sorted(simplex + (apex,))))
        return simplices

    everything = frozenset(range(len(points)))
    return pull(everything, [frozenset(f) for f in facet_sets], dim)


def simplex_volume(points: Sequence[Sequence]) -> Fraction:
    """
    |det(p_1 - p_0, ..., p_d - p_0)| / d!
    """
    base = [to_fraction(x) for x in points[0]]
    d = len(points) - 1
    rows = [[to_fraction(x) - b for x, b in zip(p, base)] for p in points[1:]]
    det = to_fraction(sympy_matrix(rows).det())
    return abs(det) / factorial(d)


def triangulated_volume(
    points: Sequence[Sequence], facet_sets: Sequence[frozenset], dim: int
) -> Fraction:
    if dim > TRIANGULATION_MAX_DIM:
        raise ValueError(
            f"❌ Triangulation is limited to dimension {TRIANGULATION_MAX_DIM},"
            f" got {dim}"
        )
    simplices = triangulate(points, facet_sets, dim)
    logger.debug("Pulling triangulation with %s simplices", len(simplices))
    return sum(
        (simplex_volume([points[j] for j in s]) for s in simplices),
        start=Fraction(0),
    )


def volume(poly: GCPolytope, method: str = "integral") -> Fraction:
    """
    Exact Euclidean volume of Delta_lambda
    """
    if method not in VOLUME_METHODS:
        raise ValueError(
            f"❌ Unknown volume method {method!r}, expected one of"
            f" {VOLUME_METHODS}"
        )
    if method == "formula":
        return volume_formula(poly.flag, poly.lambda_)
    if method == "integral":
        return _integral_volume(poly)

    verts = [p for p, _ in vertices(poly)]
    facet_sets = [
        frozenset(j for j, p in enumerate(verts) if f.ell(p) == 0)
        for f in poly.facets
    ]
    return triangulated_volume(verts, facet_sets, poly.N)


def anticanonical_point(
    flag: FlagType, coords: Sequence[tuple[int, int]]
) -> tuple[int, ...]:
    """
    The pattern lambda^(k)_i = k - 2i + 1, restricted to the free entries.
    It is the unique interior lattice point of the polytope of the
    anti-canonical weight.
    """
    point = tuple(k - 2 * i + 1 for k, i in coords)
    assert len(point) == dimension(flag)
    return point


def is_reflexive(poly: GCPolytope) -> tuple[bool, Optional[tuple]]:
    """
    Returns (True, p) when Delta_lambda has a unique interior lattice point p
    and l_i(p) = 1 for every facet. Non-integral lambda is never reflexive.
    The second item is the unique interior lattice point when there is one.

    Reflexivity is usually stated for a translate: Delta_lambda - p contains
    the origin and every facet there reads <v_i, u> >= -1. Returning p is
    the same information; the translation vector is -p, see
    reflexive_translation.
    """
    if not poly.is_integral:
        return False, None

    interior = [
        p
        for p in lattice_points(poly)
        if all(value > 0 for value in poly.ell(p))
    ]
    if len(interior) != 1:
        logger.info(
            "⚠️ %s interior lattice points, polytope is not reflexive",
            len(interior),
        )
        return False, None

    p = interior[0]
    reflexive = all(value == 1 for value in poly.ell(p))
    return reflexive, p


def reflexive_translation(poly: GCPolytope) -> Optional[tuple]:
    """
    Lattice vector t with Delta_lambda + t reflexive around the origin, or
    None when Delta_lambda is not reflexive
    """
    reflexive, p = is_reflexive(poly)
    if not reflexive:
        return None
    return tuple(-x for x in p)


def dual_volume(poly: GCPolytope) -> Fraction:
    """
    Volume of the polar dual conv{v_1, ..., v_m} of a reflexive polytope.

    After translating the interior point to the origin every facet reads
    <v_i, u> >= -1, so the facets of the dual are indexed by the vertices of
    Delta_lambda and contain the normals of the facets active there.
    """
    reflexive, _ = is_reflexive(poly)
    if not reflexive:
        raise ValueError(
            f"❌ Polytope of {poly.flag} with lambda"
            f" {[str(x) for x in poly.lambda_]} is not reflexive"
        )
    normals = [f.v for f in poly.facets]
    facet_sets = [frozenset(active) for _, active in vertices(poly)]
    return triangulated_volume(normals, facet_sets, poly.N)


def dual_volume_formula(flag: FlagType) -> Optional[Fraction]:
    """
    Closed form dual volume: 2^N/N! for full flags and n 2^(N-n+1)/N! for
    Grassmannians. None for other flag types.
    """
    N = dimension(flag)
    if flag.is_full:
        return Fraction(2**N, factorial(N))
    if flag.is_grassmannian:
        return Fraction(flag.n * 2 ** (N - flag.n + 1), factorial(N))
    return None


def is_loop_free_everywhere(poly: GCPolytope) -> bool:
    """
    True iff every N-subset of active facets at every vertex either contains
    a loop or has determinant +-1
    """
    for point, _ in vertices(poly):
        for selection in loop_free_selections(poly, point):
            rays = [poly.facets[j].v for j in selection]
            if abs(simplicial_cone_determinant(poly, point, rays)) != 1:
                return False
    return True
