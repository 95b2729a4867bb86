"""
Test vertex enumeration and the simplicial-cone determinant check
"""

import pytest

from gelfand_cetlin_cli.flagcombi import FlagType
from gelfand_cetlin_cli.gcpoly import (
    active_facets,
    build_polytope,
    is_loop_free,
    loop_free_selections,
    simplicial_cone_determinant,
    vertices,
    vertices_bruteforce,
)


def test_vertices_flag3(flag3_poly):
    """
    Test the vertices of F(1,2,3) and the single non-simple vertex
    """
    verts = vertices(flag3_poly)
    assert len(verts) == 7
    nonsimple = [p for p, active in verts if len(active) > flag3_poly.N]
    assert nonsimple == [(0, 0, 0)]
    assert dict(verts)[(0, 0, 0)] == (1, 2, 4, 5)


@pytest.mark.parametrize(
    "flag,lam",
    [
        (FlagType.full(3), (2, 0, -2)),
        (FlagType.full(3), (3, 1, 0)),
        (FlagType.grassmannian(2, 4), (1, 1, -1, -1)),
        (FlagType.grassmannian(1, 3), (2, -1, -1)),
        (FlagType(4, (1, 3)), (2, 0, 0, -2)),
    ],
)
def test_vertices_match_bruteforce(flag, lam):
    """
    Test the pattern-based vertices against solving every N-subset of facet
    equations
    """
    poly = build_polytope(flag, lam, "top-down")
    assert vertices(poly) == vertices_bruteforce(poly)


def test_active_facets(flag3_poly):
    assert active_facets(flag3_poly, (2, 0, 2)) == (0, 2, 4)
    assert active_facets(flag3_poly, (1, -1, 0)) == ()


def test_loop_free_selections(flag3_poly):
    """
    Test every triple of the four equalities at the origin is a spanning tree
    """
    selections = loop_free_selections(flag3_poly, (0, 0, 0))
    assert selections == [(1, 2, 4), (1, 2, 5), (1, 4, 5), (2, 4, 5)]
    assert is_loop_free(flag3_poly, (0, 2, 4))


def test_is_loop_free_errors(flag3_poly):
    """
    Test repeated equalities are loops and short selections are refused
    """
    assert not is_loop_free(flag3_poly, (1, 1, 2))
    with pytest.raises(ValueError) as e:
        is_loop_free(flag3_poly, (1, 2))
    assert "exactly N=3" in str(e.value)


@pytest.mark.parametrize(
    "vertex,rays",
    [
        ((2, 0, 2), [(-1, 0, 0), (0, -1, 0), (1, 0, -1)]),
        ((0, 0, 0), [(1, 0, 0), (0, -1, 0), (1, 0, -1)]),
        ((0, 0, 0), [(1, 0, 0), (1, 0, -1), (0, -1, 1)]),
        ((0, 0, 0), [(0, -1, 0), (1, 0, -1), (0, -1, 1)]),
    ],
)
def test_simplicial_cone_determinant(flag3_poly, vertex, rays):
    """
    Test loop-free selections have determinant +-1
    """
    assert abs(simplicial_cone_determinant(flag3_poly, vertex, rays)) == 1


@pytest.mark.parametrize(
    "vertex,rays,msg",
    [
        ((2, 0, 2), [(-1, 0, 0), (0, -1, 0)], "Rank-deficient"),
        ((2, 0, 2), [(-1, 0, 0), (0, -1, 0), (0, 1, 0)], "not active"),
        ((2, 0, 2), [(-1, 0, 0), (-1, 0, 0), (1, 0, -1)], "loop"),
    ],
)
def test_simplicial_cone_determinant_errors(flag3_poly, vertex, rays, msg):
    """
    Test selections that do not span a simplicial cone
    """
    with pytest.raises(ValueError) as e:
        simplicial_cone_determinant(flag3_poly, vertex, rays)
    assert msg in str(e.value)
