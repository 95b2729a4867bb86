"""
Vertices of Delta_lambda and the simplicial-cone determinant check

A vertex is a pattern in which every entry is tied to a constant by a chain
of equalities. Choosing N of the facets active at a vertex amounts to
keeping N of those equalities; the selection spans a simplicial cone iff the
kept equalities form no loop, and the matrix of ray generators then has
determinant +-1.
"""

import logging
from fractions import Fraction
from itertools import combinations
from typing import Sequence

import sympy

from gelfand_cetlin_cli.gcpoly.patterns import graph_is_connected
from gelfand_cetlin_cli.gcpoly.polytope import (
    GCPolytope,
    contains,
    sympy_matrix,
)
from gelfand_cetlin_cli.utils import to_fraction

logger = logging.getLogger(__name__)

Vertex = tuple[tuple[Fraction, ...], tuple[int, ...]]


def active_facets(poly: GCPolytope, point: Sequence) -> tuple[int, ...]:
    """
    Indices of the facets with l_i(point) = 0
    """
    point = tuple(to_fraction(x) for x in point)
    return tuple(j for j, f in enumerate(poly.facets) if f.ell(point) == 0)


def vertices(poly: GCPolytope) -> list[Vertex]:
    """
    Exact vertex list, canonically sorted, each vertex with its active facets.
    More than N active facets marks a non-simple vertex.
    """
    out = [(p, active_facets(poly, p)) for p in poly.vertex_points]
    nonsimple = sum(1 for _, act in out if len(act) > poly.N)
    logger.info(
        "✅ %s vertices (%s non-simple) for %s", len(out), nonsimple, poly.flag
    )
    return sorted(out)


def vertices_bruteforce(poly: GCPolytope) -> list[Vertex]:
    """
    Oracle: solve every N-subset of facet equations exactly and keep the
    feasible solutions
    """
    N = poly.N
    points = set()
    for subset in combinations(poly.facets, N):
        A = sympy.Matrix([list(f.v) for f in subset])
        if A.det() == 0:
            continue
        b = sympy_matrix([[f.tau] for f in subset])
        sol = A.LUsolve(b)
        u = tuple(to_fraction(x) for x in sol)
        if contains(poly, u):
            points.add(u)
    return sorted((p, active_facets(poly, p)) for p in points)


def _facet_edges(poly: GCPolytope, facet_indices) -> list[tuple[int, int]]:
    """
    Equality-graph edges of a facet selection; constants are node N
    """
    ground = poly.N
    edges = []
    for j in facet_indices:
        nz = [a for a, c in enumerate(poly.facets[j].v) if c != 0]
        if len(nz) == 2:
            edges.append((nz[0], nz[1]))
        else:
            edges.append((nz[0], ground))
    return edges


def is_loop_free(poly: GCPolytope, facet_indices) -> bool:
    """
    True iff the equalities of the selected facets form a forest.

    A forest with N edges on the N + 1 nodes (coordinates plus ground) is a
    spanning tree, so for N facets this is the same as being connected.
    """
    edges = _facet_edges(poly, facet_indices)
    normalized = [tuple(sorted(e)) for e in edges]
    if len(set(normalized)) != len(normalized):
        return False
    if len(edges) != poly.N:
        # Fewer edges: forest iff components = nodes - edges
        raise ValueError(
            f"❌ A cone selection needs exactly N={poly.N} rays,"
            f" got {len(edges)}"
        )
    heads = [a for a, _ in edges]
    tails = [b for _, b in edges]
    return graph_is_connected(poly.N + 1, heads, tails)


def loop_free_selections(poly: GCPolytope, vertex: Sequence) -> list[tuple]:
    """
    All N-subsets of the facets active at vertex whose equalities form a
    spanning tree
    """
    active = active_facets(poly, vertex)
    return [
        sel for sel in combinations(active, poly.N) if is_loop_free(poly, sel)
    ]


def simplicial_cone_determinant(
    poly: GCPolytope, vertex: Sequence, rays: Sequence[Sequence[int]]
) -> int:
    """
    Determinant of the N x N matrix whose columns are the chosen ray
    generators (facet normals) at vertex

    Raises ValueError when a ray is not a facet normal active at vertex, when
    the selection is not N rays, or when its equalities contain a loop
    """
    vertex = tuple(to_fraction(x) for x in vertex)
    if len(rays) != poly.N:
        raise ValueError(
            f"❌ Rank-deficient selection: {len(rays)} rays for N={poly.N}"
        )

    active = active_facets(poly, vertex)
    chosen = []
    for ray in rays:
        ray = tuple(int(c) for c in ray)
        match = [j for j in active if poly.facets[j].v == ray]
        if not match:
            raise ValueError(f"❌ Ray {ray} is not active at vertex {vertex}")
        chosen.append(match[0])

    if not is_loop_free(poly, chosen):
        raise ValueError(
            f"❌ The equalities of rays {list(rays)} contain a loop"
        )

    A = sympy.Matrix([list(r) for r in rays]).T
    det = int(A.det())
    if det == 0:
        raise ValueError(f"❌ Rank-deficient selection: {list(rays)}")
    return det
