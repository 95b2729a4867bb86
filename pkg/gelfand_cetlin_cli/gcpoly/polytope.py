"""
Construction of the Gelfand-Cetlin polytope Delta_lambda

Facets come from the adjacent-entry inequalities of GC patterns. Candidate
inequalities that only support a lower-dimensional face are dropped: a
candidate is a facet iff the vertices on which it is tight span an affine
hyperplane. All arithmetic is exact (fractions.Fraction, sympy ranks).
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, prod
from typing import Optional, Sequence, Union

import numpy
import sympy

from gelfand_cetlin_cli.config import config
from gelfand_cetlin_cli.flagcombi import (
    Box,
    FlagType,
    coordinate_order,
    dimension,
    is_pinned,
    pattern_entries,
)
from gelfand_cetlin_cli.gcpoly.patterns import vertex_points
from gelfand_cetlin_cli.utils import to_fraction

logger = logging.getLogger(__name__)

DEFAULT_COORD_ORDER = config["polytope"]["default_coord_order"]


@dataclass(frozen=True)
class Facet:
    """
    Facet {u : <v, u> - tau >= 0} with primitive inward normal v.

    The inequality reads value(upper) - value(lower) >= 0 on the two pattern
    entries it compares. When one side is a constant lambda_j, q_index is the
    label j of the Novikov symbol Q_j and q_power is +1 for lambda_j - u >= 0
    (tau = -lambda_j) and -1 for u - lambda_j >= 0 (tau = +lambda_j).
    """

    v: tuple[int, ...]
    tau: Fraction
    upper: Box
    lower: Box
    q_index: Optional[int] = None
    q_power: int = 0

    def __post_init__(self):
        nonzero = [c for c in self.v if c != 0]
        if not nonzero or len(nonzero) > 2 or any(abs(c) != 1 for c in nonzero):
            raise ValueError(
                "❌ Facet normals have one or two nonzero entries equal to"
                f" +-1, got {self.v}"
            )
        if len(nonzero) == 2 and sum(nonzero) != 0:
            raise ValueError(f"❌ Facet normal {self.v} is not of type e_a - e_b")
        assert gcd(*self.v) == 1

    def ell(self, u):
        """
        Affine function l(u) = <v, u> - tau
        """
        return sum(c * x for c, x in zip(self.v, u) if c) - self.tau

    def to_dict(self) -> dict:
        return {"v": list(self.v), "tau": self.tau}


@dataclass(frozen=True)
class GCPolytope:
    """
    Delta_lambda together with the identification of R^N coordinates with
    ladder boxes
    """

    flag: FlagType
    lambda_: tuple[Fraction, ...]
    coords: tuple[Box, ...]
    facets: tuple[Facet, ...]
    vertex_points: tuple[tuple[Fraction, ...], ...] = field(
        default=(), repr=False, compare=False
    )

    @property
    def N(self) -> int:
        return len(self.coords)

    @property
    def is_integral(self) -> bool:
        return all(x.denominator == 1 for x in self.lambda_)

    def ell(self, u) -> list:
        return [f.ell(u) for f in self.facets]

    @property
    def normals(self) -> numpy.ndarray:
        """
        m x N integer matrix whose rows are the facet normals v_i
        """
        return numpy.array([f.v for f in self.facets], dtype=int).reshape(
            len(self.facets), self.N
        )

    @property
    def offsets(self) -> numpy.ndarray:
        return numpy.array([float(f.tau) for f in self.facets])

    def ell_float(self, u) -> numpy.ndarray:
        """
        Floating point l_i(u); u may be a single point or a stack of points
        """
        u = numpy.asarray(u, dtype=float)
        return u @ self.normals.T - self.offsets

    def to_dict(self) -> dict:
        return {
            "flag": self.flag.to_string(),
            "lambda": list(self.lambda_),
            "coords": [list(c) for c in self.coords],
            "facets": [f.to_dict() for f in self.facets],
        }


def validate_lambda(flag: FlagType, lambda_: Sequence) -> tuple[Fraction, ...]:
    """
    lambda must be constant on blocks and strictly decreasing across block
    boundaries: lambda_1 = ... = lambda_{n_1} > lambda_{n_1+1} = ...
    """
    lam = tuple(to_fraction(x) for x in lambda_)
    if len(lam) != flag.n:
        raise ValueError(
            f"❌ lambda must have {flag.n} entries for {flag}, got {len(lam)}"
        )
    for j in range(1, flag.n):
        same_block = flag.block_of(j) == flag.block_of(j + 1)
        if same_block and lam[j - 1] != lam[j]:
            raise ValueError(
                f"❌ lambda_{j} = {lam[j - 1]} and lambda_{j + 1} = {lam[j]}"
                f" lie in the same block of {flag} and must be equal"
            )
        if not same_block and not lam[j - 1] > lam[j]:
            raise ValueError(
                f"❌ lambda must strictly decrease across the block boundary"
                f" after index {j}: {lam[j - 1]} > {lam[j]} fails"
            )
    return lam


def resolve_coords(
    flag: FlagType, coords: Union[str, Sequence[Box], None] = None
) -> tuple[Box, ...]:
    """
    Coordinate order from a name ("bottom-up", "top-down") or an explicit
    list of ladder boxes
    """
    if coords is None:
        coords = DEFAULT_COORD_ORDER
    if isinstance(coords, str):
        return tuple(coordinate_order(flag, coords))

    coords = tuple(tuple(int(x) for x in box) for box in coords)
    expected = set(coordinate_order(flag))
    if set(coords) != expected or len(coords) != len(expected):
        raise ValueError(
            f"❌ Coordinates {coords} are not an ordering of the ladder boxes"
            f" {sorted(expected)} of {flag}"
        )
    return coords


def candidate_facets(
    flag: FlagType, lambda_: Sequence[Fraction], coords: Sequence[Box]
) -> list[Facet]:
    """
    One inequality per adjacent pair of pattern entries, rows top-down.
    Pairs of constants are skipped.
    """
    index = {box: j for j, box in enumerate(coords)}
    N = len(coords)

    def side(box: Box):
        k, i = box
        if k < flag.n and not is_pinned(flag, k, i):
            return ("free", index[box])
        return ("const", i)

    out = []
    for k, i in pattern_entries(flag):
        for upper, lower in (((k + 1, i), (k, i)), ((k, i), (k + 1, i + 1))):
            (ukind, uval), (lkind, lval) = side(upper), side(lower)
            if ukind == "const" and lkind == "const":
                continue
            v = [0] * N
            tau = Fraction(0)
            q_index, q_power = None, 0
            if ukind == "free":
                v[uval] += 1
            else:
                tau -= lambda_[uval - 1]
                q_index, q_power = flag.block_start(uval), 1
            if lkind == "free":
                v[lval] -= 1
            else:
                tau += lambda_[lval - 1]
                q_index, q_power = flag.block_start(lval), -1
            out.append(
                Facet(
                    v=tuple(v),
                    tau=tau,
                    upper=upper,
                    lower=lower,
                    q_index=q_index,
                    q_power=q_power,
                )
            )
    return out


def sympy_matrix(rows) -> sympy.Matrix:
    return sympy.Matrix(
        [
            [sympy.Rational(x.numerator, x.denominator) for x in row]
            for row in rows
        ]
    )


def affine_rank(points: Sequence[Sequence[Fraction]]) -> int:
    """
    Dimension of the affine hull of a point set (-1 when empty)
    """
    points = list(points)
    if not points:
        return -1
    if len(points) == 1:
        return 0
    base = points[0]
    diffs = [
        [to_fraction(a) - to_fraction(b) for a, b in zip(p, base)]
        for p in points[1:]
    ]
    return sympy_matrix(diffs).rank()


def build_polytope(
    flag: FlagType,
    lambda_: Sequence,
    coords: Union[str, Sequence[Box], None] = None,
) -> GCPolytope:
    """
    Build Delta_lambda with its irredundant facet list

    Arguments:
        flag - the flag type F(n_1, ..., n_r, n)
        lambda_ - weakly decreasing weights, constant on blocks
        coords - "bottom-up" (default), "top-down" or an explicit ordering of
        the ladder boxes identifying R^N coordinates with pattern entries

    Returns:
        GCPolytope whose facets follow the row order of the pattern, top row
        first
    """
    lam = validate_lambda(flag, lambda_)
    coords = resolve_coords(flag, coords)
    N = len(coords)
    assert N == dimension(flag)

    verts = vertex_points(flag, lam, coords)
    if len(verts) < N + 1:
        raise ValueError(
            f"❌ Polytope for {flag}, lambda={lam} is not full-dimensional"
        )

    facets = []
    seen = set()
    for candidate in candidate_facets(flag, lam, coords):
        key = (candidate.v, candidate.tau)
        if key in seen:
            continue
        tight = [p for p in verts if candidate.ell(p) == 0]
        if len(tight) >= N and affine_rank(tight) == N - 1:
            facets.append(candidate)
            seen.add(key)
        else:
            logger.debug(
                "Dropping redundant inequality %s >= %s",
                candidate.v,
                candidate.tau,
            )

    logger.info(
        "✅ Built GC polytope of %s, lambda=%s: N=%s, %s facets, %s vertices",
        flag,
        [str(x) for x in lam],
        N,
        len(facets),
        len(verts),
    )
    return GCPolytope(
        flag=flag,
        lambda_=lam,
        coords=coords,
        facets=tuple(facets),
        vertex_points=tuple(verts),
    )


def contains(poly: GCPolytope, u: Sequence, strict: bool = False, tol=0) -> bool:
    """
    True iff l_i(u) >= 0 for all facets (> 0 when strict). A positive tol
    loosens the test for floating point input.
    """
    if len(u) != poly.N:
        raise ValueError(
            f"❌ Point has {len(u)} coordinates, polytope dimension is {poly.N}"
        )
    if all(isinstance(x, (int, Fraction)) for x in u):
        values = poly.ell(u)
    else:
        values = poly.ell_float(u).tolist()
    if strict:
        return all(x > tol for x in values)
    return all(x >= -tol for x in values)


def weyl_dimension(flag: FlagType, lambda_: Sequence) -> int:
    """
    Weyl dimension formula prod_{i<j} (lambda_i - lambda_j + j - i)/(j - i)
    """
    lam = tuple(to_fraction(x) for x in lambda_)
    n = flag.n
    value = prod(
        Fraction(lam[i] - lam[j] + j - i, j - i)
        for i in range(n)
        for j in range(i + 1, n)
    )
    if value.denominator != 1:
        raise ValueError(f"❌ lambda={lam} is not an integral weight")
    return int(value)


def volume_formula(flag: FlagType, lambda_: Sequence) -> Fraction:
    """
    Closed-form volume: product over pairs i < j in different blocks of
    (lambda_i - lambda_j)/(j - i)
    """
    lam = tuple(to_fraction(x) for x in lambda_)
    n = flag.n
    return prod(
        (
            Fraction(lam[i - 1] - lam[j - 1], j - i)
            for i in range(1, n + 1)
            for j in range(i + 1, n + 1)
            if flag.block_of(i) != flag.block_of(j)
        ),
        start=Fraction(1),
    )
