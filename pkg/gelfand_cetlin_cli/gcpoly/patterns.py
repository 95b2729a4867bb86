"""
Gelfand-Cetlin patterns

A pattern is a triangular array lambda^(k)_i, k = 1..n, i = 1..k with top
row lambda^(n) = lambda and interlacing rows

    lambda^(k+1)_i >= lambda^(k)_i >= lambda^(k+1)_{i+1}

Entries inside the diagonal squares of the ladder diagram are pinned to
their block's lambda value.
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Iterator

import numpy
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from gelfand_cetlin_cli.flagcombi import Box, FlagType, is_pinned

logger = logging.getLogger(__name__)

Row = tuple
Rows = tuple[Row, ...]


@dataclass(frozen=True)
class GCPattern:
    """
    A Gelfand-Cetlin pattern stored as rows[k-1] = (lambda^(k)_1, ...)
    """

    flag: FlagType
    rows: Rows

    def __post_init__(self):
        n = self.flag.n
        if len(self.rows) != n or any(
            len(row) != k for k, row in enumerate(self.rows, start=1)
        ):
            raise ValueError(
                f"❌ A pattern for {self.flag} needs rows of length 1..{n}"
            )
        lam = self.rows[-1]
        for k in range(1, n):
            upper, lower = self.rows[k], self.rows[k - 1]
            for i in range(1, k + 1):
                if not upper[i - 1] >= lower[i - 1] >= upper[i]:
                    raise ValueError(
                        f"❌ Interlacing fails at entry ({k}, {i}):"
                        f" {upper[i - 1]} >= {lower[i - 1]} >= {upper[i]}"
                    )
                if is_pinned(self.flag, k, i) and lower[i - 1] != lam[i - 1]:
                    raise ValueError(
                        f"❌ Pinned entry ({k}, {i}) must equal"
                        f" {lam[i - 1]}, got {lower[i - 1]}"
                    )

    @property
    def lambda_(self) -> Row:
        return self.rows[-1]

    def value(self, k: int, i: int):
        return self.rows[k - 1][i - 1]

    def point(self, coords: Iterable[Box]) -> tuple:
        return tuple(self.value(k, i) for k, i in coords)

    @classmethod
    def from_point(cls, flag: FlagType, lambda_, coords, u) -> "GCPattern":
        """
        Assemble the full pattern from coordinates u (in coords order),
        filling in pinned entries and the top row
        """
        return cls(flag, assemble_rows(flag, lambda_, coords, u))


def constant_value(flag: FlagType, lambda_, k: int, i: int):
    """
    Value of a pinned or top-row entry: lambda_i (= lambda_{i+n-k})
    """
    return lambda_[i - 1]


def assemble_rows(flag: FlagType, lambda_, coords, u) -> Rows:
    """
    Rows of the pattern whose free entries are u; no interlacing check
    """
    coords = list(coords)
    if len(u) != len(coords):
        raise ValueError(
            f"❌ Expected {len(coords)} coordinates, got {len(u)}"
        )
    values = dict(zip(coords, u))
    rows = []
    for k in range(1, flag.n + 1):
        row = []
        for i in range(1, k + 1):
            if (k, i) in values:
                row.append(values[(k, i)])
            else:
                row.append(constant_value(flag, lambda_, k, i))
        rows.append(tuple(row))
    return tuple(rows)


def fill_patterns(
    lambda_, choices: Callable[[object, object], Iterable]
) -> Iterator[Rows]:
    """
    Enumerate patterns top-down. choices(hi, lo) lists the admissible values
    of an entry squeezed between the two entries above it
    """
    n = len(lambda_)
    top = tuple(lambda_)

    def fill(upper: Row, below: list[Row]) -> Iterator[Rows]:
        if len(upper) == 1:
            yield tuple(reversed(below))
            return
        options = [
            list(choices(upper[i], upper[i + 1]))
            for i in range(len(upper) - 1)
        ]
        for row in _interlaced_rows(options):
            yield from fill(row, below + [row])

    if n == 1:
        yield (top,)
        return
    for rows in fill(top, []):
        yield rows + (top,)


def _interlaced_rows(options: list[list]) -> Iterator[Row]:
    # Entries of one row are independent given the row above
    if not options:
        yield ()
        return
    head, rest = options[0], options[1:]
    for x in head:
        for tail in _interlaced_rows(rest):
            yield (x,) + tail


def integer_choices(hi, lo):
    return range(math.ceil(lo), math.floor(hi) + 1)


def value_choices(values):
    """
    Choices restricted to a finite set of values (used for vertices)
    """
    ordered = sorted(set(values))

    def choices(hi, lo):
        return [v for v in ordered if lo <= v <= hi]

    return choices


def is_vertex_pattern(flag: FlagType, rows: Rows, coords) -> bool:
    """
    A pattern is a vertex of the polytope iff every entry is connected to a
    constant (top row or pinned entry) by a chain of equalities between
    adjacent entries.

    All constants are merged into one ground node; the equalities then have
    full rank iff the graph is connected.
    """
    index = {box: j for j, box in enumerate(coords)}
    ground = len(index)
    heads, tails = [], []
    for k in range(1, flag.n):
        for i in range(1, k + 1):
            x = rows[k - 1][i - 1]
            a = index.get((k, i), ground)
            for above in ((k + 1, i), (k + 1, i + 1)):
                if rows[above[0] - 1][above[1] - 1] == x:
                    b = index.get(above, ground)
                    if a != b:
                        heads.append(a)
                        tails.append(b)
    return graph_is_connected(ground + 1, heads, tails)


def graph_is_connected(nnodes: int, heads, tails) -> bool:
    if nnodes == 1:
        return True
    graph = coo_matrix(
        (numpy.ones(len(heads)), (heads, tails)), shape=(nnodes, nnodes)
    )
    ncomponents, _ = connected_components(graph, directed=False)
    return ncomponents == 1


def vertex_points(flag: FlagType, lambda_, coords) -> list[tuple[Fraction, ...]]:
    """
    Vertices of the GC polytope, canonically sorted. Every vertex has entries
    among the distinct values of lambda, so only those patterns are visited.
    """
    points = set()
    for rows in fill_patterns(lambda_, value_choices(lambda_)):
        if is_vertex_pattern(flag, rows, coords):
            points.add(tuple(rows[k - 1][i - 1] for k, i in coords))
    return sorted(points)
