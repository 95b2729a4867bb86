"""
Combinatorics of partial flag manifolds F(n_1, ..., n_r, n)

Step sequences, ladder diagrams, positive paths, Plücker index sets,
meet/join and anti-canonical weights. Everything here is a pure function on
immutable values.

Conventions:
    - Pattern entries are labelled (k, i): the i-th entry of the k-th row of
      a Gelfand-Cetlin pattern, k = 1..n, i = 1..k. Row n is lambda.
    - The ladder box of entry (k, i) is the grid cell in column i, row
      k - i + 1 counted from the bottom. Boxes inside the diagonal squares
      Q_l are pinned (constant) and are not boxes of the ladder diagram.
    - A positive path starts at O_0 = (0, 0); its s-th step is horizontal
      iff s belongs to the index set.
"""

import logging
from dataclasses import dataclass
from itertools import combinations
from math import comb, factorial, prod
from typing import Iterator

logger = logging.getLogger(__name__)

COORD_ORDERS = ("bottom-up", "top-down")

IndexSet = tuple[int, ...]
Box = tuple[int, int]


@dataclass(frozen=True)
class FlagType:
    """
    Step sequence 0 < n_1 < ... < n_r < n defining F(n_1, ..., n_r, n)
    """

    n: int
    steps: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "steps", tuple(int(s) for s in self.steps))
        if int(self.n) < 1:
            raise ValueError(f"❌ Flag size n must be positive, got {self.n}")
        if not self.steps:
            raise ValueError(
                "❌ A flag needs at least one step n_1 with 0 < n_1 < n"
            )
        bounds = (0,) + self.steps + (self.n,)
        for a, b in zip(bounds, bounds[1:]):
            if not a < b:
                raise ValueError(
                    "❌ Flag steps must be strictly increasing and lie in"
                    f" (0, {self.n}), got {self.steps}"
                )

    @classmethod
    def full(cls, n: int) -> "FlagType":
        return cls(n, tuple(range(1, n)))

    @classmethod
    def grassmannian(cls, k: int, n: int) -> "FlagType":
        return cls(n, (k,))

    @classmethod
    def from_string(cls, text: str) -> "FlagType":
        """
        Parse the compact form "n1,...,nr|n", e.g. "2|4" for Gr(2,4)
        """
        try:
            steps_text, n_text = str(text).split("|")
            steps = tuple(int(s) for s in steps_text.split(",") if s.strip())
            n = int(n_text)
        except ValueError as e:
            raise ValueError(
                f"❌ Invalid flag {text!r}. Expected the form 'n1,...,nr|n'"
            ) from e
        return cls(n, steps)

    def to_string(self) -> str:
        return ",".join(str(s) for s in self.steps) + f"|{self.n}"

    def __str__(self):
        return f"F({','.join(str(s) for s in self.steps + (self.n,))})"

    @property
    def r(self) -> int:
        return len(self.steps)

    @property
    def bounds(self) -> tuple[int, ...]:
        """
        (n_0, n_1, ..., n_r, n_{r+1}) = (0, n_1, ..., n_r, n)
        """
        return (0,) + self.steps + (self.n,)

    @property
    def block_sizes(self) -> tuple[int, ...]:
        """
        k_l = n_l - n_{l-1} for l = 1..r+1
        """
        b = self.bounds
        return tuple(b[l] - b[l - 1] for l in range(1, len(b)))

    @property
    def is_full(self) -> bool:
        return self.steps == tuple(range(1, self.n))

    @property
    def is_grassmannian(self) -> bool:
        return self.r == 1

    def block_of(self, index: int) -> int:
        """
        1-based block number l containing lambda index `index`
        """
        for l, upper in enumerate(self.bounds[1:], start=1):
            if index <= upper:
                return l
        raise ValueError(f"❌ Index {index} outside 1..{self.n}")

    def block_start(self, index: int) -> int:
        """
        First lambda index of the block containing `index`. Used as the
        label j of the Novikov symbol Q_j = T^{lambda_j}
        """
        return self.bounds[self.block_of(index) - 1] + 1


def dimension(flag: FlagType) -> int:
    """
    Complex dimension N = sum_i (n_i - n_{i-1})(n - n_i)
    """
    b = flag.bounds
    return sum((b[i] - b[i - 1]) * (flag.n - b[i]) for i in range(1, flag.r + 1))


def is_pinned(flag: FlagType, k: int, i: int) -> bool:
    """
    Entry (k, i) is forced to a constant iff lambda_i = lambda_{i+n-k}, i.e.
    both indices sit in the same block
    """
    if k == flag.n:
        return True
    return flag.block_of(i) == flag.block_of(i + flag.n - k)


def pattern_entries(flag: FlagType) -> Iterator[Box]:
    """
    All entries (k, i) below the top row, top-down and left to right
    """
    for k in range(flag.n - 1, 0, -1):
        for i in range(1, k + 1):
            yield (k, i)


def coordinate_order(flag: FlagType, order: str = "bottom-up") -> list[Box]:
    """
    Ladder boxes (free pattern entries) in row-major order.

    "bottom-up" starts from the single entry of row 1; "top-down" starts from
    row n-1, which is the ordering used by the worked examples, e.g.
    (u1, u2, u3) = (lambda^(2)_1, lambda^(2)_2, lambda^(1)_1) for F(1,2,3).
    """
    if order not in COORD_ORDERS:
        raise ValueError(
            f"❌ Unknown coordinate order {order!r}, expected one of"
            f" {COORD_ORDERS}"
        )
    boxes = [b for b in pattern_entries(flag) if not is_pinned(flag, *b)]
    if order == "top-down":
        return boxes
    return sorted(boxes)


@dataclass(frozen=True)
class LadderDiagram:
    """
    Boxes below the diagonal squares Q_l of the n x n staircase, plus the
    corners O_0, ..., O_r

    boxes holds pattern labels (k, i); cell() gives the grid position
    """

    flag: FlagType
    boxes: tuple[Box, ...]
    corners: tuple[tuple[int, int], ...]

    @staticmethod
    def cell(box: Box) -> tuple[int, int]:
        """
        Grid cell (column, row from bottom) of pattern entry (k, i)
        """
        k, i = box
        return (i, k - i + 1)

    @property
    def cells(self) -> tuple[tuple[int, int], ...]:
        return tuple(self.cell(b) for b in self.boxes)


def ladder_diagram(flag: FlagType) -> LadderDiagram:
    """
    Build the ladder diagram of a flag. O_0 is the lower left corner and O_l
    the lower right corner (n_l, n - n_l) of the square Q_l
    """
    boxes = tuple(coordinate_order(flag, "bottom-up"))
    corners = ((0, 0),) + tuple((s, flag.n - s) for s in flag.steps)
    return LadderDiagram(flag=flag, boxes=boxes, corners=corners)


def positive_paths(flag: FlagType, k: int) -> list[IndexSet]:
    """
    All positive paths from O_0 to O_k, encoded as the index sets of their
    horizontal steps, in lexicographic order
    """
    if not 1 <= k <= flag.r:
        raise ValueError(f"❌ Step index k must lie in 1..{flag.r}, got {k}")
    size = flag.steps[k - 1]
    paths = list(combinations(range(1, flag.n + 1), size))
    assert len(paths) == comb(flag.n, size)
    return paths


def path_steps(index_set, n: int) -> str:
    """
    Step word of the positive path of an index set: "H" for the horizontal
    steps listed in the set, "V" for the others
    """
    members = set(index_set)
    if not members <= set(range(1, n + 1)):
        raise ValueError(f"❌ Index set {index_set} is not inside 1..{n}")
    return "".join("H" if s in members else "V" for s in range(1, n + 1))


def index_set_from_steps(steps: str) -> IndexSet:
    """
    Inverse of path_steps
    """
    if set(steps) - {"H", "V"}:
        raise ValueError(f"❌ Path {steps!r} may only contain H and V steps")
    return tuple(s for s, step in enumerate(steps, start=1) if step == "H")


def path_endpoint(index_set, n: int) -> tuple[int, int]:
    word = path_steps(index_set, n)
    return (word.count("H"), word.count("V"))


def meet_join(I, J) -> tuple[IndexSet, IndexSet]:
    """
    Meet and join of two index sets.

    With |I| = k <= |J| = l:
        meet = (min(i_1, j_1), ..., min(i_k, j_k), j_{k+1}, ..., j_l)
        join = (max(i_1, j_1), ..., max(i_k, j_k))
    """
    I, J = tuple(I), tuple(J)
    if len(I) > len(J):
        I, J = J, I
    k = len(I)
    meet = tuple(min(a, b) for a, b in zip(I, J)) + J[k:]
    join = tuple(max(a, b) for a, b in zip(I, J))

    for name, seq in (("meet", meet), ("join", join)):
        if any(a >= b for a, b in zip(seq, seq[1:])):
            raise ValueError(
                f"❌ {name} of {I} and {J} is not strictly increasing: {seq}"
            )
    return meet, join


def permutation_sign(seq) -> tuple[IndexSet, int]:
    """
    Sort a sequence of indices and return (sorted tuple, sgn of the sorting
    permutation). The sign is 0 when an index repeats.
    """
    items = list(seq)
    if len(set(items)) != len(items):
        return tuple(sorted(items)), 0

    sign = 1
    # Insertion sort, flipping the sign on every transposition
    for a in range(1, len(items)):
        b = a
        while b > 0 and items[b - 1] > items[b]:
            items[b - 1], items[b] = items[b], items[b - 1]
            sign = -sign
            b -= 1
    return tuple(items), sign


def anticanonical_lambda(flag: FlagType) -> list[int]:
    """
    Weight of the anti-canonical bundle: block l carries n - n_{l-1} - n_l.
    Equals 2 rho = (n-1, n-3, ..., 1-n) for full flags.
    """
    b = flag.bounds
    lam = []
    for l, size in enumerate(flag.block_sizes, start=1):
        lam.extend([flag.n - b[l - 1] - b[l]] * size)
    return lam


def cohomology_rank(flag: FlagType) -> int:
    """
    Rank of H*(F) = n!/(k_1! ... k_{r+1}!), the number of cosets of the Weyl
    group of the Levi factor
    """
    return factorial(flag.n) // prod(factorial(k) for k in flag.block_sizes)
