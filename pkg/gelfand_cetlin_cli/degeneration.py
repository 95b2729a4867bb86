"""
Toric degeneration of partial flag manifolds

Plücker coordinates are deformed by the weights w_ij = 3^(i-j-1) (i > j):

    q_I(z, t) = t^(-tr w_I) det(t^(w_ij) z_ij)_I

so that q_I(z, 1) is the minor p_I(z) and q_I(z, 0) is its diagonal monomial.
The multi-parameter version q~_I(z, t_2, ..., t_n) splits the weight into
one stage per row. At t = 0 the flag manifold degenerates to the toric
variety cut out by binomial relations, parametrized by the monomials d_I(tau).

The moment maps mu^(m) (upper-left block of the orbit matrix written in
Plücker coordinates) and nu~^(m) (torus action on the toric fiber) are
evaluated numerically on normalized Plücker points.
"""

import logging
import re
from collections import Counter
from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Optional, Sequence

import numpy

from gelfand_cetlin_cli.config import config
from gelfand_cetlin_cli.flagcombi import (
    FlagType,
    IndexSet,
    is_pinned,
    meet_join,
    pattern_entries,
    permutation_sign,
)

logger = logging.getLogger(__name__)

WEIGHT_BASE = config["degeneration"]["weight_base"]
NORMALIZATION_TOL = config["degeneration"]["normalization_tol"]
FAMILY_TOL = config["degeneration"]["family_tol"]


@dataclass(frozen=True)
class WeightMatrix:
    """
    w[i-1][j-1] = 3^(i-j-1) for i > j and 0 otherwise. multi[k] holds the
    stage-k exponents w~_{k,ij} for k = 2..n.
    """

    n: int
    w: tuple[tuple[int, ...], ...]
    multi: dict

    def weight(self, i: int, j: int) -> int:
        return self.w[i - 1][j - 1]

    def stage_weight(self, k: int, i: int, j: int) -> int:
        return self.multi[k][i - 1][j - 1]


def weight_matrix(n: int) -> WeightMatrix:
    w = tuple(
        tuple(WEIGHT_BASE ** (i - j - 1) if i > j else 0 for j in range(1, n + 1))
        for i in range(1, n + 1)
    )
    return WeightMatrix(n=n, w=w, multi=multi_weight(n, w))


def multi_weight(n: int, w=None) -> dict:
    """
    w~_{k,ij} = w_kj - w_{k-1,j} for i >= k and 0 for i < k. Summing over
    k = 2..n telescopes back to w_ij.
    """
    if w is None:
        w = weight_matrix(n).w
    multi = {}
    for k in range(2, n + 1):
        multi[k] = tuple(
            tuple(
                w[k - 1][j - 1] - w[k - 2][j - 1] if i >= k else 0
                for j in range(1, n + 1)
            )
            for i in range(1, n + 1)
        )
    return multi


def _check_index_set(I: Sequence[int], n: int) -> IndexSet:
    I = tuple(int(i) for i in I)
    if len(I) > n or any(not 1 <= i <= n for i in I):
        raise ValueError(f"❌ Index set {I} is not a subset of 1..{n}")
    if any(a >= b for a, b in zip(I, I[1:])):
        raise ValueError(f"❌ Index set {I} must be strictly increasing")
    return I


def _expanded_minor(z: numpy.ndarray, I: IndexSet, exponent, t_power):
    """
    Leibniz expansion of the minor on rows I and columns 1..|I|; exponent(rows)
    gives the t-exponents of a term relative to the diagonal term
    """
    total = 0j
    for perm in permutations(range(len(I))):
        rows = tuple(I[p] for p in perm)
        _, sign = permutation_sign(perm)
        term = complex(sign)
        for col, row in enumerate(rows, start=1):
            term *= z[row - 1, col - 1]
        total += term * t_power(exponent(rows))
    return total


def deformed_plucker(z, I: Sequence[int], t: complex) -> complex:
    """
    q_I(z, t) as a polynomial in t; exact at t = 0
    """
    z = numpy.asarray(z, dtype=complex)
    n = z.shape[0]
    I = _check_index_set(I, n)
    weights = weight_matrix(n)
    diagonal = sum(weights.weight(i, l) for l, i in enumerate(I, start=1))

    def exponent(rows):
        return sum(weights.weight(i, l) for l, i in enumerate(rows, start=1)) - diagonal

    return _expanded_minor(z, I, exponent, lambda e: complex(t) ** e)


def multi_deformed_plucker(z, I: Sequence[int], ts: Sequence[complex]) -> complex:
    """
    q~_I(z, t_2, ..., t_n); ts lists t_2..t_n
    """
    z = numpy.asarray(z, dtype=complex)
    n = z.shape[0]
    I = _check_index_set(I, n)
    if len(ts) != n - 1:
        raise ValueError(f"❌ Expected {n - 1} parameters t_2..t_{n}, got {len(ts)}")
    weights = weight_matrix(n)
    stages = range(2, n + 1)
    diagonal = {
        k: sum(weights.stage_weight(k, i, l) for l, i in enumerate(I, start=1))
        for k in stages
    }

    def exponent(rows):
        return tuple(
            sum(weights.stage_weight(k, i, l) for l, i in enumerate(rows, start=1))
            - diagonal[k]
            for k in stages
        )

    def t_power(exponents):
        out = 1 + 0j
        for t, e in zip(ts, exponents):
            out *= complex(t) ** e
        return out

    return _expanded_minor(z, I, exponent, t_power)


def diagonal_monomial(z, I: Sequence[int]) -> complex:
    """
    d_I(z) = z_{i_1 1} ... z_{i_k k}
    """
    z = numpy.asarray(z, dtype=complex)
    I = _check_index_set(I, z.shape[0])
    return complex(numpy.prod([z[i - 1, l - 1] for l, i in enumerate(I, start=1)]))


# Relations ------------------------------------------------------------------

_TERM = re.compile(
    r"\s*(?P<sign>[+-])?\s*"
    r"(?P<coef>\d+(?:\.\d*)?)?\s*\*?\s*"
    r"(?P<t>t(?:\^(?P<tpow>\d+))?)?\s*\*?\s*"
    r"(?P<mono>(?:Z\[[\d,\s]*\]\s*)+)"
)
_FACTOR = re.compile(r"Z\[([\d,\s]*)\]")


@dataclass(frozen=True)
class RelationTerm:
    coefficient: float
    t_power: int
    factors: tuple[tuple[int, ...], ...]


def parse_relation(text: str) -> list[RelationTerm]:
    """
    Parse a signed sum of monomials such as

        "+Z[1]Z[2,3] -Z[2]Z[1,3] +t Z[3]Z[1,2]"

    Each term is an optional sign, an optional number, an optional t or t^k
    and one or more Plücker symbols Z[i,j,...]
    """
    terms = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(
                f"❌ Malformed relation {text!r} at position {pos}:"
                f" {text[pos:pos + 20]!r}"
            )
        if terms and m.group("sign") is None:
            raise ValueError(f"❌ Malformed relation {text!r}: missing sign")
        sign = -1.0 if m.group("sign") == "-" else 1.0
        coef = float(m.group("coef")) if m.group("coef") else 1.0
        if m.group("t"):
            t_power = int(m.group("tpow")) if m.group("tpow") else 1
        else:
            t_power = 0
        factors = tuple(
            tuple(int(i) for i in body.split(",") if i.strip())
            for body in _FACTOR.findall(m.group("mono"))
        )
        terms.append(RelationTerm(sign * coef, t_power, factors))
        pos = m.end()
    if not terms:
        raise ValueError("❌ Empty relation")
    return terms


def _relation_residual(terms: list[RelationTerm], values: dict, t: complex) -> float:
    contributions = []
    for term in terms:
        value = term.coefficient * complex(t) ** term.t_power
        for factor in term.factors:
            ordered, sign = permutation_sign(factor)
            value *= sign * values[ordered]
        contributions.append(value)
    scale = sum(abs(c) for c in contributions)
    if scale == 0:
        return 0.0
    return abs(sum(contributions)) / scale


def verify_family_equation(
    flag: FlagType,
    relation: str,
    samples: int = 100,
    seed: int = 0,
    t: Optional[complex] = None,
) -> dict:
    """
    Evaluate a relation at Z_I = q_I(z, t) for seeded random complex z (and t
    unless it is fixed) and report the largest relative residual
    """
    terms = parse_relation(relation)
    sizes = set(flag.steps)
    index_sets = set()
    for term in terms:
        for factor in term.factors:
            if len(factor) not in sizes:
                raise ValueError(
                    f"❌ Z{list(factor)} has size {len(factor)}, {flag} only has"
                    f" Plücker coordinates of sizes {sorted(sizes)}"
                )
            index_sets.add(tuple(sorted(_check_index_set(sorted(factor), flag.n))))

    rng = numpy.random.default_rng(seed)
    worst = 0.0
    for _ in range(samples):
        z = rng.normal(size=(flag.n, flag.n)) + 1j * rng.normal(size=(flag.n, flag.n))
        t_value = (
            complex(rng.normal(), rng.normal()) if t is None else complex(t)
        )
        values = {I: deformed_plucker(z, I, t_value) for I in index_sets}
        worst = max(worst, _relation_residual(terms, values, t_value))

    passed = worst <= FAMILY_TOL
    logger.info(
        "%s Family relation %s over %s samples: residual %.3e",
        "✅" if passed else "❌",
        relation,
        samples,
        worst,
    )
    return {
        "relation": relation,
        "samples": samples,
        "max_residual": worst,
        "passed": passed,
    }


# Plücker points and the monomial embedding ---------------------------------


def plucker_index_sets(flag: FlagType) -> list[IndexSet]:
    return [
        I
        for size in flag.steps
        for I in combinations(range(1, flag.n + 1), size)
    ]


@dataclass(frozen=True, eq=False)
class PluckerPoint:
    """
    Z_I for |I| in {n_1, ..., n_r}, normalized so that the squared norms of
    each size sum to 1
    """

    flag: FlagType
    values: dict

    def __post_init__(self):
        for size in self.flag.steps:
            norm = sum(
                abs(v) ** 2 for I, v in self.values.items() if len(I) == size
            )
            if abs(norm - 1) > NORMALIZATION_TOL:
                raise ValueError(
                    f"❌ Plücker coordinates of size {size} are not"
                    f" normalized: sum |Z_I|^2 = {norm}"
                )

    @classmethod
    def normalized(cls, flag: FlagType, values: dict) -> "PluckerPoint":
        out = {}
        for size in flag.steps:
            block = {
                I: complex(values.get(I, 0))
                for I in combinations(range(1, flag.n + 1), size)
            }
            norm = numpy.sqrt(sum(abs(v) ** 2 for v in block.values()))
            if norm == 0:
                raise ValueError(f"❌ All Plücker coordinates of size {size} vanish")
            out.update({I: v / norm for I, v in block.items()})
        return cls(flag, out)

    def signed(self, seq: Sequence[int]) -> complex:
        """
        Z_{sigma I} = sgn(sigma) Z_I, and 0 for repeated indices
        """
        ordered, sign = permutation_sign(seq)
        if sign == 0:
            return 0j
        return sign * self.values[ordered]


@dataclass(frozen=True, eq=False)
class TorusPoint:
    """
    tau^(k)_i for every entry below the top row; pinned entries equal 1
    """

    flag: FlagType
    tau: dict

    def __post_init__(self):
        for k, i in pattern_entries(self.flag):
            value = self.tau.get((k, i))
            if value is None:
                raise ValueError(f"❌ Missing tau^({k})_{i}")
            if value == 0:
                raise ValueError(f"❌ tau^({k})_{i} must be nonzero")
            if is_pinned(self.flag, k, i) and value != 1:
                raise ValueError(f"❌ Pinned tau^({k})_{i} must equal 1")

    @classmethod
    def from_free(cls, flag: FlagType, free: dict) -> "TorusPoint":
        tau = {
            box: (1 if is_pinned(flag, *box) else complex(free[box]))
            for box in pattern_entries(flag)
        }
        return cls(flag, tau)


def random_torus_point(flag: FlagType, seed: int = 0) -> TorusPoint:
    """
    Free tau values with modulus in [1/2, 2] and uniform phase
    """
    rng = numpy.random.default_rng(seed)
    free = {}
    for box in pattern_entries(flag):
        if not is_pinned(flag, *box):
            r = numpy.exp(rng.uniform(numpy.log(0.5), numpy.log(2.0)))
            free[box] = r * numpy.exp(1j * rng.uniform(0, 2 * numpy.pi))
    return TorusPoint.from_free(flag, free)


def monomial_boxes(I: Sequence[int], n: int) -> Counter:
    """
    Exponents of d_I(tau): tau^(k)_l for l = 1..|I| and k = i_l..n-1, i.e.
    the boxes above the positive path of I
    """
    I = _check_index_set(I, n)
    return Counter(
        (k, l) for l, i in enumerate(I, start=1) for k in range(i, n)
    )


def torus_monomial(tau: TorusPoint, I: Sequence[int]) -> complex:
    value = 1 + 0j
    for box, power in monomial_boxes(I, tau.flag.n).items():
        value *= complex(tau.tau[box]) ** power
    return value


def monomial_embedding(tau: TorusPoint, flag: Optional[FlagType] = None) -> PluckerPoint:
    """
    Z_I = d_I(tau), normalized per size
    """
    flag = flag or tau.flag
    values = {I: torus_monomial(tau, I) for I in plucker_index_sets(flag)}
    return PluckerPoint.normalized(flag, values)


def plucker_point_from_matrix(z, flag: FlagType) -> PluckerPoint:
    """
    Normalized minors p_I(z) = q_I(z, 1) on the first |I| columns
    """
    z = numpy.asarray(z, dtype=complex)
    values = {
        I: complex(numpy.linalg.det(z[[i - 1 for i in I], : len(I)]))
        for I in plucker_index_sets(flag)
    }
    return PluckerPoint.normalized(flag, values)


def stage_parameters(n: int, m: int) -> tuple[int, ...]:
    """
    (t_2, ..., t_n) of the fiber X_{m+1,0} = X_{m,1}: t_2..t_m = 1 and
    t_{m+1}..t_n = 0
    """
    if not 1 <= m <= n:
        raise ValueError(f"❌ Stage m must lie in 1..{n}, got {m}")
    return (1,) * (m - 1) + (0,) * (n - m)


def stage_plucker_point(z, flag: FlagType, m: int) -> PluckerPoint:
    """
    Normalized q~_I(z, t) on the fiber X_{m+1,0}, where the eigenvalues of
    mu^(m) are the torus moments nu~^(m)_j
    """
    z = numpy.asarray(z, dtype=complex)
    ts = stage_parameters(flag.n, m)
    values = {
        I: multi_deformed_plucker(z, I, ts) for I in plucker_index_sets(flag)
    }
    return PluckerPoint.normalized(flag, values)


def random_stage_point(flag: FlagType, m: int, seed: int = 0) -> PluckerPoint:
    rng = numpy.random.default_rng(seed)
    shape = (flag.n, flag.n)
    z = rng.normal(size=shape) + 1j * rng.normal(size=shape)
    return stage_plucker_point(z, flag, m)


def binomial_relations_hold(flag: FlagType) -> bool:
    """
    Exact check of d_I d_J = d_{I meet J} d_{I join J} for every pair of
    Plücker index sets, by comparing exponent multisets
    """
    index_sets = plucker_index_sets(flag)
    checked = 0
    for I, J in combinations(index_sets, 2):
        meet, join = meet_join(I, J)
        lhs = monomial_boxes(I, flag.n) + monomial_boxes(J, flag.n)
        rhs = monomial_boxes(meet, flag.n) + monomial_boxes(join, flag.n)
        if lhs != rhs:
            logger.info("❌ Binomial relation fails for %s, %s", I, J)
            return False
        checked += 1
    logger.info("✅ %s binomial relations hold for %s", checked, flag)
    return True


# Moment maps ----------------------------------------------------------------


def _stage_coefficients(flag: FlagType, lambda_) -> list[tuple[int, float]]:
    """
    (n_k, lambda_{n_k} - lambda_{n_{k+1}}) for k = 1..r, with n_{r+1} = n
    """
    lam = [float(x) for x in lambda_]
    bounds = flag.bounds
    return [
        (bounds[k], lam[bounds[k] - 1] - lam[bounds[k + 1] - 1])
        for k in range(1, flag.r + 1)
    ]


def moment_mu(Z: PluckerPoint, m: int, lambda_) -> numpy.ndarray:
    """
    mu^(m)(Z) = sum_k (lambda_{n_k} - lambda_{n_{k+1}})
                (sum_{|I'| = n_k - 1} Z_{iI'} conj(Z_{jI'}))_{i,j <= m}
                + lambda_n 1_m
    """
    n = Z.flag.n
    if not 1 <= m <= n:
        raise ValueError(f"❌ Block size m must lie in 1..{n}, got {m}")
    mu = numpy.zeros((m, m), dtype=complex)
    for size, coef in _stage_coefficients(Z.flag, lambda_):
        for rest in combinations(range(1, n + 1), size - 1):
            v = numpy.array([Z.signed((i,) + rest) for i in range(1, m + 1)])
            mu += coef * numpy.outer(v, v.conj())
    mu += float(lambda_[-1]) * numpy.eye(m)
    return mu


def moment_nu(Z: PluckerPoint, box: tuple[int, int], lambda_) -> float:
    """
    nu~^(m)_j(Z) = sum_k (lambda_{n_k} - lambda_{n_{k+1}})
                   sum_{|I| = n_k, i_j <= m} |Z_I|^2 + lambda_n
    """
    m, j = box
    value = float(lambda_[-1])
    for size, coef in _stage_coefficients(Z.flag, lambda_):
        value += coef * sum(
            abs(v) ** 2
            for I, v in Z.values.items()
            if len(I) == size and len(I) >= j and I[j - 1] <= m
        )
    return value


def moment_spectrum_residual(Z: PluckerPoint, m: int, lambda_) -> float:
    """
    max_j |j-th eigenvalue of mu^(m) - nu~^(m)_j|
    """
    spectrum = numpy.linalg.eigvalsh(moment_mu(Z, m, lambda_))[::-1]
    nu = numpy.array([moment_nu(Z, (m, j), lambda_) for j in range(1, m + 1)])
    return float(numpy.abs(spectrum - nu).max())
