"""
The classical Toda lattice side of the GC potential

For the full flag manifold the potential at T = e^-1 is the Toda phase
function f_q written in the coordinates

    T_ij = lambda^(k)_i(u) - x^(k)_i,   k = i + j - 1,   T_{i,n-i+1} = lambda_i

with X_ij = exp(T_ij - T_{i,j+1}), Y_ij = exp(T_{i+1,j} - T_ij) and
q_i = exp(lambda_{i+1} - lambda_i). The Toda Hamiltonians D_1..D_n are the
coefficients of det(A + x I) for the tridiagonal matrix A with diagonal p,
superdiagonal q and subdiagonal -1.
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Optional, Sequence

import numpy
import sympy
from scipy.integrate import solve_ivp

from gelfand_cetlin_cli.config import config
from gelfand_cetlin_cli.flagcombi import FlagType, coordinate_order
from gelfand_cetlin_cli.gcpoly import build_polytope
from gelfand_cetlin_cli.gcsystem import sample_interior_points
from gelfand_cetlin_cli.potential import LaurentPotential, critical_points
from gelfand_cetlin_cli.potential.newton import deduplicate, newton_exp_sum

logger = logging.getLogger(__name__)

FD_STEP = config["toda"]["fd_step"]
LEVEL_SET_TOL = config["toda"]["level_set_tol"]
DEDUP_TOL = config["potential"]["dedup_tol"]


@dataclass(frozen=True)
class TodaState:
    """
    Momenta p_0..p_{n-1} and couplings q_1..q_{n-1}
    """

    p: tuple
    q: tuple

    def __post_init__(self):
        object.__setattr__(self, "p", tuple(self.p))
        object.__setattr__(self, "q", tuple(self.q))
        if len(self.q) != len(self.p) - 1:
            raise ValueError(
                f"❌ Expected {len(self.p) - 1} couplings for {len(self.p)}"
                f" momenta, got {len(self.q)}"
            )

    @property
    def n(self) -> int:
        return len(self.p)

    @property
    def is_exact(self) -> bool:
        return all(isinstance(v, (int, Fraction)) for v in self.p + self.q)

    def matrix(self) -> sympy.Matrix:
        def entry(v):
            if isinstance(v, (int, Fraction)):
                return sympy.Rational(v.numerator, v.denominator)
            return sympy.sympify(complex(v))

        A = sympy.zeros(self.n, self.n)
        for i in range(self.n):
            A[i, i] = entry(self.p[i])
        for i in range(self.n - 1):
            A[i, i + 1] = entry(self.q[i])
            A[i + 1, i] = -1
        return A


def toda_hamiltonians(state: TodaState) -> list:
    """
    (D_1, ..., D_n) with det(A + xI) = x^n + D_1 x^(n-1) + ... + D_n

    Exact input gives Fractions; anything else gives complex numbers
    """
    x = sympy.Symbol("x")
    coeffs = (-state.matrix()).charpoly(x).all_coeffs()
    if state.is_exact:
        return [Fraction(int(c.p), int(c.q)) for c in coeffs[1:]]
    return [complex(sympy.N(c)) for c in coeffs[1:]]


def toda_energy(state: TodaState):
    """
    1/2 sum p_i^2 - sum q_i, which equals D_1^2/2 - D_2
    """
    return sum(p * p for p in state.p) / 2 - sum(state.q)


def toda_flow(
    state: TodaState, duration: float, steps: int = 10
) -> list[TodaState]:
    """
    Integrate dp_i/dt = q_i - q_{i+1}, dq_i/dt = q_i (p_i - p_{i-1}) with
    q_0 = q_n = 0; returns the states at steps + 1 equally spaced times
    """
    n = state.n

    def rhs(_, z):
        p, q = z[:n], z[n:]
        padded = numpy.concatenate([[0.0], q, [0.0]])
        dp = padded[:-1] - padded[1:]
        dq = q * (p[1:] - p[:-1])
        return numpy.concatenate([dp, dq])

    z0 = numpy.array([float(v) for v in state.p + state.q])
    times = numpy.linspace(0.0, float(duration), steps + 1)
    solution = solve_ivp(
        rhs,
        (0.0, float(duration)),
        z0,
        t_eval=times,
        method="DOP853",
        rtol=1e-11,
        atol=1e-13,
    )
    if not solution.success:
        raise ValueError(f"❌ Toda flow integration failed: {solution.message}")
    return [
        TodaState(p=tuple(col[:n]), q=tuple(col[n:])) for col in solution.y.T
    ]


@dataclass(frozen=True, eq=False)
class PhaseCoordinates:
    """
    Interior T_ij (i + j <= n) with boundary T_{i,n-i+1} = lambda_i
    """

    n: int
    interior: dict
    lambda_: tuple

    def __post_init__(self):
        expected = {
            (i, j) for i in range(1, self.n) for j in range(1, self.n - i + 1)
        }
        if set(self.interior) != expected:
            raise ValueError(
                f"❌ Phase coordinates need T_ij for i + j <= {self.n}"
            )
        if len(self.lambda_) != self.n:
            raise ValueError(f"❌ lambda must have {self.n} entries")

    def T(self, i: int, j: int):
        if i + j == self.n + 1:
            return self.lambda_[i - 1]
        return self.interior[(i, j)]

    def X(self, i: int, j: int):
        return numpy.exp(self.T(i, j) - self.T(i, j + 1))

    def Y(self, i: int, j: int):
        return numpy.exp(self.T(i + 1, j) - self.T(i, j))

    def q(self, i: int) -> float:
        return math.exp(float(self.lambda_[i]) - float(self.lambda_[i - 1]))

    def pairs(self) -> list[tuple[int, int]]:
        return [
            (i, j) for i in range(1, self.n) for j in range(1, self.n - i + 1)
        ]

    def constraint_residual(self) -> float:
        """
        max |Y_ij X_ij - X_{i+1,j} Y_{i,j+1}| and |X_{i,n-i} Y_{i,n-i} - q_i|
        """
        residuals = [0.0]
        for i, j in self.pairs():
            if i + j + 1 <= self.n:
                residuals.append(
                    abs(
                        self.Y(i, j) * self.X(i, j)
                        - self.X(i + 1, j) * self.Y(i, j + 1)
                    )
                )
        for i in range(1, self.n):
            j = self.n - i
            residuals.append(abs(self.X(i, j) * self.Y(i, j) - self.q(i)))
        return float(max(residuals))


def phase_function(pc: PhaseCoordinates):
    """
    f_q = sum over i + j <= n of X_ij + Y_ij
    """
    return sum(pc.X(i, j) + pc.Y(i, j) for i, j in pc.pairs())


def _box_of(i: int, j: int) -> tuple[int, int]:
    return (i + j - 1, i)


def _require_full(flag: FlagType):
    if not flag.is_full:
        raise ValueError(
            f"❌ The Toda correspondence needs a full flag manifold, got {flag}"
        )


def gc_to_toda(pot: LaurentPotential, x: Sequence, u: Sequence) -> PhaseCoordinates:
    """
    T_ij = lambda^(k)_i(u) - x^(k)_i for k = i + j - 1, both vectors in the
    potential's coordinate order
    """
    _require_full(pot.flag)
    n = pot.flag.n
    index = {box: a for a, box in enumerate(pot.coords)}
    interior = {
        (i, j): complex(u[index[_box_of(i, j)]]) - complex(x[index[_box_of(i, j)]])
        for i in range(1, n)
        for j in range(1, n - i + 1)
    }
    return PhaseCoordinates(n, interior, tuple(float(v) for v in pot.lambda_))


def phase_coordinates_from_y(pot: LaurentPotential, y: Sequence) -> PhaseCoordinates:
    """
    At T = e^-1 the potential coordinate y corresponds to T = -log y
    """
    _require_full(pot.flag)
    n = pot.flag.n
    index = {box: a for a, box in enumerate(pot.coords)}
    logs = numpy.log(numpy.asarray(y, dtype=complex))
    interior = {
        (i, j): -logs[index[_box_of(i, j)]]
        for i in range(1, n)
        for j in range(1, n - i + 1)
    }
    return PhaseCoordinates(n, interior, tuple(float(v) for v in pot.lambda_))


def _shift_boundary(pc: PhaseCoordinates, i: int, h: float) -> PhaseCoordinates:
    lam = list(pc.lambda_)
    lam[i - 1] += h
    return PhaseCoordinates(pc.n, pc.interior, tuple(lam))


def boundary_derivative(pc: PhaseCoordinates, i: int, h: float = FD_STEP):
    """
    df_q/dlambda_i at fixed interior coordinates; central differences with
    one Richardson step
    """

    def central(step):
        plus = phase_function(_shift_boundary(pc, i, step))
        minus = phase_function(_shift_boundary(pc, i, -step))
        return (plus - minus) / (2 * step)

    return (4 * central(h / 2) - central(h)) / 3


def toda_momenta(pc: PhaseCoordinates, sign: int = 1, reverse: bool = False):
    """
    p_{i-1} = sign * df_q/dlambda_i for i = 2..n and p_0 = -(p_1 + ... +
    p_{n-1}) so that D_1 = 0; reverse flips the order of p
    """
    p = [sign * boundary_derivative(pc, i) for i in range(2, pc.n + 1)]
    p = [-sum(p)] + p
    if reverse:
        p = p[::-1]
    return p


def level_set_check(pot: LaurentPotential, T: float = math.exp(-1), **kwargs) -> dict:
    """
    Toda momenta at every critical point of the potential at T = e^-1 and
    the residuals max |D_i|, i >= 2, under each sign and ordering convention
    """
    _require_full(pot.flag)
    if not math.isclose(T, math.exp(-1)):
        raise ValueError("❌ The phase function matches the potential at T = e^-1")
    points = critical_points(pot, T, **kwargs)
    conventions = []
    for sign, reverse in product((1, -1), (False, True)):
        worst = 0.0
        for cp in points:
            pc = phase_coordinates_from_y(pot, cp.y)
            p = toda_momenta(pc, sign=sign, reverse=reverse)
            q = [pc.q(i) for i in range(1, pc.n)]
            D = toda_hamiltonians(TodaState(p=p, q=q))
            worst = max([worst] + [abs(d) for d in D[1:]])
        conventions.append({"sign": sign, "reverse": reverse, "max_residual": worst})

    best = min(conventions, key=lambda c: c["max_residual"])
    passed = best["max_residual"] <= LEVEL_SET_TOL
    logger.info(
        "%s Toda level set: best residual %.3e (sign %+d, reverse %s) over %s"
        " critical points",
        "✅" if passed else "⚠️",
        best["max_residual"],
        best["sign"],
        best["reverse"],
        len(points),
    )
    return {
        "critical_points": len(points),
        "conventions": conventions,
        "best": best,
        "passed": passed,
    }


def _phase_exponents(n: int, lambda_: Sequence[float]):
    """
    f_q = sum_i c_i exp(<a_i, t>) over the interior coordinates t ordered as
    the top-down ladder boxes
    """
    boxes = coordinate_order(FlagType.full(n), "top-down")
    index = {box: a for a, box in enumerate(boxes)}
    lam = [float(v) for v in lambda_]

    def linear(i, j):
        vec = numpy.zeros(len(boxes))
        if i + j == n + 1:
            return vec, lam[i - 1]
        vec[index[_box_of(i, j)]] = 1.0
        return vec, 0.0

    rows, consts = [], []
    for i in range(1, n):
        for j in range(1, n - i + 1):
            for plus, minus in (((i, j), (i, j + 1)), ((i + 1, j), (i, j))):
                a_plus, c_plus = linear(*plus)
                a_minus, c_minus = linear(*minus)
                rows.append(a_plus - a_minus)
                consts.append(c_plus - c_minus)
    return boxes, numpy.array(rows), numpy.exp(numpy.array(consts))


def phase_critical_points(
    lambda_: Sequence,
    seed: Optional[int] = None,
    max_starts: Optional[int] = None,
) -> list[PhaseCoordinates]:
    """
    Critical points of f_q in the interior T-coordinates, boundary fixed by
    lambda, found by seeded multi-start Newton
    """
    seed = config["potential"]["seed"] if seed is None else seed
    max_starts = max_starts or config["potential"]["max_starts"]
    n = len(lambda_)
    boxes, A, c = _phase_exponents(n, lambda_)

    poly = build_polytope(FlagType.full(n), lambda_, boxes)
    rng = numpy.random.default_rng(seed)
    u = sample_interior_points(poly, max_starts, seed=seed)
    roots = config["potential"]["phase_roots"]
    starts = u + 2j * numpy.pi * rng.integers(0, roots, size=u.shape) / roots

    vertices = numpy.array([[float(x) for x in p] for p in poly.vertex_points])
    margin = config["potential"]["root_box_margin"]
    box = (vertices.min(axis=0) - margin, vertices.max(axis=0) + margin)
    S, converged = newton_exp_sum(A, c, starts, box=box)
    Y = numpy.exp(-S[converged])
    Y = Y[deduplicate(Y, DEDUP_TOL)]
    lam = tuple(float(v) for v in lambda_)
    out = []
    for y in Y:
        interior = {}
        for a, (k, i) in enumerate(boxes):
            interior[(i, k - i + 1)] = -numpy.log(y[a])
        out.append(PhaseCoordinates(n, interior, lam))
    logger.info("✅ %s critical points of the phase function for n=%s", len(out), n)
    return out
