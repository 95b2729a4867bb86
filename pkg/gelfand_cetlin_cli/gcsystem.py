"""
The Gelfand-Cetlin system on the adjoint orbit O_lambda

A point of O_lambda is a Hermitian matrix x with spectrum lambda. The GC map
sends x to the eigenvalues of its upper-left k x k blocks x^(k), read off
at the ladder boxes. fiber_point goes the other way: given a pattern it grows
x one row and column at a time, each step solving an inverse eigenvalue
problem for a bordered (arrow) matrix.
"""

import logging
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy
from scipy.stats import unitary_group

from gelfand_cetlin_cli.config import config
from gelfand_cetlin_cli.flagcombi import FlagType, coordinate_order
from gelfand_cetlin_cli.gcpoly import GCPattern, GCPolytope, contains
from gelfand_cetlin_cli.gcpoly.patterns import assemble_rows

logger = logging.getLogger(__name__)

CONSTRUCTION_TOL = config["gcsystem"]["construction_tol"]
SPECTRUM_TOL = config["gcsystem"]["spectrum_tol"]
BATCH_SIZE = config["gcsystem"]["rejection_batch_size"]
MAX_BATCHES = config["gcsystem"]["rejection_max_batches"]


@dataclass(frozen=True, eq=False)
class HermitianMatrix:
    """
    Dense complex Hermitian matrix, symmetrized on construction
    """

    entries: numpy.ndarray

    def __post_init__(self):
        A = numpy.atleast_2d(numpy.asarray(self.entries, dtype=complex))
        if A.ndim != 2 or A.shape[0] != A.shape[1]:
            raise ValueError(f"❌ Expected a square matrix, got shape {A.shape}")
        scale = max(1.0, float(numpy.abs(A).max(initial=0.0)))
        deviation = float(numpy.abs(A - A.conj().T).max(initial=0.0))
        if deviation > CONSTRUCTION_TOL * scale:
            raise ValueError(
                f"❌ Matrix is not Hermitian: |A - A*| = {deviation:.3e}"
            )
        object.__setattr__(self, "entries", (A + A.conj().T) / 2)

    @property
    def n(self) -> int:
        return self.entries.shape[0]

    def leading_block(self, k: int) -> numpy.ndarray:
        return self.entries[:k, :k]

    def spectrum(self) -> numpy.ndarray:
        """
        Eigenvalues in descending order
        """
        return numpy.linalg.eigvalsh(self.entries)[::-1]


@dataclass(frozen=True, eq=False)
class OrbitPoint:
    """
    A point of O_lambda: a Hermitian matrix whose spectrum is lambda
    """

    matrix: HermitianMatrix
    lambda_: tuple[float, ...]

    def __post_init__(self):
        lam = numpy.asarray([float(x) for x in self.lambda_])
        if lam.shape[0] != self.matrix.n:
            raise ValueError(
                f"❌ lambda has {lam.shape[0]} entries for a"
                f" {self.matrix.n} x {self.matrix.n} matrix"
            )
        error = float(numpy.abs(self.matrix.spectrum() - lam).max(initial=0.0))
        if error > SPECTRUM_TOL * max(1.0, float(numpy.abs(lam).max())):
            raise ValueError(
                f"❌ Spectrum differs from lambda by {error:.3e}"
            )
        object.__setattr__(self, "lambda_", tuple(float(x) for x in lam))

    @property
    def entries(self) -> numpy.ndarray:
        return self.matrix.entries


def _as_float_lambda(lambda_: Sequence) -> numpy.ndarray:
    lam = numpy.asarray([float(x) for x in lambda_])
    if numpy.any(numpy.diff(lam) > 0):
        raise ValueError(f"❌ lambda must be weakly decreasing, got {list(lam)}")
    return lam


def random_orbit_point(lambda_: Sequence, seed: int = 0) -> OrbitPoint:
    """
    U diag(lambda) U* for a Haar-random unitary U drawn from seed
    """
    lam = _as_float_lambda(lambda_)
    n = lam.shape[0]
    if n == 1:
        # scipy's unitary_group needs dimension > 1
        U = numpy.ones((1, 1), dtype=complex)
    else:
        U = unitary_group.rvs(n, random_state=seed)
    x = U @ numpy.diag(lam) @ U.conj().T
    return OrbitPoint(HermitianMatrix(x), tuple(lam))


def gc_map(
    x, flag: FlagType, coords: Optional[Sequence[tuple[int, int]]] = None
) -> numpy.ndarray:
    """
    Phi_lambda(x): the i-th largest eigenvalue of x^(k) at every ladder box
    (k, i), in coords order (bottom-up when omitted)

    Raises ValueError when an eigen-decomposition fails
    """
    if isinstance(x, OrbitPoint):
        x = x.matrix
    if not isinstance(x, HermitianMatrix):
        x = HermitianMatrix(x)
    if x.n != flag.n:
        raise ValueError(f"❌ Expected an {flag.n} x {flag.n} matrix, got {x.n}")
    if coords is None:
        coords = coordinate_order(flag)

    spectra = {}
    try:
        for k in sorted({k for k, _ in coords}):
            spectra[k] = numpy.linalg.eigvalsh(x.leading_block(k))[::-1]
    except numpy.linalg.LinAlgError as e:
        raise ValueError(f"❌ Eigen-decomposition failed: {e}") from e

    return numpy.array([spectra[k][i - 1] for k, i in coords])


def arrow_completion(a: Sequence[float], b: Sequence[float]) -> HermitianMatrix:
    """
    Bordered matrix [[diag(b), x], [x*, c]] with spectrum a

    Arguments:
        a - k + 1 target eigenvalues, descending
        b - k diagonal entries interlacing a: a_1 >= b_1 >= a_2 >= ... >= b_k
            >= a_{k+1}

    Returns:
        HermitianMatrix with real non-negative couplings x_j and corner
        c = sum(a) - sum(b)
    """
    a = numpy.asarray([float(v) for v in a])
    b = numpy.asarray([float(v) for v in b])
    k = b.shape[0]
    if a.shape[0] != k + 1:
        raise ValueError(
            f"❌ Need len(a) = len(b) + 1, got {a.shape[0]} and {k}"
        )
    scale = max(1.0, float(numpy.abs(a).max()))
    tol = CONSTRUCTION_TOL * scale
    for j in range(k):
        if not a[j] + tol >= b[j]:
            raise ValueError(
                f"❌ Interlacing fails at a_{j + 1} >= b_{j + 1}:"
                f" {a[j]} < {b[j]}"
            )
        if not b[j] + tol >= a[j + 1]:
            raise ValueError(
                f"❌ Interlacing fails at b_{j + 1} >= a_{j + 2}:"
                f" {b[j]} < {a[j + 1]}"
            )

    # Deflation: b_j equal to a neighbouring a_i decouples from the corner
    used = set()
    coupled = []
    for j in range(k):
        match = next(
            (i for i in (j, j + 1) if i not in used and abs(a[i] - b[j]) <= tol),
            None,
        )
        if match is None:
            coupled.append(j)
        else:
            used.add(match)
    free_a = numpy.array([a[i] for i in range(k + 1) if i not in used])
    free_b = b[coupled]

    x = numpy.zeros(k)
    for pos, j in enumerate(coupled):
        num = -numpy.prod(free_b[pos] - free_a)
        den = numpy.prod(numpy.delete(free_b[pos] - free_b, pos))
        x[j] = numpy.sqrt(max(num / den, 0.0))

    M = numpy.zeros((k + 1, k + 1), dtype=complex)
    M[:k, :k] = numpy.diag(b)
    M[:k, k] = x
    M[k, :k] = x
    M[k, k] = a.sum() - b.sum()
    return HermitianMatrix(M)


def fiber_point(poly: GCPolytope, u: Sequence[float]) -> OrbitPoint:
    """
    A matrix x in O_lambda with gc_map(x) = u, built one row at a time:

        x^(k+1) = W A W*,  W = diag(V, 1)

    where x^(k) = V diag(lambda^(k)) V* and A is the arrow completion of the
    rows lambda^(k+1), lambda^(k)
    """
    u = [float(v) for v in u]
    if not contains(poly, u, tol=SPECTRUM_TOL):
        raise ValueError(f"❌ Point {u} lies outside the GC polytope")

    lam = [float(v) for v in poly.lambda_]
    rows = assemble_rows(poly.flag, lam, poly.coords, u)
    x = numpy.array([[rows[0][0]]], dtype=complex)
    for k in range(1, poly.flag.n):
        eigenvalues, V = numpy.linalg.eigh(x)
        V = V[:, numpy.argsort(-eigenvalues, kind="stable")]
        A = arrow_completion(rows[k], rows[k - 1]).entries
        W = numpy.eye(k + 1, dtype=complex)
        W[:k, :k] = V
        x = W @ A @ W.conj().T

    return OrbitPoint(HermitianMatrix(x), tuple(lam))


def sample_interior_points(
    poly: GCPolytope, count: int, seed: int = 0
) -> numpy.ndarray:
    """
    count points drawn uniformly from the interior of Delta_lambda by
    rejection from the box lambda_{i+n-k} <= lambda^(k)_i <= lambda_i
    """
    if count < 0:
        raise ValueError(f"❌ count must be non-negative, got {count}")
    n = poly.flag.n
    lam = [float(v) for v in poly.lambda_]
    lo = numpy.array([lam[i + n - k - 1] for k, i in poly.coords])
    hi = numpy.array([lam[i - 1] for k, i in poly.coords])

    rng = numpy.random.default_rng(seed)
    accepted = []
    total = 0
    for _ in range(MAX_BATCHES):
        if total >= count:
            break
        batch = rng.uniform(lo, hi, size=(BATCH_SIZE, poly.N))
        inside = batch[numpy.all(poly.ell_float(batch) > 0, axis=1)]
        accepted.append(inside)
        total += inside.shape[0]
    else:
        if total < count:
            raise ValueError(
                f"❌ Rejection sampling produced {total} of {count} points"
            )

    points = numpy.concatenate(accepted or [numpy.empty((0, poly.N))])
    logger.debug("Accepted %s of %s box samples", total, len(accepted) * BATCH_SIZE)
    return points[:count]


def pattern_from_point(poly: GCPolytope, u: Sequence) -> GCPattern:
    """
    Full triangular array with free entries u, pinned entries and top row
    """
    return GCPattern.from_point(poly.flag, poly.lambda_, poly.coords, tuple(u))


def point_from_pattern(poly: GCPolytope, pattern: GCPattern) -> tuple:
    return pattern.point(poly.coords)
