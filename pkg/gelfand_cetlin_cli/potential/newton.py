"""
Batched damped Newton for sums of exponentials

Both the potential (in s = log y) and the Toda phase function (in the
interior T-coordinates) have the form

    f(s) = sum_i c_i exp(<a_i, s>)

with gradient A^T E and Hessian A^T diag(E) A, where E_i = c_i exp(<a_i, s>).
Many starts are iterated together as the rows of one array.
"""

import logging
from typing import Optional

import numpy

from gelfand_cetlin_cli.config import config

logger = logging.getLogger(__name__)

NEWTON_MAX_ITER = config["potential"]["newton_max_iter"]
NEWTON_MAX_STEP = config["potential"]["newton_max_step"]
GRADIENT_TOL = config["potential"]["gradient_tol"]


def exp_sum_terms(A: numpy.ndarray, c: numpy.ndarray, S: numpy.ndarray):
    """
    E with E[..., i] = c_i exp(<a_i, s>)
    """
    with numpy.errstate(over="ignore", invalid="ignore"):
        return c * numpy.exp(S @ A.T)


def newton_exp_sum(
    A: numpy.ndarray,
    c: numpy.ndarray,
    starts: numpy.ndarray,
    max_iter: int = NEWTON_MAX_ITER,
    max_step: float = NEWTON_MAX_STEP,
    tol: float = GRADIENT_TOL,
    box: Optional[tuple[numpy.ndarray, numpy.ndarray]] = None,
) -> tuple[numpy.ndarray, numpy.ndarray]:
    """
    Run damped Newton from every row of starts

    Arguments:
        A - m x N exponent matrix
        c - m coefficients
        starts - M x N complex starting points
        max_iter - iteration cap per start
        max_step - largest sup-norm step taken in one iteration
        tol - relative gradient at which a row counts as converged
        box - optional (lo, hi) bounds on Re(s); rows converging outside
              them are roots at infinity and are not marked converged

    Returns:
        (S, converged) with the final iterates and a boolean mask
    """
    A = numpy.asarray(A, dtype=float)
    c = numpy.asarray(c, dtype=complex)
    S = numpy.array(starts, dtype=complex, ndmin=2)
    active = numpy.ones(S.shape[0], dtype=bool)
    converged = numpy.zeros(S.shape[0], dtype=bool)

    for _ in range(max_iter):
        rows = numpy.flatnonzero(active)
        if rows.size == 0:
            break
        Sa = S[rows]
        E = exp_sum_terms(A, c, Sa)
        with numpy.errstate(over="ignore", invalid="ignore"):
            g = E @ A
            scale = numpy.abs(E).sum(axis=1)
            rel = numpy.abs(g).max(axis=1) / scale
        finite = numpy.isfinite(E).all(axis=1) & numpy.isfinite(rel)
        small = finite & (rel <= tol)
        if box is None:
            done = small
        else:
            inside = ((Sa.real >= box[0]) & (Sa.real <= box[1])).all(axis=1)
            done = small & inside

        converged[rows[done]] = True
        active[rows[small | ~finite]] = False

        moving = finite & ~small
        if not moving.any():
            continue
        H = numpy.einsum("mi,ia,ib->mab", E[moving], A, A)
        step = -numpy.einsum("mab,mb->ma", numpy.linalg.pinv(H), g[moving])
        size = numpy.abs(step).max(axis=1)
        factor = numpy.minimum(1.0, max_step / numpy.maximum(size, 1e-300))
        S[rows[moving]] = Sa[moving] + step * factor[:, None]

    logger.debug(
        "Newton: %s of %s starts converged", int(converged.sum()), S.shape[0]
    )
    return S, converged


def deduplicate(Y: numpy.ndarray, tol: float) -> list[int]:
    """
    Indices of the first representative of every cluster of rows that agree
    to relative tolerance tol in every coordinate
    """
    keep = []
    for idx, y in enumerate(Y):
        duplicate = any(
            numpy.all(numpy.abs(y - Y[j]) <= tol * numpy.abs(Y[j])) for j in keep
        )
        if not duplicate:
            keep.append(idx)
    return keep
