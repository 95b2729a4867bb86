"""
Critical points of the potential at a numeric value of T

Critical points solve y_k dPO/dy_k = 0. They are found by multi-start
Newton in s = log y: starts sit at log|y| = u log T for points u of the
polytope, since the valuations of the true roots lie in Delta_lambda, with
phases at random 6th roots of unity. Converged roots are deduplicated and
sorted canonically so repeated runs give identical output.

Valuations are estimated by following each root to T = 1e-2, 1e-3, 1e-4 and
fitting the slope of log|y_k| against log T.
"""

import logging
from dataclasses import dataclass, replace
from typing import Optional

import numpy
from scipy.optimize import linprog, minimize

from gelfand_cetlin_cli.config import config
from gelfand_cetlin_cli.flagcombi import FlagType, cohomology_rank
from gelfand_cetlin_cli.gcpoly import contains
from gelfand_cetlin_cli.gcsystem import fiber_point, gc_map, sample_interior_points
from gelfand_cetlin_cli.potential.closed_forms import label_branch
from gelfand_cetlin_cli.potential.laurent import (
    LaurentPotential,
    log_hessian,
    relative_gradient,
    term_values,
)
from gelfand_cetlin_cli.potential.newton import (
    deduplicate,
    exp_sum_terms,
    newton_exp_sum,
)

logger = logging.getLogger(__name__)

settings = config["potential"]


@dataclass(frozen=True, eq=False)
class CriticalPoint:
    y: numpy.ndarray
    T: float
    hessian_det: complex
    nondegenerate: bool
    gradient_residual: float
    valuation: Optional[numpy.ndarray] = None
    valuation_residual: Optional[float] = None
    label: Optional[str] = None

    def to_dict(self) -> dict:
        return {
            "y_re": self.y.real.tolist(),
            "y_im": self.y.imag.tolist(),
            "valuation": (
                None if self.valuation is None else self.valuation.tolist()
            ),
            "valuation_residual": self.valuation_residual,
            "nondegenerate": self.nondegenerate,
            "hessian_det": complex(self.hessian_det),
            "gradient_residual": self.gradient_residual,
            "branch": self.label,
        }


def _validate_T(T: float) -> float:
    T = float(T)
    if not 0 < T < 1:
        raise ValueError(f"❌ T must lie in (0, 1), got {T}")
    return T


def _center(pot: LaurentPotential) -> numpy.ndarray:
    return numpy.array(
        [[float(x) for x in p] for p in pot.poly.vertex_points]
    ).mean(axis=0)


def _log_box(pot: LaurentPotential, T: float):
    """
    Bounds on log|y| for roots whose valuation lies near Delta_lambda
    """
    vertices = numpy.array(
        [[float(x) for x in p] for p in pot.poly.vertex_points]
    )
    logT = numpy.log(T)
    margin = settings["root_box_margin"]
    return (
        logT * vertices.max(axis=0) - margin,
        logT * vertices.min(axis=0) + margin,
    )


def hessian_nondegenerate(
    pot: LaurentPotential, y, T: float
) -> tuple[bool, complex]:
    """
    (|det H| > 1e-8 (sum_i |E_i|)^N, det H) for the logarithmic Hessian H

    Raises ValueError when y is not critical (relative gradient > 1e-8)
    """
    residual = relative_gradient(pot, y, T)
    if residual > settings["critical_tol"]:
        raise ValueError(
            f"❌ Not a critical point: relative gradient {residual:.3e}"
        )
    det = complex(numpy.linalg.det(log_hessian(pot, y, T)))
    scale = numpy.abs(term_values(pot, y, T)).sum() ** pot.N
    return bool(abs(det) > settings["hessian_tol"] * scale), det


def _canonical_key(y: numpy.ndarray, T: float):
    logT = numpy.log(T)
    magnitudes = tuple(numpy.round(numpy.log(numpy.abs(y)) / logT, 6))
    angles = numpy.round(numpy.mod(numpy.angle(y), 2 * numpy.pi), 6)
    angles[angles >= round(2 * numpy.pi, 6)] = 0.0
    return magnitudes + tuple(angles)


def _make_point(pot, y, T) -> CriticalPoint:
    nondegenerate, det = hessian_nondegenerate(pot, y, T)
    return CriticalPoint(
        y=y,
        T=T,
        hessian_det=det,
        nondegenerate=nondegenerate,
        gradient_residual=relative_gradient(pot, y, T),
        label=label_branch(pot, y, T),
    )


def critical_points(
    pot: LaurentPotential,
    T: float,
    max_starts: Optional[int] = None,
    seed: Optional[int] = None,
) -> list[CriticalPoint]:
    """
    All critical points found from up to max_starts seeded starts,
    deduplicated and canonically sorted
    """
    T = _validate_T(T)
    max_starts = max_starts or settings["max_starts"]
    seed = settings["seed"] if seed is None else seed
    logger.info("🏭 Solving for critical points of %s at T=%s", pot.flag, T)

    rng = numpy.random.default_rng(seed)
    u = numpy.vstack(
        [_center(pot)[None, :]]
        + [sample_interior_points(pot.poly, max_starts - 1, seed=seed)]
    )
    roots = settings["phase_roots"]
    phases = 2j * numpy.pi * rng.integers(0, roots, size=u.shape) / roots
    starts = numpy.log(T) * u + phases

    A, c = pot.exponents, pot.coefficients(T)
    S, converged = newton_exp_sum(A, c, starts, box=_log_box(pot, T))
    if not converged.any():
        logger.warning("⚠️ Newton did not converge from any of %s starts", len(u))
        return []

    Y = numpy.exp(S[converged])
    Y = Y[deduplicate(Y, settings["dedup_tol"])]
    points = [_make_point(pot, y, T) for y in Y]
    finite = [cp for cp in points if numpy.isfinite(cp.hessian_det)]
    if len(finite) < len(points):
        logger.warning(
            "⚠️ Dropped %s roots with a non-finite Hessian", len(points) - len(finite)
        )
    points = sorted(finite, key=lambda cp: _canonical_key(cp.y, T))
    logger.info(
        "✅ %s critical points (%s nondegenerate) from %s starts",
        len(points),
        sum(cp.nondegenerate for cp in points),
        len(u),
    )
    return points


def _continue(pot: LaurentPotential, s: numpy.ndarray, logt: float, target: float):
    """
    Follow a root s(logT) from logt to target: Euler predictor along
    ds/dlogT = H^-1 A^T (tau * E), Newton corrector, adaptive step
    """
    A, tau = pot.exponents, pot.offsets
    step = settings["continuation_step"]
    while logt != target:
        h = numpy.sign(target - logt) * min(step, abs(target - logt))
        E = exp_sum_terms(A, numpy.exp(-tau * logt), s)
        H = numpy.einsum("i,ia,ib->ab", E, A, A)
        try:
            slope = numpy.linalg.solve(H, A.T @ (tau * E))
        except numpy.linalg.LinAlgError:
            slope = numpy.zeros_like(s)
        predicted = s + h * slope
        corrected, ok = newton_exp_sum(
            A, numpy.exp(-tau * (logt + h)), predicted[None, :], max_iter=25
        )
        jump = numpy.abs(corrected[0] - predicted).max()
        if ok[0] and jump <= settings["continuation_max_jump"]:
            s, logt = corrected[0], logt + h
            if abs(target - logt) < 1e-14:
                logt = target
            step = min(step * 1.5, 1.0)
        else:
            step /= 2
            if step < settings["continuation_min_step"]:
                raise ValueError(
                    f"❌ Continuation lost the branch near T={numpy.exp(logt):.3e}"
                )
    return s


def _fit_valuation(eps, S) -> tuple[numpy.ndarray, float]:
    """
    Slope of log|y_k| against log eps, and the largest fit residual
    """
    x = numpy.log(numpy.asarray(eps))
    Y = numpy.asarray(S).real
    coeffs = numpy.polyfit(x, Y, 1)
    fitted = numpy.outer(x, coeffs[0]) + coeffs[1]
    return coeffs[0], float(numpy.abs(fitted - Y).max())


def critical_valuation(
    pot: LaurentPotential, point: CriticalPoint, eps=None
) -> tuple[numpy.ndarray, float]:
    """
    Estimated valuation v(y) of a critical point, with the fit residual

    Raises ValueError when continuation loses the branch
    """
    eps = sorted(eps or settings["valuation_eps"], reverse=True)
    s = numpy.log(point.y.astype(complex))
    logt = numpy.log(point.T)
    track = []
    for e in eps:
        s = _continue(pot, s, logt, numpy.log(e))
        logt = numpy.log(e)
        track.append(s)
    return _fit_valuation(eps, track)


def with_valuations(
    pot: LaurentPotential, points: list[CriticalPoint], eps=None
) -> list[CriticalPoint]:
    out = []
    for cp in points:
        u, residual = critical_valuation(pot, cp, eps)
        out.append(replace(cp, valuation=u, valuation_residual=residual))
    return out


def _minimize_real(pot: LaurentPotential, T: float) -> numpy.ndarray:
    A, c = pot.exponents, pot.coefficients(T)

    def fun(s):
        return float(numpy.sum(c * numpy.exp(A @ s)))

    def jac(s):
        return (c * numpy.exp(A @ s)) @ A

    def hess(s):
        E = c * numpy.exp(A @ s)
        return (A.T * E) @ A

    x0 = numpy.log(T) * _center(pot)
    result = minimize(fun, x0, jac=jac, hess=hess, method="trust-exact")
    if not result.success:
        logger.info("⚠️ trust-exact stopped early: %s", result.message)
    # Newton polish to the critical-point tolerance
    S, ok = newton_exp_sum(A, c, result.x[None, :].astype(complex))
    if not ok[0]:
        raise ValueError(
            f"❌ Minimization of the potential failed at T={T}: {result.message}"
        )
    return S[0].real


def positive_real_minimum(
    pot: LaurentPotential, T: float, eps=None
) -> CriticalPoint:
    """
    Global minimum of PO over the positive real orthant, a critical point
    with positive real coordinates, together with its valuation
    """
    T = _validate_T(T)
    s = _minimize_real(pot, T)
    point = _make_point(pot, numpy.exp(s).astype(complex), T)

    eps = sorted(eps or settings["valuation_eps"], reverse=True)
    track = [_minimize_real(pot, e) for e in eps]
    u, residual = _fit_valuation(eps, track)
    logger.info("✅ Positive real minimum at valuation %s", numpy.round(u, 6))
    return replace(point, valuation=u, valuation_residual=residual)


def count_vs_cohomology(
    flag: FlagType, pot: LaurentPotential, T: float, **kwargs
) -> tuple[int, int]:
    """
    (number of critical points, rank of H*(F))
    """
    count = len(critical_points(pot, T, **kwargs))
    return count, cohomology_rank(flag)


def newton_origin_interior(pot: LaurentPotential) -> bool:
    """
    True iff the origin is an interior point of conv{v_i}: the v_i span R^N
    and some strictly positive convex combination of them vanishes
    """
    A = pot.exponents
    m, N = A.shape
    if numpy.linalg.matrix_rank(A) < N:
        return False
    # Variables (weights_1..m, t): maximize t with weights >= t
    objective = numpy.zeros(m + 1)
    objective[-1] = -1.0
    A_eq = numpy.zeros((N + 1, m + 1))
    A_eq[:N, :m] = A.T
    A_eq[N, :m] = 1.0
    b_eq = numpy.zeros(N + 1)
    b_eq[N] = 1.0
    A_ub = numpy.hstack([-numpy.eye(m), numpy.ones((m, 1))])
    b_ub = numpy.zeros(m)
    result = linprog(
        objective,
        A_ub=A_ub,
        b_ub=b_ub,
        A_eq=A_eq,
        b_eq=b_eq,
        bounds=[(0, None)] * m + [(None, None)],
    )
    return bool(result.success and -result.fun > 1e-9)


def non_displaceable_fiber(pot: LaurentPotential, T: float) -> dict:
    """
    The fiber over the valuation u of the positive real minimum: u, whether
    it lies in the interior, a Hermitian matrix in the fiber and 2^N, the
    lower bound on the rank of its Floer cohomology
    """
    point = positive_real_minimum(pot, T)
    u = point.valuation
    interior = contains(pot.poly, u.tolist(), strict=True)
    report = {
        "valuation": u,
        "interior": interior,
        "critical_point": point,
        "floer_rank_lower_bound": 2**pot.N,
    }
    if interior:
        x = fiber_point(pot.poly, u)
        report["fiber_matrix_re"] = x.entries.real
        report["fiber_matrix_im"] = x.entries.imag
        report["gc_image"] = gc_map(x, pot.flag, pot.coords)
    return report
