"""
Closed-form critical points of the worked examples

    F(1,2,3):  y3^3 = Q1 Q2 Q3,  y2^2 = Q3 (y3 + Q2),  y1 = y3^2/y2
    Gr(2,4):   y1^2 = Q1 Q3,  y3^2 = 2 Q3 y1,  y2 = Q1 Q3/y3,  y4 = y1
    P^1:       y^2 = Q1 Q2

The y_k are numbered in the top-down coordinate order; solutions are
returned in the potential's own coordinate order. Every solution carries a
branch label naming its root of unity and square-root signs.
"""

import cmath
import logging
import math
from typing import Optional

import numpy

from gelfand_cetlin_cli.flagcombi import FlagType
from gelfand_cetlin_cli.potential.laurent import LaurentPotential

logger = logging.getLogger(__name__)

LABEL_TOL = 1e-6

FLAG_3 = FlagType.full(3)
GR_2_4 = FlagType.grassmannian(2, 4)
FLAG_2 = FlagType.full(2)

EXAMPLE_BOXES = {
    FLAG_3: [(2, 1), (2, 2), (1, 1)],
    GR_2_4: [(3, 2), (2, 1), (2, 2), (1, 1)],
    FLAG_2: [(1, 1)],
}


def _Q(pot: LaurentPotential, T: float, j: int) -> float:
    return float(T) ** float(pot.lambda_[j - 1])


def _sign(s: int) -> str:
    return "+" if s > 0 else "-"


def _flag_3(pot, T):
    Q1, Q2, Q3 = (_Q(pot, T, j) for j in (1, 2, 3))
    root = (Q1 * Q2 * Q3) ** (1 / 3)
    for j in range(3):
        y3 = root * cmath.exp(2j * math.pi * j / 3)
        for s in (1, -1):
            y2 = s * cmath.sqrt(Q3 * (y3 + Q2))
            y1 = y3**2 / y2
            label = f"y3=w^{j}*cbrt(Q1Q2Q3), y2={_sign(s)}sqrt(Q3(y3+Q2))"
            yield label, [y1, y2, y3]


def _gr_2_4(pot, T):
    Q1, Q3 = _Q(pot, T, 1), _Q(pot, T, 3)
    for s1 in (1, -1):
        y1 = s1 * math.sqrt(Q1 * Q3) + 0j
        for s3 in (1, -1):
            y3 = s3 * cmath.sqrt(2 * Q3 * y1)
            label = f"y1={_sign(s1)}sqrt(Q1Q3), y3={_sign(s3)}sqrt(2Q3y1)"
            yield label, [y1, Q1 * Q3 / y3, y3, y1]


def _flag_2(pot, T):
    Q1, Q2 = _Q(pot, T, 1), _Q(pot, T, 2)
    for s in (1, -1):
        yield f"y1={_sign(s)}sqrt(Q1Q2)", [s * math.sqrt(Q1 * Q2) + 0j]


_SOLVERS = {FLAG_3: _flag_3, GR_2_4: _gr_2_4, FLAG_2: _flag_2}


def closed_form_critical_points(
    pot: LaurentPotential, T: float
) -> Optional[list[tuple[str, numpy.ndarray]]]:
    """
    Labelled closed-form solutions in pot's coordinate order, or None when
    pot is not one of the worked examples
    """
    solver = _SOLVERS.get(pot.flag)
    if solver is None:
        return None
    boxes = EXAMPLE_BOXES[pot.flag]
    position = [boxes.index(box) for box in pot.coords]
    return [
        (label, numpy.array([y[p] for p in position], dtype=complex))
        for label, y in solver(pot, T)
    ]


def label_branch(pot: LaurentPotential, y, T: float) -> Optional[str]:
    """
    Label of the closed-form solution matching y to relative 1e-6
    """
    solutions = closed_form_critical_points(pot, T)
    if not solutions:
        return None
    y = numpy.asarray(y, dtype=complex)
    for label, target in solutions:
        if numpy.all(numpy.abs(y - target) <= LABEL_TOL * numpy.abs(target)):
            return label
    logger.info("⚠️ Critical point %s matches no closed-form branch", y)
    return None


def valuation_discrepancies(pot: LaurentPotential, valuation) -> list[dict]:
    """
    Compare the estimated valuation of the Gr(2,4) critical points with two
    competing formulas for u3

    From y3^2 = 2 Q3 y1 and y1^2 = Q1 Q3 the valuations are
    u1 = (lambda1 + lambda3)/2 and u3 = (lambda3 + u1)/2 = (lambda1 + 3 lambda3)/4.
    The form u3 = (u1 + 3 lambda3)/4 found in the literature disagrees with
    this whenever u1 != lambda1. The entry records both values next to the
    estimate so the report shows which one the numerics support.
    """
    if pot.flag != GR_2_4:
        return []
    lam1, lam3 = (float(pot.lambda_[j]) for j in (0, 2))
    u1 = (lam1 + lam3) / 2
    derived = (lam1 + 3 * lam3) / 4
    literature = (u1 + 3 * lam3) / 4
    estimated = float(valuation[list(pot.coords).index(EXAMPLE_BOXES[GR_2_4][2])])
    closer = abs(estimated - derived) <= abs(estimated - literature)
    supported = "derived" if closer else "literature"
    if not closer:
        logger.info("⚠️ Estimated u3 = %s favours the literature formula", estimated)
    return [
        {
            "coordinate": "u3",
            "box": list(EXAMPLE_BOXES[GR_2_4][2]),
            "estimated": estimated,
            "derived_formula": "(lambda1 + 3 lambda3)/4",
            "derived": derived,
            "literature_formula": "(u1 + 3 lambda3)/4",
            "literature": literature,
            "supported": supported,
        }
    ]
