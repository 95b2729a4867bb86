"""
The potential function of a GC polytope as a Laurent polynomial

Every facet l_i(u) = <v_i, u> - tau_i contributes one term

    e^<v_i, x> T^l_i(u) = T^(-tau_i) y^v_i,    y_k = e^x_k T^u_k

which is a Laurent monomial in y with a Novikov coefficient Q_j^(+-1),
Q_j = T^lambda_j. Numerically the potential is handled in logarithmic
coordinates s = log y, where it is a sum of exponentials of linear forms.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy

from gelfand_cetlin_cli.flagcombi import Box, FlagType
from gelfand_cetlin_cli.gcpoly import Facet, GCPolytope

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class NovikovScalar:
    """
    Formal c T^e with valuation e (infinite for c = 0)
    """

    coefficient: complex
    exponent: Fraction

    @property
    def valuation(self):
        if self.coefficient == 0:
            return float("inf")
        return self.exponent

    def evaluate(self, T: float) -> complex:
        return complex(self.coefficient) * float(T) ** float(self.exponent)

    def __mul__(self, other: "NovikovScalar") -> "NovikovScalar":
        return NovikovScalar(
            self.coefficient * other.coefficient, self.exponent + other.exponent
        )


@dataclass(frozen=True)
class LaurentTerm:
    """
    T^(-tau) y^v, remembering which Q_j (if any) the coefficient is
    """

    v: tuple[int, ...]
    tau: Fraction
    q_index: Optional[int] = None
    q_power: int = 0

    @classmethod
    def from_facet(cls, facet: Facet) -> "LaurentTerm":
        return cls(
            v=facet.v, tau=facet.tau, q_index=facet.q_index, q_power=facet.q_power
        )

    @property
    def coefficient(self) -> NovikovScalar:
        return NovikovScalar(1, -self.tau)

    def to_dict(self) -> dict:
        return {"v": list(self.v), "tau": self.tau}


@dataclass(frozen=True, eq=False)
class LaurentPotential:
    """
    One term per facet of the source polytope, in facet order
    """

    terms: tuple[LaurentTerm, ...]
    poly: GCPolytope

    @property
    def N(self) -> int:
        return self.poly.N

    @property
    def flag(self) -> FlagType:
        return self.poly.flag

    @property
    def lambda_(self) -> tuple[Fraction, ...]:
        return self.poly.lambda_

    @property
    def coords(self) -> tuple[Box, ...]:
        return self.poly.coords

    @property
    def exponents(self) -> numpy.ndarray:
        """
        m x N matrix V whose rows are the exponent vectors v_i
        """
        return numpy.array([t.v for t in self.terms], dtype=float).reshape(
            len(self.terms), self.N
        )

    @property
    def offsets(self) -> numpy.ndarray:
        return numpy.array([float(t.tau) for t in self.terms])

    def coefficients(self, T: float) -> numpy.ndarray:
        """
        c_i = T^(-tau_i)
        """
        return numpy.exp(-self.offsets * numpy.log(float(T)))

    def to_dict(self) -> dict:
        return {
            "flag": self.flag.to_string(),
            "lambda": list(self.lambda_),
            "coords": [list(c) for c in self.coords],
            "terms": [t.to_dict() for t in self.terms],
            "laurent": render_potential(self),
        }


def build_potential(poly: GCPolytope) -> LaurentPotential:
    """
    The potential of the GC torus fibers of poly, one term per facet
    """
    terms = tuple(LaurentTerm.from_facet(f) for f in poly.facets)
    logger.info("✅ Potential of %s has %s terms", poly.flag, len(terms))
    return LaurentPotential(terms=terms, poly=poly)


def _render_term(term: LaurentTerm) -> str:
    numerator, denominator = [], []
    if term.q_power > 0:
        numerator.append(f"Q{term.q_index}")
    elif term.q_power < 0:
        denominator.append(f"Q{term.q_index}")
    for a, c in enumerate(term.v, start=1):
        factor = f"y{a}" if abs(c) == 1 else f"y{a}^{abs(c)}"
        if c > 0:
            numerator.append(factor)
        elif c < 0:
            denominator.append(factor)
    text = "*".join(numerator) or "1"
    if denominator:
        text += "/" + "*".join(denominator)
    return text


def render_potential(pot: LaurentPotential) -> str:
    """
    Laurent form in y1..yN and Q_j, e.g. "Q1/y1 + y1/Q2 + ..."
    """
    return " + ".join(_render_term(t) for t in pot.terms)


def _log_coordinates(y) -> numpy.ndarray:
    y = numpy.asarray(y, dtype=complex)
    if numpy.any(y == 0):
        raise ValueError("❌ Coordinates y_k must be nonzero")
    return numpy.log(y)


def term_values(pot: LaurentPotential, y, T: float) -> numpy.ndarray:
    """
    E_i = c_i y^v_i for a point y (shape N) or a stack of points (M x N)
    """
    s = _log_coordinates(y)
    return pot.coefficients(T) * numpy.exp(s @ pot.exponents.T)


def evaluate(pot: LaurentPotential, y, T: float):
    return term_values(pot, y, T).sum(axis=-1)


def log_gradient(pot: LaurentPotential, y, T: float) -> numpy.ndarray:
    """
    y_k dPO/dy_k = sum_i v_ik E_i
    """
    return term_values(pot, y, T) @ pot.exponents


def log_hessian(pot: LaurentPotential, y, T: float) -> numpy.ndarray:
    """
    d^2 PO / d log y_a d log y_b = sum_i v_ia v_ib E_i
    """
    E = term_values(pot, y, T)
    V = pot.exponents
    return numpy.einsum("...i,ia,ib->...ab", E, V, V)


def relative_gradient(pot: LaurentPotential, y, T: float) -> float:
    """
    |y dPO/dy|_inf scaled by the size of the terms, sum_i |E_i|
    """
    E = term_values(pot, y, T)
    return float(numpy.abs(E @ pot.exponents).max() / numpy.abs(E).sum())

