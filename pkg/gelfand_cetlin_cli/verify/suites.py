"""
Property suites

Every suite takes a SuiteOptions and returns a dict

    {"suite": name, "passed": bool, "cases": int, "max_residual": float,
     "details": [...]}

Exact suites report a residual of 0 or 1 per case (1 = mismatch).
"""

import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Optional

import numpy

from gelfand_cetlin_cli.config import config
from gelfand_cetlin_cli.flagcombi import (
    FlagType,
    anticanonical_lambda,
    cohomology_rank,
    coordinate_order,
    dimension,
    index_set_from_steps,
    path_steps,
    positive_paths,
)
from gelfand_cetlin_cli import degeneration, gcpoly, gcsystem, potential, toda

logger = logging.getLogger(__name__)

T_E = math.exp(-1)
TOL = {
    "containment": config["gcsystem"]["spectrum_tol"],
    "round_trip": config["gcsystem"]["round_trip_tol"],
    "family": config["degeneration"]["family_tol"],
    "identity": config["toda"]["identity_tol"],
    "critical": config["potential"]["critical_tol"],
}


@dataclass(frozen=True)
class SuiteOptions:
    seed: int = config["verify"]["seed"]
    samples: int = config["verify"]["samples"]
    gc_samples: int = config["verify"]["gc_samples"]
    round_trips: int = config["verify"]["round_trips"]
    max_n: int = config["verify"]["max_n"]
    flag: Optional[FlagType] = None
    extra: dict = field(default_factory=dict)


def all_flags(max_n: int) -> list[FlagType]:
    """
    Every flag type F(n_1, ..., n_r, n) with 2 <= n <= max_n
    """
    return [
        FlagType(n, steps)
        for n in range(2, max_n + 1)
        for r in range(1, n)
        for steps in combinations(range(1, n), r)
    ]


def _flags(options: SuiteOptions, default: list[FlagType]) -> list[FlagType]:
    return [options.flag] if options.flag else default


def _result(name: str, details: list[dict], tol: float = 0.0) -> dict:
    residuals = [float(d["residual"]) for d in details]
    worst = max(residuals, default=0.0)
    passed = all(d.get("passed", r <= tol) for d, r in zip(details, residuals))
    return {
        "suite": name,
        "passed": passed,
        "cases": len(details),
        "max_residual": worst,
        "details": details,
    }


def _exact(label: str, ok: bool, **extra) -> dict:
    return {"case": label, "residual": 0.0 if ok else 1.0, "passed": ok, **extra}


def weyl_case_set(max_n: int) -> list[tuple[FlagType, tuple[int, ...]]]:
    """
    Full flags with lambda entries in {0, ..., 3}, plus partial flags and
    Grassmannians up to n = 5 with weights constant on blocks
    """
    cases = []
    for n in range(2, max_n + 1):
        for values in combinations(range(3, -1, -1), n):
            cases.append((FlagType.full(n), values))
    cases += [
        (FlagType.grassmannian(1, 3), (2, -1, -1)),
        (FlagType.grassmannian(2, 3), (2, 2, 0)),
        (FlagType.grassmannian(2, 4), (1, 1, 0, 0)),
        (FlagType.grassmannian(2, 4), (2, 2, 0, 0)),
        (FlagType.grassmannian(2, 4), (3, 3, 0, 0)),
        (FlagType.grassmannian(1, 4), (2, 0, 0, 0)),
        (FlagType(4, (1, 2)), (3, 1, 0, 0)),
        (FlagType(4, (1, 3)), (2, 1, 1, 0)),
        (FlagType(4, (2, 3)), (3, 3, 1, 0)),
        (FlagType.grassmannian(2, 5), (1, 1, 0, 0, 0)),
        (FlagType.grassmannian(3, 5), (1, 1, 1, 0, 0)),
    ]
    return cases


def suite_flagcombi(options: SuiteOptions) -> dict:
    details = []
    for flag in _flags(options, all_flags(options.max_n)):
        N = dimension(flag)
        ok = N == len(coordinate_order(flag))
        ok &= cohomology_rank(flag) == math.factorial(flag.n) // math.prod(
            math.factorial(k) for k in flag.block_sizes
        )
        for k in range(1, flag.r + 1):
            for I in positive_paths(flag, k):
                ok &= index_set_from_steps(path_steps(I, flag.n)) == I
        details.append(_exact(str(flag), ok, dimension=N))
    return _result("flagcombi", details)


def interlacing_case_set(max_n: int) -> list[tuple[FlagType, tuple]]:
    """
    Generic weights on full flags and weights with repeated blocks on
    partial flags. Full flags up to n = 5 are always present.
    """
    cases = []
    for n in range(3, max(max_n, 5) + 1):
        flag = FlagType.full(n)
        cases.append((flag, tuple(anticanonical_lambda(flag))))
        cases.append((flag, tuple((n - i) ** 2 for i in range(1, n + 1))))
    cases += [
        (FlagType.grassmannian(1, 3), (2, -1, -1)),
        (FlagType.grassmannian(2, 4), (2, 2, -2, -2)),
        (FlagType.grassmannian(2, 4), (3, 3, 0, 0)),
        (FlagType(4, (1, 3)), (2, 1, 1, 0)),
    ]
    return cases


def suite_interlacing(options: SuiteOptions) -> dict:
    cases = interlacing_case_set(options.max_n)
    if options.flag:
        cases = [(options.flag, tuple(anticanonical_lambda(options.flag)))]
    details = []
    for flag, lam in cases:
        lam = [Fraction(x) for x in lam]
        poly = gcpoly.build_polytope(flag, lam)
        label = f"{flag} {tuple(str(x) for x in lam)}"
        worst = 0.0
        for row in range(options.gc_samples):
            x = gcsystem.random_orbit_point(lam, options.seed + row)
            image = gcsystem.gc_map(x, flag, poly.coords)
            worst = max(worst, float(max(0.0, -poly.ell_float(image).min())))
        details.append(
            {
                "case": f"{label} containment",
                "samples": options.gc_samples,
                "residual": worst,
                "passed": worst <= TOL["containment"],
            }
        )

        points = gcsystem.sample_interior_points(
            poly, options.round_trips, seed=options.seed
        )
        worst = 0.0
        for u in points:
            x = gcsystem.fiber_point(poly, u)
            image = gcsystem.gc_map(x, flag, poly.coords)
            worst = max(worst, float(numpy.abs(image - u).max()))
        details.append(
            {
                "case": f"{label} round trip",
                "samples": options.round_trips,
                "residual": worst,
                "passed": worst <= TOL["round_trip"],
            }
        )
    return _result("interlacing", details)


def suite_weyl(options: SuiteOptions) -> dict:
    details = []
    cases = weyl_case_set(options.max_n)
    if options.flag:
        cases = [(options.flag, tuple(anticanonical_lambda(options.flag)))]
    for flag, lam in cases:
        poly = gcpoly.build_polytope(flag, lam)
        count = gcpoly.count_lattice_points(poly)
        expected = gcpoly.weyl_dimension(flag, lam)
        details.append(
            _exact(f"{flag} {lam}", count == expected, count=count, weyl=expected)
        )
    return _result("weyl", details)


def suite_volume(options: SuiteOptions) -> dict:
    details = []
    cases = weyl_case_set(options.max_n)
    if options.flag:
        cases = [(options.flag, tuple(anticanonical_lambda(options.flag)))]
    for flag, lam in cases:
        poly = gcpoly.build_polytope(flag, lam)
        expected = gcpoly.volume_formula(flag, lam)
        ok = gcpoly.volume(poly, "integral") == expected
        if poly.N <= config["polytope"]["triangulation_max_dim"]:
            ok &= gcpoly.volume(poly, "triangulation") == expected
        details.append(_exact(f"{flag} {lam}", ok, volume=expected))
    return _result("volume", details)


def suite_reflexive(options: SuiteOptions) -> dict:
    flags = [FlagType.full(n) for n in range(2, options.max_n + 1)]
    flags.append(FlagType.grassmannian(2, 4))
    details = []
    for flag in _flags(options, flags):
        poly = gcpoly.build_polytope(flag, anticanonical_lambda(flag))
        reflexive, point = gcpoly.is_reflexive(poly)
        ok = reflexive and point == gcpoly.anticanonical_point(flag, poly.coords)
        dual = None
        expected = gcpoly.dual_volume_formula(flag)
        if ok and poly.N <= config["polytope"]["triangulation_max_dim"]:
            dual = gcpoly.dual_volume(poly)
            ok &= expected is None or dual == expected
        details.append(_exact(str(flag), ok, dual_volume=dual, expected=expected))
    return _result("reflexive", details)


def suite_determinant(options: SuiteOptions) -> dict:
    details = []
    for flag in _flags(options, all_flags(options.max_n)):
        poly = gcpoly.build_polytope(flag, anticanonical_lambda(flag))
        ok = gcpoly.is_loop_free_everywhere(poly)
        details.append(_exact(str(flag), ok))
    return _result("determinant", details)


FAMILY_RELATIONS = [
    (FlagType.full(3), "Z[1]Z[2,3] -Z[2]Z[1,3] +t Z[3]Z[1,2]", None),
    (FlagType.grassmannian(2, 4), "t Z[1,2]Z[3,4] -Z[1,3]Z[2,4] +Z[1,4]Z[2,3]", None),
    (FlagType.grassmannian(2, 4), "Z[1,2]Z[3,4] -Z[1,3]Z[2,4] +Z[1,4]Z[2,3]", 1.0),
]


def suite_degeneration(options: SuiteOptions) -> dict:
    details = []
    rng = numpy.random.default_rng(options.seed)
    worst_one, worst_zero, worst_multi = 0.0, 0.0, 0.0
    for n in range(2, options.max_n + 1):
        for _ in range(options.samples):
            z = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
            t = complex(rng.normal(), rng.normal())
            for k in range(1, n + 1):
                I = tuple(sorted(rng.choice(numpy.arange(1, n + 1), k, replace=False)))
                det = numpy.linalg.det(z[[i - 1 for i in I], :k])
                q1 = degeneration.deformed_plucker(z, I, 1)
                worst_one = max(worst_one, abs(q1 - det) / max(abs(det), 1.0))
                d = degeneration.diagonal_monomial(z, I)
                q0 = degeneration.deformed_plucker(z, I, 0)
                worst_zero = max(worst_zero, abs(q0 - d) / abs(d))
                qt = degeneration.deformed_plucker(z, I, t)
                multi = degeneration.multi_deformed_plucker(z, I, [t] * (n - 1))
                worst_multi = max(worst_multi, abs(multi - qt) / max(abs(qt), 1.0))
    for label, worst in (
        ("q_I(z, 1) = det z_I", worst_one),
        ("q_I(z, 0) = d_I(z)", worst_zero),
        ("multi-parameter collapse", worst_multi),
    ):
        details.append(
            {"case": label, "residual": worst, "passed": worst <= 1e-9}
        )

    for flag, relation, t in FAMILY_RELATIONS:
        if options.flag and flag != options.flag:
            continue
        report = degeneration.verify_family_equation(
            flag, relation, samples=options.samples, seed=options.seed, t=t
        )
        details.append(
            {
                "case": f"{flag} {relation}" + ("" if t is None else f" at t={t}"),
                "residual": report["max_residual"],
                "passed": report["passed"],
            }
        )

    for flag in _flags(options, all_flags(options.max_n)):
        ok = degeneration.binomial_relations_hold(flag)
        details.append(_exact(f"{flag} binomial relations", ok))
    return _result("degeneration", details)


MOMENT_CASES = [
    (FlagType.full(3), (2.0, 0.0, -2.0)),
    (FlagType.grassmannian(2, 4), (1.0, 1.0, -1.0, -1.0)),
    (FlagType.full(4), (3.0, 1.0, -1.0, -3.0)),
]


def suite_moment(options: SuiteOptions) -> dict:
    details = []
    for flag, lam in MOMENT_CASES:
        if options.flag and flag != options.flag:
            continue
        for m in range(1, flag.n + 1):
            worst = 0.0
            for row in range(options.samples):
                Z = degeneration.random_stage_point(flag, m, options.seed + row)
                worst = max(worst, degeneration.moment_spectrum_residual(Z, m, lam))
            details.append(
                {
                    "case": f"{flag} spectrum of mu^({m}) on X_({m + 1},0)",
                    "residual": worst,
                    "passed": worst <= TOL["containment"],
                }
            )

        # X_0 = X_(3,0): the t_2 stage of the family is trivial
        worst = 0.0
        for row in range(options.samples):
            tau = degeneration.random_torus_point(flag, options.seed + row)
            Z = degeneration.monomial_embedding(tau)
            for m in (1, 2):
                worst = max(worst, degeneration.moment_spectrum_residual(Z, m, lam))
        details.append(
            {
                "case": f"{flag} toric spectrum, m in [1, 2]",
                "residual": worst,
                "passed": worst <= TOL["containment"],
            }
        )

        rng = numpy.random.default_rng(options.seed)
        worst = 0.0
        for _ in range(options.samples):
            z = rng.normal(size=(flag.n, flag.n)) + 1j * rng.normal(
                size=(flag.n, flag.n)
            )
            Z = degeneration.plucker_point_from_matrix(z, flag)
            trace = numpy.trace(degeneration.moment_mu(Z, flag.n, lam)).real
            worst = max(worst, abs(trace - sum(lam)))
        details.append(
            {
                "case": f"{flag} trace of mu^(n)",
                "residual": worst,
                "passed": worst <= TOL["containment"],
            }
        )
    return _result("moment", details)


POTENTIAL_CASES = [
    (FlagType.full(3), (2, 0, -2), 6),
    (FlagType.grassmannian(2, 4), (1, 1, -1, -1), 4),
    (FlagType.full(2), (1, 0), 2),
]


def suite_potential(options: SuiteOptions) -> dict:
    details = []
    for flag, lam, expected in POTENTIAL_CASES:
        if options.flag and flag != options.flag:
            continue
        poly = gcpoly.build_polytope(flag, lam, "top-down")
        pot = potential.build_potential(poly)
        points = potential.critical_points(pot, T_E, seed=options.seed)
        ok = len(points) == expected
        ok &= all(cp.nondegenerate and cp.label for cp in points)
        details.append(
            _exact(
                f"{flag} critical points",
                ok,
                count=len(points),
                rank=cohomology_rank(flag),
            )
        )

        minimum = potential.positive_real_minimum(pot, T_E)
        interior = gcpoly.contains(poly, minimum.valuation.tolist(), strict=True)
        details.append(
            {
                "case": f"{flag} positive real minimum",
                "residual": minimum.gradient_residual,
                "passed": interior and minimum.gradient_residual <= TOL["critical"],
                "valuation": minimum.valuation,
            }
        )
    return _result("potential", details)


def _brute_force_hamiltonians(p, q) -> list:
    """
    Coefficients of det(A + xI) from the three-term recurrence
    f_k = (x + p_{k-1}) f_{k-1} + q_{k-1} f_{k-2}
    """
    previous, current = [Fraction(1)], [Fraction(1), p[0]]
    for k in range(1, len(p)):
        shifted = current + [Fraction(0)]
        scaled = [Fraction(0)] + [c * p[k] for c in current]
        coupled = [Fraction(0), Fraction(0)] + [c * q[k - 1] for c in previous]
        previous, current = current, [
            a + b + c for a, b, c in zip(shifted, scaled, coupled)
        ]
    return current[1:]


def suite_toda(options: SuiteOptions) -> dict:
    details = []
    rng = numpy.random.default_rng(options.seed)

    ok = True
    for n in range(2, 6):
        for _ in range(10):
            p = [Fraction(int(v), 3) for v in rng.integers(-6, 7, size=n)]
            q = [Fraction(int(v), 2) for v in rng.integers(-4, 5, size=n - 1)]
            state = toda.TodaState(p=p, q=q)
            ok &= toda.toda_hamiltonians(state) == _brute_force_hamiltonians(p, q)
    details.append(_exact("det(A + xI) coefficients", ok))

    for n in range(2, options.max_n + 1):
        values = rng.choice(numpy.arange(-20, 21), size=n, replace=False)
        lam = [Fraction(int(v), 5) for v in sorted(values, reverse=True)]
        poly = gcpoly.build_polytope(FlagType.full(n), lam)
        pot = potential.build_potential(poly)
        points = gcsystem.sample_interior_points(
            poly, options.samples, seed=options.seed
        )
        worst = 0.0
        for u in points:
            x = rng.normal(size=poly.N) + 1j * rng.normal(size=poly.N)
            y = numpy.exp(x) * T_E**u
            lhs = potential.evaluate(pot, y, T_E)
            rhs = toda.phase_function(toda.gc_to_toda(pot, x, u))
            scale = numpy.abs(potential.term_values(pot, y, T_E)).sum()
            worst = max(worst, abs(lhs - rhs) / scale)
        details.append(
            {
                "case": f"n={n} phase function identity",
                "residual": worst,
                "passed": worst <= TOL["identity"],
            }
        )

    count = len(toda.phase_critical_points((2, 0, -2), seed=options.seed))
    details.append(_exact("n=3 phase function critical points", count == 6, count=count))

    poly = gcpoly.build_polytope(FlagType.full(3), (2, 0, -2), "top-down")
    report = toda.level_set_check(potential.build_potential(poly), seed=options.seed)
    details.append(
        {
            "case": "n=3 Toda level set (diagnostic)",
            "residual": report["best"]["max_residual"],
            "passed": True,
            "best": report["best"],
        }
    )
    return _result("toda", details)


SUITES = {
    "flagcombi": suite_flagcombi,
    "interlacing": suite_interlacing,
    "weyl": suite_weyl,
    "volume": suite_volume,
    "reflexive": suite_reflexive,
    "determinant": suite_determinant,
    "degeneration": suite_degeneration,
    "moment": suite_moment,
    "potential": suite_potential,
    "toda": suite_toda,
}
