"""
Test the verification suites and the suite runner
"""

import pytest

from gelfand_cetlin_cli.flagcombi import FlagType, anticanonical_lambda
from gelfand_cetlin_cli.verify import _validate_result_format, run_suites
from gelfand_cetlin_cli.verify.suites import (
    SUITES,
    SuiteOptions,
    all_flags,
    interlacing_case_set,
    weyl_case_set,
)

SMALL = SuiteOptions(seed=0, samples=10, gc_samples=40, round_trips=10, max_n=3)


def test_all_flags():
    """
    Test every flag type up to n = 3
    """
    assert [f.to_string() for f in all_flags(3)] == [
        "1|2",
        "1|3",
        "2|3",
        "1,2|3",
    ]
    assert len(all_flags(4)) == 4 + 7


def test_weyl_case_set():
    """
    Test the default case set has at least 20 cases, n = 5 Grassmannians
    and partial flags with weights that are not anti-canonical
    """
    cases = weyl_case_set(3)
    assert (FlagType.full(2), (3, 2)) in cases
    assert (FlagType.full(3), (3, 2, 1)) in cases
    assert not any(flag == FlagType.full(4) for flag, _ in cases)

    cases = weyl_case_set(SuiteOptions().max_n)
    assert len(cases) >= 20
    assert (FlagType.grassmannian(2, 5), (1, 1, 0, 0, 0)) in cases
    assert (FlagType.grassmannian(3, 5), (1, 1, 1, 0, 0)) in cases
    partial = [
        (flag, lam)
        for flag, lam in cases
        if not flag.is_full and lam != tuple(anticanonical_lambda(flag))
    ]
    assert len(partial) >= 5


def test_interlacing_defaults():
    """
    Test the default interlacing budget and its weights, generic and with
    repeated blocks
    """
    options = SuiteOptions()
    assert options.gc_samples == 1000
    assert options.round_trips == 200

    cases = interlacing_case_set(3)
    assert (FlagType.full(3), (2, 0, -2)) in cases
    assert (FlagType.full(3), (4, 1, 0)) in cases
    assert any(len(set(lam)) < len(lam) for _, lam in cases)
    gr24 = {lam for flag, lam in cases if flag == FlagType.grassmannian(2, 4)}
    assert len(gr24) == 2
    full = {flag.n for flag, _ in cases if flag == FlagType.full(flag.n)}
    assert full == {3, 4, 5}


def test_interlacing_sample_counts():
    """
    Test containment and round trip cases use their own sample counts
    """
    options = SuiteOptions(
        samples=1, gc_samples=7, round_trips=3, flag=FlagType.full(3)
    )
    result = SUITES["interlacing"](options)
    assert result["passed"]
    assert [d["samples"] for d in result["details"]] == [7, 3]


@pytest.mark.parametrize("name", list(SUITES))
def test_suites_pass(name):
    """
    Test every suite passes on small cases
    """
    result = SUITES[name](SMALL)
    _validate_result_format(result)
    assert result["suite"] == name
    assert result["cases"] == len(result["details"]) > 0
    failed = [d for d in result["details"] if not d["passed"]]
    assert result["passed"], failed


def test_suite_single_flag():
    """
    Test --flag style options restrict a suite to one flag
    """
    options = SuiteOptions(samples=5, max_n=3, flag=FlagType.grassmannian(1, 3))
    result = SUITES["flagcombi"](options)
    assert [d["case"] for d in result["details"]] == [str(options.flag)]


@pytest.mark.parametrize(
    "result,is_valid",
    [
        (
            {
                "suite": "x",
                "passed": True,
                "cases": 0,
                "max_residual": 0.0,
                "details": [],
            },
            True,
        ),
        ({"suite": "x", "passed": True}, False),
        ({}, False),
    ],
)
def test_validate_result_format(result, is_valid):
    """
    Test validation of suite results
    """
    if is_valid:
        _validate_result_format(result)
    else:
        with pytest.raises(ValueError) as e:
            _validate_result_format(result)
        assert "Invalid verification suite" in str(e.value)


def test_run_suites():
    """
    Test suites run in a fixed order and the report summarizes them
    """
    report = run_suites(["weyl", "flagcombi"], SMALL)
    assert report["passed"]
    assert [r["suite"] for r in report["suites"]] == ["flagcombi", "weyl"]
    assert len(report["elapsed"].split(":")) == 3


def test_run_suites_unknown():
    with pytest.raises(ValueError) as e:
        run_suites(["flagcombi", "mirror"])
    assert "Unknown suites ['mirror']" in str(e.value)


def test_run_suites_failure(mocker):
    """
    Test a failing suite fails the whole report
    """
    failing = {
        "suite": "flagcombi",
        "passed": False,
        "cases": 1,
        "max_residual": 1.0,
        "details": [{"case": "F(1|2)", "residual": 1.0, "passed": False}],
    }
    mocker.patch.dict(
        "gelfand_cetlin_cli.verify.SUITES",
        {"flagcombi": lambda options: failing},
    )
    report = run_suites(["flagcombi", "weyl"], SMALL)
    assert not report["passed"]
    assert [r["passed"] for r in report["suites"]] == [False, True]


def test_run_suites_bad_result(mocker):
    mocker.patch.dict(
        "gelfand_cetlin_cli.verify.SUITES", {"weyl": lambda options: {"ok": True}}
    )
    with pytest.raises(ValueError):
        run_suites(["weyl"], SMALL)
