"""
Test `gc critical` and `gc toda` commands
"""

import json

import pytest
from click.testing import CliRunner

from gelfand_cetlin_cli.cli.critical_commands import critical
from gelfand_cetlin_cli.cli.toda_commands import toda


def test_critical_p1():
    """
    Test the two critical points of Q1/y + y/Q2 over u = 1/2
    """
    runner = CliRunner(mix_stderr=False)
    result = runner.invoke(
        critical, ["--flag", "1|2", "--lambda", "1,0"], standalone_mode=False
    )
    assert result.exit_code == 0
    report = result.return_value
    assert report["count"] == report["nondegenerate"] == 2
    assert report["cohomology_rank"] == 2
    assert report["count_vs_rank"] == "equal"
    assert report["newton_origin_interior"]
    for cp in report["critical_points"]:
        assert cp.valuation == pytest.approx([0.5], abs=1e-6)

    minimum = report["positive_real_minimum"]
    assert minimum["interior"]
    assert minimum["floer_rank_lower_bound"] == 2
    assert minimum["valuation"] == pytest.approx([0.5], abs=1e-6)

    printed = json.loads(result.stdout)
    assert printed["potential"] == "Q1/y1 + y1/Q2"
    assert printed["critical_points"][0]["branch"].startswith("y1=")


def test_critical_gr24():
    """
    Test Gr(2,4) has fewer critical points than rank H*(Gr(2,4)) = 6
    """
    runner = CliRunner()
    result = runner.invoke(
        critical,
        [
            "--flag",
            "2|4",
            "--lambda",
            "1,1,-1,-1",
            "--T",
            "0.3",
            "--no-valuations",
            "--seed",
            "5",
        ],
        standalone_mode=False,
    )
    assert result.exit_code == 0
    report = result.return_value
    assert report["T"] == 0.3
    assert report["count"] == 4
    assert report["count_vs_rank"] == "less"
    assert all(cp.valuation is None for cp in report["critical_points"])
    assert report["positive_real_minimum"]["valuation"] == pytest.approx(
        [0, 0.5, -0.5, 0], abs=1e-6
    )


def test_critical_out(tmp_path):
    out = str(tmp_path / "critical.json")
    runner = CliRunner()
    result = runner.invoke(
        critical,
        ["--flag", "1|2", "--lambda", "1,0", "--no-valuations", "--out", out],
        standalone_mode=False,
    )
    assert result.exit_code == 0
    with open(out) as f:
        assert json.load(f)["count"] == 2


@pytest.mark.parametrize(
    "args,msg",
    [
        (["--T", "2"], "must lie in (0, 1)"),
        (["--T", "abc"], "Not a number or e-1"),
        (["--max-starts", "0"], "not in the range"),
    ],
)
def test_critical_bad_input(args, msg):
    runner = CliRunner()
    result = runner.invoke(
        critical,
        ["--flag", "1|2", "--lambda", "1,0"] + args,
        standalone_mode=False,
    )
    assert result.exit_code == 1
    assert msg in str(result.exc_info)


def test_critical_solver_failure(mocker):
    """
    Test solver errors surface as a CLI error
    """
    mocker.patch(
        "gelfand_cetlin_cli.cli.critical_commands.non_displaceable_fiber",
        side_effect=ValueError("❌ Minimization of the potential failed"),
    )
    runner = CliRunner()
    result = runner.invoke(
        critical,
        ["--flag", "1|2", "--lambda", "1,0", "--no-valuations"],
        standalone_mode=False,
    )
    assert result.exit_code == 1
    assert "Minimization of the potential failed" in str(result.exc_info)


def test_toda():
    """
    Test `gc toda` for n = 3
    """
    runner = CliRunner()
    result = runner.invoke(toda, ["--lambda", "2,0,-2"], standalone_mode=False)
    assert result.exit_code == 0
    report = result.return_value
    assert report["n"] == 3
    assert report["phase_critical_points"] == 6
    assert report["phase_constraint_residual"] < 1e-9
    assert report["level_set"]["critical_points"] == 6
    assert len(report["level_set"]["conventions"]) == 4


@pytest.mark.parametrize(
    "lam,msg",
    [("1", "at least two weights"), ("1,1,0", "strictly decrease")],
)
def test_toda_bad_input(lam, msg):
    runner = CliRunner()
    result = runner.invoke(toda, ["--lambda", lam], standalone_mode=False)
    assert result.exit_code == 1
    assert msg in str(result.exc_info)


@pytest.mark.parametrize(
    "lam,order,derived,literature",
    [
        ("1,1,-1,-1", "top-down", -0.5, -0.75),
        ("2,2,0,0", "top-down", 0.5, 0.25),
        ("2,2,0,0", "bottom-up", 0.5, 0.25),
    ],
)
def test_critical_gr24_discrepancy(lam, order, derived, literature):
    """
    Test the Gr(2,4) report records both u3 formulas and that the estimate
    agrees with u3 = (lambda1 + 3 lambda3)/4
    """
    runner = CliRunner(mix_stderr=False)
    result = runner.invoke(
        critical,
        ["--flag", "2|4", "--lambda", lam, "--no-valuations", "--order", order],
        standalone_mode=False,
    )
    assert result.exit_code == 0
    (entry,) = result.return_value["discrepancies"]
    assert entry["coordinate"] == "u3"
    assert entry["box"] == [2, 2]
    assert entry["derived"] == pytest.approx(derived)
    assert entry["literature"] == pytest.approx(literature)
    assert entry["estimated"] == pytest.approx(derived, abs=1e-6)
    assert entry["supported"] == "derived"

    printed = json.loads(result.stdout)
    assert printed["discrepancies"][0]["literature_formula"] == "(u1 + 3 lambda3)/4"


def test_critical_no_discrepancy():
    """
    Test only Gr(2,4) carries a discrepancy entry
    """
    runner = CliRunner()
    result = runner.invoke(
        critical,
        ["--flag", "1,2|3", "--lambda", "2,0,-2", "--no-valuations"],
        standalone_mode=False,
    )
    assert result.exit_code == 0
    assert result.return_value["discrepancies"] == []
