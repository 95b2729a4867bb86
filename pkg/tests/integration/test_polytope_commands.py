"""
Test `gc polytope` and `gc potential` commands
"""

import json
import os
from fractions import Fraction

import pandas
import pytest
from click.testing import CliRunner

from gelfand_cetlin_cli.cli import main
from gelfand_cetlin_cli.cli.polytope_commands import polytope
from gelfand_cetlin_cli.cli.potential_commands import potential
from gelfand_cetlin_cli.utils import read_json


def test_polytope_flag3():
    """
    Test `gc polytope` on the anti-canonical polytope of F(1,2,3)
    """
    runner = CliRunner(mix_stderr=False)
    result = runner.invoke(
        polytope, ["--flag", "1,2|3", "--lambda", "2,0,-2"], standalone_mode=False
    )
    assert result.exit_code == 0
    report = result.return_value
    assert report["N"] == 3
    assert report["coords"] == [[2, 1], [2, 2], [1, 1]]
    assert len(report["facets"]) == 6
    assert len(report["vertices"]) == 7
    assert report["volume"] == Fraction(8)
    assert report["volume_formula"] == Fraction(8)
    assert report["lattice_points"] == report["weyl_dimension"] == 27
    assert report["reflexive"]
    assert report["interior_point"] == [1, -1, 0]
    assert report["translation"] == [-1, 1, 0]
    assert report["volume_method"] == "integral"
    assert report["dual_volume"] == report["dual_volume_formula"] == Fraction(4, 3)
    assert report["cohomology_rank"] == 6

    printed = json.loads(result.stdout)
    assert printed["volume"] == "8"
    assert printed["dual_volume"] == "4/3"


@pytest.mark.parametrize(
    "flag,lam,volume,points",
    [
        ("2|4", "1,1,0,0", Fraction(1, 12), 6),
        ("1|3", "2,-1,-1", Fraction(9, 2), 10),
        ("1,3|4", "2,0,0,-2", Fraction(16, 3), None),
    ],
)
def test_polytope_volumes(flag, lam, volume, points):
    runner = CliRunner()
    result = runner.invoke(
        polytope,
        ["--flag", flag, "--lambda", lam, "--order", "bottom-up"],
        standalone_mode=False,
    )
    assert result.exit_code == 0
    assert result.return_value["volume"] == volume
    if points is not None:
        assert result.return_value["lattice_points"] == points


@pytest.mark.parametrize(
    "flag,lam,volume",
    [
        ("1,2|3", "2,0,-2", Fraction(8)),
        ("2|4", "1,1,0,0", Fraction(1, 12)),
        ("1,3|4", "2,0,0,-2", Fraction(16, 3)),
    ],
)
def test_polytope_triangulation(flag, lam, volume):
    """
    Test the pulling triangulation gives the same volume as the formula
    """
    runner = CliRunner(mix_stderr=False)
    result = runner.invoke(
        polytope,
        ["--flag", flag, "--lambda", lam, "--method", "triangulation"],
        standalone_mode=False,
    )
    assert result.exit_code == 0
    report = result.return_value
    assert report["volume_method"] == "triangulation"
    assert report["volume"] == report["volume_formula"] == volume
    assert json.loads(result.stdout)["volume"] == str(volume)


def test_polytope_triangulation_too_large(mocker):
    """
    Test the triangulation refuses polytopes above its dimension limit
    """
    mocker.patch("gelfand_cetlin_cli.gcpoly.volume.TRIANGULATION_MAX_DIM", 2)
    runner = CliRunner()
    result = runner.invoke(
        polytope,
        ["--flag", "1,2|3", "--lambda", "1,0,-1", "--method", "triangulation"],
        standalone_mode=False,
    )
    assert result.exit_code == 1
    assert "limited to dimension 2" in str(result.exc_info)


def test_polytope_not_integral():
    """
    Test half-integral weights have no lattice point report
    """
    runner = CliRunner()
    result = runner.invoke(
        polytope, ["--flag", "1|2", "--lambda", "1/2,0"], standalone_mode=False
    )
    assert result.exit_code == 0
    assert result.return_value["lattice_points"] is None
    assert result.return_value["volume"] == Fraction(1, 2)
    assert not result.return_value["reflexive"]

    result = runner.invoke(
        polytope,
        ["--flag", "1|2", "--lambda", "1/2,0", "--csv", "points.csv"],
        standalone_mode=False,
    )
    assert result.exit_code == 1
    assert "integral lambda" in str(result.exc_info)


def test_polytope_files(tmp_path):
    """
    Test the JSON report and the lattice point CSV are written
    """
    out = str(tmp_path / "report.json")
    csv_path = str(tmp_path / "points.csv")
    runner = CliRunner()
    result = runner.invoke(
        polytope,
        [
            "--flag",
            "1,2|3",
            "--lambda",
            "2,0,-2",
            "--out",
            out,
            "--csv",
            csv_path,
        ],
        standalone_mode=False,
    )
    assert result.exit_code == 0
    assert os.path.exists(out)
    report = read_json(out)
    assert report["volume"] == "8"
    assert report["lattice_points_csv"] == csv_path
    assert pandas.read_csv(csv_path).shape == (27, 3)


@pytest.mark.parametrize(
    "args,msg",
    [
        (["--flag", "1,2|3", "--lambda", "2,0"], "needs 3 weights"),
        (["--flag", "1,2/3", "--lambda", "2,0,-2"], "Invalid flag"),
        (["--flag", "1,2|3", "--lambda", "0,1,2"], "strictly decrease"),
        (["--flag", "1,2|3", "--lambda", "2,x,-2"], "Not a rational number"),
        (["--flag", "1|3", "--lambda", "2,1,0"], "same block"),
    ],
)
def test_polytope_bad_input(args, msg):
    """
    Test usage errors for malformed or inconsistent flag and lambda
    """
    runner = CliRunner()
    result = runner.invoke(polytope, args, standalone_mode=False)
    assert result.exit_code == 1
    assert msg in str(result.exc_info)


def test_polytope_usage_exit_code():
    """
    Test usage errors exit with code 2 from the installed entrypoint
    """
    runner = CliRunner()
    result = runner.invoke(main, ["polytope", "--flag", "1|2", "--lambda", "1"])
    assert result.exit_code == 2
    assert "needs 2 weights" in result.output


@pytest.mark.parametrize(
    "flag,lam,laurent",
    [
        ("1,2|3", "2,0,-2", "Q1/y1 + y1/Q2 + Q2/y2 + y2/Q3 + y1/y3 + y3/y2"),
        ("2|4", "1,1,0,0", "Q1/y2 + y2/y1 + y1/y3 + y3/Q3 + y2/y4 + y4/y3"),
    ],
)
def test_potential(flag, lam, laurent):
    """
    Test `gc potential` prints the Laurent form
    """
    runner = CliRunner(mix_stderr=False)
    result = runner.invoke(
        potential, ["--flag", flag, "--lambda", lam], standalone_mode=False
    )
    assert result.exit_code == 0
    assert result.return_value["laurent"] == laurent
    assert json.loads(result.stdout)["laurent"] == laurent
