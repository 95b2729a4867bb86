"""
Test sample file generation
"""

import os

import pandas
import pytest

from gelfand_cetlin_cli.config import config
from gelfand_cetlin_cli.gcpoly import contains
from gelfand_cetlin_cli.sampling import generate_sample_file


@pytest.mark.parametrize("kind", ["interior", "orbit"])
def test_generate_sample_file(tmp_path, flag3_poly, kind):
    """
    Test csv files of sample points land in Delta_lambda
    """
    filepath = generate_sample_file(
        flag3_poly, kind=kind, total_rows=25, seed=4, output_dir=str(tmp_path)
    )
    assert os.path.basename(filepath) == f"{kind}-samples-1-2_3.csv"

    df = pandas.read_csv(filepath)
    assert list(df.columns) == ["u1", "u2", "u3"]
    assert df.shape == (25, 3)
    for row in df.itertuples(index=False):
        assert contains(flag3_poly, list(row), tol=1e-9)


def test_generate_sample_file_repeatable(tmp_path, gr24_poly):
    """
    Test the same seed writes the same points
    """
    first = pandas.read_csv(
        generate_sample_file(gr24_poly, seed=9, output_dir=str(tmp_path / "a"))
    )
    second = pandas.read_csv(
        generate_sample_file(gr24_poly, seed=9, output_dir=str(tmp_path / "b"))
    )
    pandas.testing.assert_frame_equal(first, second)
    assert first.shape == (100, 4)


def test_generate_sample_file_default_dir(tmp_path, monkeypatch, flag2_poly):
    monkeypatch.setitem(config["sampling"], "output_dir", str(tmp_path / "samples"))
    filepath = generate_sample_file(flag2_poly, total_rows=3)
    assert os.path.dirname(filepath) == str(tmp_path / "samples")


def test_generate_sample_file_unknown_kind(tmp_path, flag3_poly):
    with pytest.raises(ValueError) as e:
        generate_sample_file(flag3_poly, kind="lattice", output_dir=str(tmp_path))
    assert "Unknown sample kind" in str(e.value)
