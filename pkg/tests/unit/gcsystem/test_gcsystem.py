"""
Test the Gelfand-Cetlin map, fiber points and interior sampling
"""

import numpy
import pytest

from gelfand_cetlin_cli.flagcombi import FlagType
from gelfand_cetlin_cli.gcpoly import build_polytope, contains
from gelfand_cetlin_cli.gcsystem import (
    HermitianMatrix,
    OrbitPoint,
    arrow_completion,
    fiber_point,
    gc_map,
    pattern_from_point,
    point_from_pattern,
    random_orbit_point,
    sample_interior_points,
)


def test_hermitian_matrix():
    """
    Test Hermitian matrices are validated and symmetrized
    """
    x = HermitianMatrix([[1, 2 + 1j], [2 - 1j, -1]])
    assert x.n == 2
    numpy.testing.assert_allclose(x.spectrum(), [numpy.sqrt(6), -numpy.sqrt(6)])
    assert x.leading_block(1).tolist() == [[1]]

    with pytest.raises(ValueError) as e:
        HermitianMatrix([[1, 2], [0, 1]])
    assert "not Hermitian" in str(e.value)
    with pytest.raises(ValueError):
        HermitianMatrix(numpy.zeros((2, 3)))


def test_orbit_point():
    """
    Test orbit points must have spectrum lambda
    """
    x = HermitianMatrix(numpy.diag([2.0, 0.0, -2.0]))
    assert OrbitPoint(x, (2, 0, -2)).lambda_ == (2.0, 0.0, -2.0)
    with pytest.raises(ValueError) as e:
        OrbitPoint(x, (2, 1, -2))
    assert "Spectrum" in str(e.value)
    with pytest.raises(ValueError):
        OrbitPoint(x, (2, 0))


def test_random_orbit_point():
    """
    Test seeded Haar-random orbit points
    """
    x = random_orbit_point((2, 0, -2), seed=3)
    numpy.testing.assert_allclose(x.matrix.spectrum(), [2, 0, -2], atol=1e-12)
    y = random_orbit_point((2, 0, -2), seed=3)
    numpy.testing.assert_array_equal(x.entries, y.entries)
    assert random_orbit_point((5,)).entries.tolist() == [[5]]

    with pytest.raises(ValueError):
        random_orbit_point((0, 1))


def test_gc_map_diagonal(flag3_poly):
    """
    Test the GC map of a diagonal matrix reads off its entries
    """
    x = numpy.diag([2.0, 0.0, -2.0])
    image = gc_map(x, flag3_poly.flag, flag3_poly.coords)
    numpy.testing.assert_allclose(image, [2, 0, 2])

    # bottom-up order by default
    numpy.testing.assert_allclose(gc_map(x, FlagType.full(3)), [2, 2, 0])

    with pytest.raises(ValueError):
        gc_map(numpy.eye(2), FlagType.full(3))


@pytest.mark.parametrize(
    "flag,lam",
    [
        (FlagType.full(3), (2, 0, -2)),
        (FlagType.full(4), (3, 1, -1, -3)),
        (FlagType.grassmannian(2, 4), (1, 1, -1, -1)),
        (FlagType(4, (1, 3)), (2, 0, 0, -2)),
    ],
)
def test_gc_map_lands_in_polytope(flag, lam):
    """
    Test interlacing: the GC image of any orbit point lies in Delta_lambda
    """
    poly = build_polytope(flag, lam, "top-down")
    for seed in range(50):
        x = random_orbit_point(lam, seed)
        assert contains(poly, gc_map(x, flag, poly.coords).tolist(), tol=1e-9)


def test_gc_map_eigen_failure(mocker, flag3_poly):
    """
    Test eigen-decomposition failures surface as ValueError
    """
    x = random_orbit_point((2, 0, -2))
    mocker.patch(
        "gelfand_cetlin_cli.gcsystem.numpy.linalg.eigvalsh",
        side_effect=numpy.linalg.LinAlgError("did not converge"),
    )
    with pytest.raises(ValueError) as e:
        gc_map(x, flag3_poly.flag, flag3_poly.coords)
    assert "Eigen-decomposition failed" in str(e.value)


@pytest.mark.parametrize(
    "a,b",
    [
        ((3.0, 1.0), (2.0,)),
        ((3.0, 1.0, -2.0), (2.0, 0.0)),
        ((3.0, 1.0, -2.0), (3.0, -2.0)),
        ((1.0, 1.0, 1.0), (1.0, 1.0)),
    ],
)
def test_arrow_completion(a, b):
    """
    Test the bordered matrix has diagonal b and spectrum a
    """
    M = arrow_completion(a, b)
    numpy.testing.assert_allclose(M.spectrum(), a, atol=1e-12)
    numpy.testing.assert_allclose(numpy.diag(M.entries)[:-1].real, b)


def test_arrow_completion_errors():
    with pytest.raises(ValueError) as e:
        arrow_completion((3.0, 1.0), (4.0,))
    assert "a_1 >= b_1" in str(e.value)
    with pytest.raises(ValueError) as e:
        arrow_completion((3.0, 1.0), (0.0,))
    assert "b_1 >= a_2" in str(e.value)
    with pytest.raises(ValueError):
        arrow_completion((3.0, 1.0), (2.0, 1.0))


@pytest.mark.parametrize(
    "flag,lam",
    [
        (FlagType.full(2), (1, 0)),
        (FlagType.full(3), (2, 0, -2)),
        (FlagType.full(4), (3, 1, -1, -3)),
        (FlagType.grassmannian(2, 4), (1, 1, -1, -1)),
    ],
)
def test_fiber_point_round_trip(flag, lam):
    """
    Test gc_map(fiber_point(u)) = u on interior points
    """
    poly = build_polytope(flag, lam, "top-down")
    for u in sample_interior_points(poly, 25, seed=1):
        x = fiber_point(poly, u)
        numpy.testing.assert_allclose(x.matrix.spectrum(), x.lambda_, atol=1e-9)
        numpy.testing.assert_allclose(
            gc_map(x, flag, poly.coords), u, atol=1e-8
        )


def test_fiber_point_on_boundary(flag3_poly):
    """
    Test fibers over vertices and edges, where arrow completions deflate
    """
    for u in [(0, 0, 0), (2, -2, 2), (2, 0, 1), (1, -1, 1)]:
        x = fiber_point(flag3_poly, u)
        numpy.testing.assert_allclose(
            gc_map(x, flag3_poly.flag, flag3_poly.coords), u, atol=1e-8
        )


def test_fiber_point_outside(flag3_poly):
    with pytest.raises(ValueError) as e:
        fiber_point(flag3_poly, (3, 0, 0))
    assert "outside" in str(e.value)


def test_sample_interior_points(flag3_poly):
    """
    Test seeded rejection sampling stays strictly inside
    """
    points = sample_interior_points(flag3_poly, 200, seed=7)
    assert points.shape == (200, 3)
    assert (flag3_poly.ell_float(points) > 0).all()
    numpy.testing.assert_array_equal(
        points, sample_interior_points(flag3_poly, 200, seed=7)
    )
    assert sample_interior_points(flag3_poly, 0).shape == (0, 3)
    with pytest.raises(ValueError):
        sample_interior_points(flag3_poly, -1)


def test_sample_interior_points_exhausted(mocker, flag3_poly):
    """
    Test sampling gives up after the configured number of batches
    """
    mocker.patch("gelfand_cetlin_cli.gcsystem.MAX_BATCHES", 1)
    mocker.patch("gelfand_cetlin_cli.gcsystem.BATCH_SIZE", 4)
    with pytest.raises(ValueError) as e:
        sample_interior_points(flag3_poly, 1000)
    assert "Rejection sampling" in str(e.value)


def test_pattern_conversion(gr24_poly):
    """
    Test conversion between coordinates and full patterns
    """
    pattern = pattern_from_point(gr24_poly, (0, 1, -1, 0))
    assert pattern.rows[2] == (1, 0, -1)
    assert point_from_pattern(gr24_poly, pattern) == (0, 1, -1, 0)
