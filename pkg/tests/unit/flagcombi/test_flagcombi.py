"""
Test flag types, ladder diagrams, positive paths and index set combinatorics
"""

import pytest

from gelfand_cetlin_cli.flagcombi import (
    FlagType,
    anticanonical_lambda,
    cohomology_rank,
    coordinate_order,
    dimension,
    index_set_from_steps,
    is_pinned,
    ladder_diagram,
    meet_join,
    path_endpoint,
    path_steps,
    permutation_sign,
    positive_paths,
)


@pytest.mark.parametrize(
    "text,n,steps",
    [
        ("1,2|3", 3, (1, 2)),
        ("2|4", 4, (2,)),
        ("1,3|4", 4, (1, 3)),
    ],
)
def test_flag_from_string(text, n, steps):
    """
    Test parsing of the compact flag format and its inverse
    """
    flag = FlagType.from_string(text)
    assert flag == FlagType(n, steps)
    assert flag.to_string() == text
    assert FlagType.from_string(flag.to_string()) == flag


@pytest.mark.parametrize(
    "text", ["", "2", "2|", "a|4", "3|3", "2,1|4", "0|3", "|4"]
)
def test_flag_from_string_errors(text):
    """
    Test invalid flag strings
    """
    with pytest.raises(ValueError) as e:
        FlagType.from_string(text)
    assert "❌" in str(e.value)


def test_flag_properties():
    """
    Test block structure of a partial flag
    """
    flag = FlagType(5, (2, 3))
    assert flag.r == 2
    assert flag.bounds == (0, 2, 3, 5)
    assert flag.block_sizes == (2, 1, 2)
    assert [flag.block_of(i) for i in range(1, 6)] == [1, 1, 2, 3, 3]
    assert [flag.block_start(i) for i in range(1, 6)] == [1, 1, 3, 4, 4]
    assert not flag.is_full
    assert not flag.is_grassmannian
    assert FlagType.full(4).is_full
    assert FlagType.grassmannian(2, 4).is_grassmannian
    assert str(FlagType.grassmannian(2, 4)) == "F(2,4)"

    with pytest.raises(ValueError):
        flag.block_of(6)


@pytest.mark.parametrize(
    "flag,N",
    [
        (FlagType.full(2), 1),
        (FlagType.full(3), 3),
        (FlagType.full(4), 6),
        (FlagType.full(5), 10),
        (FlagType.grassmannian(2, 4), 4),
        (FlagType.grassmannian(1, 3), 2),
        (FlagType.grassmannian(2, 5), 6),
        (FlagType(4, (1, 3)), 5),
    ],
)
def test_dimension(flag, N):
    """
    Test N = sum (n_i - n_{i-1})(n - n_i) against the number of ladder boxes
    """
    assert dimension(flag) == N
    assert len(coordinate_order(flag)) == N
    assert len(ladder_diagram(flag).boxes) == N


def test_pinned_entries():
    """
    Test which pattern entries sit in the diagonal squares
    """
    flag = FlagType.grassmannian(2, 4)
    pinned = {
        (k, i) for k in range(1, 4) for i in range(1, k + 1) if is_pinned(flag, k, i)
    }
    assert pinned == {(3, 1), (3, 3)}

    # Full flags pin nothing below the top row
    full = FlagType.full(4)
    assert not any(
        is_pinned(full, k, i) for k in range(1, 4) for i in range(1, k + 1)
    )
    assert is_pinned(full, 4, 2)


def test_coordinate_orders():
    """
    Test the two orderings of the ladder boxes
    """
    assert coordinate_order(FlagType.full(3), "top-down") == [
        (2, 1),
        (2, 2),
        (1, 1),
    ]
    assert coordinate_order(FlagType.full(3)) == [(1, 1), (2, 1), (2, 2)]
    assert coordinate_order(FlagType.grassmannian(2, 4), "top-down") == [
        (3, 2),
        (2, 1),
        (2, 2),
        (1, 1),
    ]
    with pytest.raises(ValueError) as e:
        coordinate_order(FlagType.full(3), "sideways")
    assert "sideways" in str(e.value)


def test_ladder_diagram():
    """
    Test grid cells and corners of the ladder diagram of Gr(2,4)
    """
    ladder = ladder_diagram(FlagType.grassmannian(2, 4))
    assert ladder.corners == ((0, 0), (2, 2))
    assert sorted(ladder.cells) == [(1, 1), (1, 2), (2, 1), (2, 2)]


def test_positive_paths():
    """
    Test positive paths are the k-subsets of 1..n in lexicographic order
    """
    flag = FlagType.grassmannian(2, 4)
    paths = positive_paths(flag, 1)
    assert paths == [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]

    full = FlagType.full(3)
    assert positive_paths(full, 1) == [(1,), (2,), (3,)]
    assert positive_paths(full, 2) == [(1, 2), (1, 3), (2, 3)]

    with pytest.raises(ValueError):
        positive_paths(flag, 2)


def test_path_steps():
    """
    Test step words and their inverse
    """
    assert path_steps((2, 3), 5) == "VHHVV"
    assert index_set_from_steps("VHHVV") == (2, 3)
    assert path_endpoint((2, 3), 5) == (2, 3)
    assert index_set_from_steps(path_steps((1, 4), 4)) == (1, 4)

    with pytest.raises(ValueError):
        path_steps((0, 2), 4)
    with pytest.raises(ValueError):
        index_set_from_steps("HXV")


@pytest.mark.parametrize(
    "I,J,meet,join",
    [
        ((1, 4), (2, 3), (1, 3), (2, 4)),
        ((2,), (1, 3), (1, 3), (2,)),
        ((3,), (1, 2), (1, 2), (3,)),
        ((1, 2), (1, 2), (1, 2), (1, 2)),
    ],
)
def test_meet_join(I, J, meet, join):
    """
    Test componentwise min/max of index sets
    """
    assert meet_join(I, J) == (meet, join)


@pytest.mark.parametrize(
    "seq,ordered,sign",
    [
        ((1, 2, 3), (1, 2, 3), 1),
        ((2, 1, 3), (1, 2, 3), -1),
        ((3, 1, 2), (1, 2, 3), 1),
        ((3, 2, 1), (1, 2, 3), -1),
        ((2, 2, 1), (1, 2, 2), 0),
        ((), (), 1),
    ],
)
def test_permutation_sign(seq, ordered, sign):
    """
    Test sorting parity
    """
    assert permutation_sign(seq) == (ordered, sign)


@pytest.mark.parametrize(
    "flag,lam",
    [
        (FlagType.full(3), [2, 0, -2]),
        (FlagType.full(4), [3, 1, -1, -3]),
        (FlagType.grassmannian(2, 4), [2, 2, -2, -2]),
        (FlagType.grassmannian(1, 3), [2, -1, -1]),
    ],
)
def test_anticanonical_lambda(flag, lam):
    """
    Test the weight of the anti-canonical bundle
    """
    assert anticanonical_lambda(flag) == lam


@pytest.mark.parametrize(
    "flag,rank",
    [
        (FlagType.full(2), 2),
        (FlagType.full(3), 6),
        (FlagType.full(4), 24),
        (FlagType.grassmannian(2, 4), 6),
        (FlagType.grassmannian(2, 5), 10),
        (FlagType(4, (1, 3)), 12),
    ],
)
def test_cohomology_rank(flag, rank):
    """
    Test the rank of H*(F) = n!/(k_1! ... k_{r+1}!)
    """
    assert cohomology_rank(flag) == rank
