import pytest
from hypothesis import given
from hypothesis import strategies as st

from fibre_invariants.springer.partitions import (
    conjugate,
    dominates,
    forget_grading,
    is_partition,
    n_statistic,
    normalize,
    partitions_of,
    to_str,
    weight,
)

partitions = st.lists(st.integers(min_value=1, max_value=4), max_size=4).map(normalize)


# Test basic helpers ------------------------------------------------------------------------------

@pytest.mark.parametrize(
    ("parts", "expected"),
    [
        ([1, 3, 0, 2], (3, 2, 1)),
        ([], ()),
        ((0, 0), ()),
    ]
)
def test_normalize(parts, expected):
    assert normalize(parts) == expected


def test_is_partition():
    assert is_partition((3, 1, 1))
    assert is_partition(())
    assert not is_partition((1, 3))
    assert not is_partition((2, 0))


@given(partitions)
def test_conjugate_is_an_involution(mu):
    assert conjugate(conjugate(mu)) == mu
    assert weight(conjugate(mu)) == weight(mu)


def test_n_statistic_and_to_str():
    assert n_statistic((2, 1)) == 1
    assert n_statistic((1, 1, 1)) == 3
    assert to_str((3, 2, 2, 1)) == "3 2^2 1"


# Test orders and enumeration ---------------------------------------------------------------------

def test_partitions_of_four():
    assert partitions_of(4) == ((4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1))
    assert partitions_of(0) == ((),)
    assert [len(partitions_of(n)) for n in range(1, 8)] == [1, 2, 3, 5, 7, 11, 15]


@pytest.mark.parametrize(
    ("lam", "mu", "expected"),
    [
        ((3, 1), (2, 2), True),
        ((2, 2), (3, 1), False),
        ((2, 2), (2, 1, 1), True),
        ((3,), (2, 1, 1), False),
    ]
)
def test_dominates(lam, mu, expected):
    assert dominates(lam, mu) is expected


@given(partitions)
def test_dominance_reverses_under_conjugation(mu):
    for lam in partitions_of(weight(mu)):
        assert dominates(lam, mu) == dominates(conjugate(mu), conjugate(lam))


def test_forget_grading():
    # one part of size 1, two of size 3
    assert forget_grading([[1, 0], [0, 0], [0, 2]]) == (3, 3, 1)
    assert forget_grading([]) == ()
