from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from fibre_invariants.helpers.errors import PreconditionError, SingularMatrix
from fibre_invariants.linalg import matrices as mx

small_fractions = st.fractions(min_value=-5, max_value=5, max_denominator=4)


def matrices_of(n_rows, n_cols):
    return st.lists(st.lists(small_fractions, min_size=n_cols, max_size=n_cols), min_size=n_rows, max_size=n_rows)


# Test as_scalar ---------------------------------------------------------------------------------

@pytest.mark.parametrize(
    ("value", "expected"),
    [
        (3, Fraction(3)),
        ("-2/6", Fraction(-1, 3)),
        (Fraction(5, 7), Fraction(5, 7)),
    ]
)
def test_as_scalar(value, expected):
    assert mx.as_scalar(value) == expected


def test_as_scalar_rejects_floats():
    with pytest.raises((TypeError, ValueError)):
        mx.as_scalar(0.5)


# Test rref and rank -----------------------------------------------------------------------------

def test_rref_drops_zero_rows():
    reduced, pivots = mx.rref(mx.matrix([[1, 2, 3], [2, 4, 6], [0, 0, 1]]))
    assert pivots == (0, 2)
    assert reduced == [[1, 2, 0], [0, 0, 1]]


@settings(max_examples=30, deadline=None)
@given(matrices_of(3, 4))
def test_rank_matches_sympy(rows):
    assert mx.rank(rows) == sympy.Matrix(rows).rank()


@settings(max_examples=30, deadline=None)
@given(matrices_of(3, 5))
def test_nullspace_is_annihilated(rows):
    basis = mx.nullspace(rows)
    assert len(basis) == 5 - mx.rank(rows)
    for v in basis:
        assert mx.is_zero(mx.mat_vec(rows, v))


# Test solve -------------------------------------------------------------------------------------

def test_solve_consistent_system():
    a = mx.matrix([[1, 1], [1, -1]])
    assert mx.solve(a, mx.vector([3, 1])) == (2, 1)


def test_solve_inconsistent_system():
    a = mx.matrix([[1, 1], [2, 2]])
    assert mx.solve(a, mx.vector([1, 3])) is None


def test_solve_in_span():
    vectors = [mx.vector([1, 0, 1]), mx.vector([0, 1, 1])]
    assert mx.solve_in_span(vectors, mx.vector([2, 3, 5])) == (2, 3)
    assert mx.solve_in_span(vectors, mx.vector([0, 0, 1])) is None


# Test inverse and products ----------------------------------------------------------------------

def test_inverse_times_matrix_is_identity():
    a = mx.matrix([[2, 1], [7, 4]])
    assert mx.mat_mul(a, mx.inverse(a)) == mx.identity(2)


def test_inverse_of_singular_matrix_raises():
    with pytest.raises(SingularMatrix):
        mx.inverse(mx.matrix([[1, 2], [2, 4]]))


def test_bracket_of_commuting_matrices_vanishes():
    a = mx.diagonal(mx.vector([1, 2, 3]))
    b = mx.diagonal(mx.vector([0, 5, -1]))
    assert mx.is_zero_matrix(mx.bracket(a, b))


def test_singular_matrix_is_a_precondition_error():
    with pytest.raises(PreconditionError) as info:
        mx.inverse(mx.zeros(3, 3))
    assert info.value.exit_code == 2


# Test primitive vectors --------------------------------------------------------------------------

@pytest.mark.parametrize(
    ("values", "expected"),
    [
        ([Fraction(1, 2), Fraction(1, 3)], [3, 2]),
        ([0, -4, 6], [0, 2, -3]),
        ([Fraction(-2, 3), 0, Fraction(4, 9)], [3, 0, -2]),
        ([0, 0], [0, 0]),
    ]
)
def test_primitive_vector(values, expected):
    assert mx.primitive_vector(values) == expected
