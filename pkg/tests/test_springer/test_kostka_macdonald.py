import unittest

import pytest
from sympy import Poly

from fibre_invariants.helpers.errors import WeightMismatch
from fibre_invariants.springer.kostka import Q, charge, kostka_foulkes, kostka_number, semistandard_tableaux
from fibre_invariants.springer.macdonald import cocharge, macdonald_value, orbit_dim, springer_fibre_dim
from fibre_invariants.springer.partitions import dominates, n_statistic, partitions_of


def q_poly(expression):
    return Poly(expression, Q, domain="ZZ")


# Test Kostka-Foulkes polynomials -----------------------------------------------------------------

@pytest.mark.parametrize(
    ("lam", "mu", "expected"),
    [
        ((2, 1), (1, 1, 1), Q + Q ** 2),
        ((3, 1), (2, 1, 1), Q + Q ** 2),
        ((2, 2), (2, 1, 1), Q),
        ((3, 1), (2, 2), Q),
    ]
)
def test_kostka_foulkes_values(lam, mu, expected):
    assert kostka_foulkes(lam, mu) == q_poly(expected)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_single_row_against_single_column(n):
    assert kostka_foulkes((n,), (1,) * n) == q_poly(Q ** (n * (n - 1) // 2))


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
def test_specializations(n):
    for lam in partitions_of(n):
        assert kostka_foulkes(lam, lam) == q_poly(1)
        for mu in partitions_of(n):
            value = kostka_foulkes(lam, mu)
            assert int(value.eval(1)) == kostka_number(lam, mu)
            if not dominates(lam, mu):
                assert value.is_zero


def test_kostka_foulkes_rejects_different_weights():
    with pytest.raises(WeightMismatch):
        kostka_foulkes((2,), (1, 1, 1))


def test_tableaux_and_charge():
    tableaux = semistandard_tableaux((2, 1), (1, 1, 1))
    assert sorted(tableaux) == [((1, 2), (3,)), ((1, 3), (2,))]
    assert charge([1]) == 0
    assert charge([1, 2]) == 1
    assert charge([2, 1]) == 0


# Test orbit and fibre dimensions -----------------------------------------------------------------

@pytest.mark.parametrize(
    ("mu", "n", "expected"),
    [
        ((2, 1), 3, 4),
        ((3,), 3, 6),
        ((1, 1, 1), 3, 0),
        ((2, 2), 4, 8),
    ]
)
def test_orbit_dim(mu, n, expected):
    assert orbit_dim(mu, n) == expected


def test_orbit_dim_needs_matching_weight():
    with pytest.raises(WeightMismatch):
        orbit_dim((2, 1), 4)


@pytest.mark.parametrize(("mu", "expected"), [((2, 2), 2), ((3,), 0), ((1, 1, 1, 1), 6), ((3, 2, 1), 4)])
def test_springer_fibre_dim(mu, expected):
    assert springer_fibre_dim(mu) == expected


@pytest.mark.parametrize("n", range(1, 11))
def test_fibre_and_orbit_dimensions_are_complementary(n):
    for mu in partitions_of(n):
        b = springer_fibre_dim(mu)
        assert b == n_statistic(mu)
        assert 2 * b == sum((2 * k - 1) * part for k, part in enumerate(mu, start=1)) - n
        assert orbit_dim(mu, n) + 2 * b == n * (n - 1)


# Test graded character ---------------------------------------------------------------------------

class TestMacdonaldValue(unittest.TestCase):
    def test_regular_orbit_gives_trivial_character(self):
        value = macdonald_value((3,), 3)
        self.assertEqual(value.at_one(), {(3,): 1})
        self.assertEqual(value.degree(), 0)

    def test_zero_orbit_gives_regular_representation(self):
        value = macdonald_value((1, 1, 1), 3)
        self.assertEqual(value.at_one(), {(3,): 1, (2, 1): 2, (1, 1, 1): 1})
        self.assertEqual(value.coefficient((2, 1)), q_poly(Q + Q ** 2))
        self.assertEqual(value.coefficient((3,)), q_poly(1))
        self.assertEqual(value.top_component(), {(1, 1, 1): 1})

    def test_top_degree_is_fibre_dimension(self):
        for n in range(1, 6):
            for mu in partitions_of(n):
                value = macdonald_value(mu, n)
                self.assertEqual(value.degree(), n_statistic(mu))
                self.assertEqual(value.top_component(), {mu: 1})
                self.assertEqual(value.at_one(), {lam: kostka_number(lam, mu) for lam in partitions_of(n) if kostka_number(lam, mu)})

    def test_to_dict_lists_coefficients_from_degree_zero(self):
        terms = macdonald_value((2, 1), 3).to_dict()["terms"]
        self.assertIn({"lambda": [2, 1], "poly_q": [0, 1]}, terms)
        self.assertIn({"lambda": [3], "poly_q": [1]}, terms)

    def test_weight_mismatch(self):
        with self.assertRaises(WeightMismatch):
            macdonald_value((2, 1), 4)


def test_cocharge_of_single_column():
    assert cocharge((2, 1), (1, 1, 1)) == q_poly(Q + Q ** 2)
    assert cocharge((3,), (1, 1, 1)) == q_poly(1)
