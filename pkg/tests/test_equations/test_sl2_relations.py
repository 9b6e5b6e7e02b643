import unittest

import pytest

from fibre_invariants.equations import polynomials as pl
from fibre_invariants.equations.monomial import (
    all_rank_bounded_relations,
    expected_relation_rank,
    monomial_relations,
    rank_bounded_relations,
)
from fibre_invariants.equations.sl2_basis import lift_function, sl2_basis
from fibre_invariants.fibre import FibreAnalysis
from fibre_invariants.helpers.errors import NonConstantRequired
from fibre_invariants.linalg import matrices as mx
from tests.instances import chain_panel, rnc_panel


def basis_for(panel, t):
    fibre = FibreAnalysis(panel)
    _, reduced_t = fibre.operator(t)
    return sl2_basis(reduced_t, fibre.reduced_model, fibre.reduced.config.labels)


class TestChainBasis(unittest.TestCase):
    def setUp(self):
        self.basis = basis_for(chain_panel(4), mx.vector([0, 1, 2, 3]))

    def test_coordinates_are_the_level_zero_starts(self):
        self.assertEqual(self.basis.variables, ("Y_0_0", "Y_2_0"))
        self.assertEqual(len(self.basis.elements), 4)
        self.assertEqual(sorted(e.degree for e in self.basis.elements), [0, 0, 1, 2])

    def test_linear_forms_evaluate_to_one_and_t(self):
        for k, point in enumerate(self.basis.points):
            self.assertEqual(pl.evaluate(self.basis.t_alpha, point), 1)
            self.assertEqual(pl.evaluate(self.basis.t_tilde, point), self.basis.t[k])

    def test_liftings_take_the_chain_start_values(self):
        for g in self.basis.generators:
            self.assertEqual(pl.homogeneous_degree(g.lifting), g.level + 1)
            values = tuple(pl.evaluate(g.lifting, point) for point in self.basis.points)
            self.assertEqual(values, g.vector)

    def test_quartic_from_the_long_chain(self):
        relations = rank_bounded_relations(self.basis, 2, 2)
        self.assertEqual(len(relations), 1)
        self.assertEqual(pl.homogeneous_degree(relations.polys[0]), 4)
        self.assertEqual(relations.certificate, [[0, 0, 0, 0]])

    def test_all_rank_bounded_relations_have_the_expected_rank(self):
        for relations in all_rank_bounded_relations(self.basis):
            self.assertTrue(relations.notes[0].startswith("q="))
        self.assertEqual(expected_relation_rank(self.basis, 0, 0), 0)
        self.assertEqual(expected_relation_rank(self.basis, 2, 2), 1)

    def test_homogeneous_monomial_relations_are_the_quartic(self):
        relations = monomial_relations(self.basis, degree_cap=4)
        self.assertEqual(pl.coefficient_rank(relations.homogeneous.polys), 1)
        self.assertTrue(all(pl.homogeneous_degree(h) == 4 for h in relations.homogeneous.polys))
        self.assertTrue(all(sum(exps) == 4 for exps in relations.monomials))


def test_constant_operator_is_rejected():
    fibre = FibreAnalysis(chain_panel(4))
    with pytest.raises(NonConstantRequired):
        sl2_basis(mx.vector([1, 1, 1, 1]), fibre.reduced_model, fibre.reduced.config.labels)


def test_conic_through_rational_normal_curve():
    basis = basis_for(rnc_panel(3), mx.vector([s * s for s in range(1, 7)]))
    assert len(basis.variables) == 3
    relations = monomial_relations(basis, degree_cap=2)
    assert pl.coefficient_rank(relations.homogeneous.polys) == 1
    assert pl.quadric_rank(relations.homogeneous.polys[0]) == 3


def test_lift_function_interpolates():
    _, gens = pl.polynomial_ring(["A", "B"])
    points = [(mx.ONE, mx.as_scalar(x)) for x in range(3)]
    lifting = lift_function(mx.vector([0, 1, 4]), 2, gens, points)
    assert [pl.evaluate(lifting, p) for p in points] == [0, 1, 4]
    assert lift_function(mx.vector([0, 1, 5]), 1, gens, points) is None
