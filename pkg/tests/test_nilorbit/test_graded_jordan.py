import unittest

import pytest

from fibre_invariants.fibre import FibreAnalysis
from fibre_invariants.helpers.errors import NotInPanel
from fibre_invariants.linalg import matrices as mx
from fibre_invariants.linalg.jordan import Chain
from fibre_invariants.nilorbit.bigrading import bigrading, chain_weights
from fibre_invariants.nilorbit.graded_jordan import check_reflection, graded_jordan_minus, graded_jordan_plus
from fibre_invariants.springer.partitions import conjugate, forget_grading
from tests.instances import chain_panel, general_panel, rnc_panel


class TestChainPanelOperator(unittest.TestCase):
    def setUp(self):
        self.fibre = FibreAnalysis(chain_panel(4))
        self.t = mx.vector([0, 1, 2, 3])
        self.model = self.fibre.reduced_model

    def test_plus_data(self):
        plus = graded_jordan_plus(self.t, self.model)
        self.assertEqual(plus.partition, (3, 1))
        self.assertEqual(plus.mu(0, 0), 1)
        self.assertEqual(plus.mu(2, 2), 1)
        self.assertEqual(sum(sum(row) for row in plus.matrix), 2)
        self.assertEqual(plus.graded_partitions(), [(1,), (), (3,)])

    def test_minus_data_reflects_plus_data(self):
        plus = graded_jordan_plus(self.t, self.model)
        minus = graded_jordan_minus(self.t, self.model)
        self.assertEqual(minus.partition, plus.partition)
        self.assertEqual(minus.mu(0, 0), 1)
        self.assertEqual(minus.mu(2, 0), 1)
        check_reflection(plus, minus)

    def test_bigrading(self):
        grading = bigrading(self.t, self.model)
        self.assertEqual(grading.weight_dims, (1, 0, 2, 0, 1))
        self.assertEqual(grading.table[0], (1, 0, 1, 0, 0))
        self.assertEqual(grading.table[2], (0, 0, 0, 0, 1))
        self.assertEqual(grading.upper_filtration[0].dim, 4)
        self.assertEqual(grading.upper_filtration[-1].dim, 0)

    def test_t_outside_the_panel_raises(self):
        with self.assertRaises(NotInPanel):
            graded_jordan_plus(mx.vector([0, 1, 4, 9]), self.model)


@pytest.mark.parametrize(
    ("length", "step", "expected"),
    [
        (1, 1, [0]),
        (3, 1, [-2, 0, 2]),
        (2, -1, [1, -1]),
    ]
)
def test_chain_weights(length, step, expected):
    chain = Chain(tuple((mx.ONE,) for _ in range(length)), 0, step)
    assert chain_weights(chain) == expected


@pytest.mark.parametrize(("panel", "seed"), [(general_panel(7, 2), 0), (general_panel(8, 3, seed=2), 4), (rnc_panel(3), 1)])
def test_graded_partitions_recover_the_hilbert_vector(panel, seed):
    fibre = FibreAnalysis(panel)
    _, t = fibre.operator(seed=seed)
    plus = graded_jordan_plus(t, fibre.reduced_model)
    hilbert = fibre.reduced_model.dims()
    union = sorted((part for lam in plus.graded_partitions() for part in lam), reverse=True)
    assert tuple(union) == plus.partition
    assert forget_grading(plus.matrix) == plus.partition
    for p in range(plus.levels):
        count = 0
        for level in range(p, plus.levels):
            conj = conjugate(plus.graded_partition(level))
            if level - p < len(conj):
                count += conj[level - p]
        assert count == hilbert[p]


def test_generic_partition_on_rational_normal_curve():
    fibre = FibreAnalysis(rnc_panel(3))
    _, t = fibre.operator(mx.vector([s * s for s in range(1, 7)]))
    assert graded_jordan_plus(t, fibre.reduced_model).partition == (3, 2, 1)
