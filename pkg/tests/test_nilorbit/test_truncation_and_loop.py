import random

import pandas as pd
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fibre_invariants.fibre import FibreAnalysis
from fibre_invariants.generators.general import General
from fibre_invariants.helpers.errors import NotInPanel
from fibre_invariants.linalg import matrices as mx
from fibre_invariants.nilorbit.graded_jordan import graded_jordan_minus, graded_jordan_plus
from fibre_invariants.nilorbit.loop import graded_traces, loop_exponents
from fibre_invariants.nilorbit.strata import matrix_key, sample_strata
from fibre_invariants.nilorbit.truncation import truncate
from tests.instances import chain_panel, general_panel


# Test truncate ----------------------------------------------------------------------------------

def test_truncation_of_chain_panel():
    fibre = FibreAnalysis(chain_panel(4))
    t = mx.vector([0, 1, 2, 3])
    minus = graded_jordan_minus(t, fibre.reduced_model)
    plus = graded_jordan_plus(t, fibre.reduced_model)
    truncation = truncate(t, fibre.model, minus=minus, mu00=plus.mu(0, 0))
    assert truncation.partition == (3, 1)
    assert truncation.truncated == (2,)
    assert truncation.s == 2
    assert truncation.s_prime == 1
    assert truncation.m1_identity is True


@pytest.mark.parametrize("d", [5, 6, 7])
def test_scroll_partition_for_points_on_a_line(d):
    panel = General(d=d, r=1, bound=50).generate(random.Random(d))
    fibre = FibreAnalysis(panel)
    t, _ = fibre.operator(tuple(c[0] for c in panel.config.coords))
    truncation = truncate(t, fibre.model)
    assert truncation.partition == (d - 1, 1)
    assert truncation.truncated == (d - 2,)
    assert sum(truncation.truncated) == d - panel.r - 1


def test_truncation_needs_a_panel_function():
    fibre = FibreAnalysis(chain_panel(4))
    with pytest.raises(NotInPanel):
        truncate(mx.vector([1, 0, 0, 0]), fibre.model)


# Test loop exponents -----------------------------------------------------------------------------

def test_loop_exponents_of_chain_panel():
    fibre = FibreAnalysis(chain_panel(4))
    loop = loop_exponents(mx.vector([0, 1, 2, 3]), fibre.reduced_model)
    assert loop.traces == (-2, 0, 2)
    assert loop.exponents == (2, 2)
    assert loop.coweight == loop.exponents


@settings(max_examples=100, deadline=None)
@given(st.integers(min_value=0, max_value=1000))
def test_graded_traces_sum_to_zero(seed):
    fibre = FibreAnalysis(general_panel(6, 2, seed=seed % 20))
    _, t = fibre.operator(seed=seed)
    jordan = graded_jordan_plus(t, fibre.reduced_model)
    assert sum(graded_traces(jordan)) == 0
    loop = loop_exponents(t, fibre.reduced_model, jordan)
    bound = 2 * max(fibre.reduced_model.dims()) * jordan.levels
    assert all(abs(a) <= bound for a in loop.exponents)


# Test strata --------------------------------------------------------------------------------------

def test_strata_of_chain_panel():
    fibre = FibreAnalysis(chain_panel(4))
    report = sample_strata(fibre.reduced, fibre.reduced_model, 12, seed=3)
    assert isinstance(report.overview, pd.DataFrame)
    assert len(report.overview) == 12
    assert report.summary["count"].sum() == 12
    assert report.generic_partition == (3, 1)
    assert (3, 1) in report.partitions


def test_strata_need_samples():
    fibre = FibreAnalysis(chain_panel(4))
    with pytest.raises(ValueError):
        sample_strata(fibre.reduced, fibre.reduced_model, 0)


def test_matrix_key_is_compact_json():
    assert matrix_key((3, 1)) == "[3,1]"
    assert matrix_key(((1, 0), (0, 1))) == "[[1,0],[0,1]]"
