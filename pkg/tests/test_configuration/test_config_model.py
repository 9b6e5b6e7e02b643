import pytest

from fibre_invariants.configuration.config_model import (
    Configuration,
    Panel,
    inverse_rescaling,
    kappa_embed,
    mult,
    panel_from_pencil,
    rescale_panel,
    trace,
)
from fibre_invariants.helpers.errors import ConfigMismatch, InvalidInstance, SigmaVanishes, UnitVanishes
from fibre_invariants.linalg import matrices as mx
from fibre_invariants.linalg.subspace import Subspace
from tests.instances import chain_panel


# Test Configuration ------------------------------------------------------------------------------

@pytest.mark.parametrize(
    ("kwargs", "message"),
    [
        # duplicate labels
        ({"labels": ("a", "a")}, "distinct"),
        # repeated coordinates
        ({"labels": ("a", "b"), "coords": ((1,), (1,))}, "distinct"),
        # zero trace weight
        ({"labels": ("a", "b"), "trace_weights": (1, 0)}, "nonzero"),
        # no points at all
        ({"labels": ()}, "at least one point"),
    ]
)
def test_invalid_configurations(kwargs, message):
    with pytest.raises(InvalidInstance, match=message):
        Configuration(**kwargs)


def test_default_weights_are_one():
    config = Configuration.unlabeled(3)
    assert config.labels == ("z1", "z2", "z3")
    assert config.trace_weights == (1, 1, 1)
    assert config.form(config.ones(), config.ones()) == 3


def test_weighted_trace():
    assert trace(mx.vector([1, 2, 3]), mx.vector([1, -1, 2])) == 5
    assert trace(mx.vector([1, 2, 3])) == 6


def test_mult_of_functions_on_different_configurations_raises():
    with pytest.raises(ConfigMismatch):
        mult(mx.vector([1, 2]), mx.vector([1, 2, 3]))


# Test Panel --------------------------------------------------------------------------------------

def test_panel_needs_constants():
    config = Configuration.unlabeled(3)
    with pytest.raises(InvalidInstance, match="constant"):
        Panel(config, Subspace.span([mx.vector([1, 0, 0]), mx.vector([0, 1, 0])], 3))


def test_panel_needs_r_at_least_one():
    config = Configuration.unlabeled(3)
    with pytest.raises(InvalidInstance):
        Panel(config, Subspace.span([config.ones()], 3))


def test_ordered_basis_starts_with_constants():
    panel = chain_panel(4)
    basis = panel.ordered_basis()
    assert panel.r == 1
    assert basis[0] == (1, 1, 1, 1)
    assert len(basis) == 2
    assert kappa_embed(panel)[0][0] == 1


# Test pencils and rescaling ----------------------------------------------------------------------

def test_panel_from_pencil_divides_by_sigma_prime():
    config = Configuration.unlabeled(3)
    panel = panel_from_pencil(config, [[1, 2, 4], [2, 2, 2]], 0)
    assert panel.contains(config.ones())
    assert panel.contains(mx.vector([2, 1, mx.as_scalar("1/2")]))


def test_panel_from_pencil_rejects_vanishing_sigma_prime():
    config = Configuration.unlabeled(2)
    with pytest.raises(SigmaVanishes):
        panel_from_pencil(config, [[1, 0], [1, 1]], 0)


def test_rescaling_is_undone_by_the_inverse_rescaling():
    panel = chain_panel(4)
    s = mx.vector([1, 2, 3, 4])
    moved = rescale_panel(panel, s)
    assert moved.r == panel.r
    back = rescale_panel(moved, inverse_rescaling(s))
    assert back.space == panel.space


def test_rescaling_with_vanishing_unit_raises():
    panel = chain_panel(4)
    with pytest.raises(UnitVanishes):
        rescale_panel(panel, mx.vector([-1, 0, 1, 2]))
