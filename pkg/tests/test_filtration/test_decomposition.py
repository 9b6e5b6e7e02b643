import pytest

from fibre_invariants.configuration.config_model import Configuration, Panel
from fibre_invariants.filtration.decomposition import (
    decompose_with_rescaling,
    delta_heads_nonzero,
    orthogonal_decomposition,
)
from fibre_invariants.filtration.filtration import compute_filtration
from fibre_invariants.helpers.errors import DegenerateRestriction
from fibre_invariants.linalg import matrices as mx
from tests.instances import blocks_panel, chain_panel, general_panel, rnc_panel


def degenerate_panel():
    """Three points on a line whose weights make the form vanish on the constants and x."""
    config = Configuration(("a", "b", "c"), coords=((0,), (1,), (2,)), trace_weights=mx.vector([1, -2, 1]))
    return Panel.from_functions(config, [[0, 1, 2]])


def model_of(panel):
    return orthogonal_decomposition(panel, compute_filtration(panel))


# Test orthogonal_decomposition ------------------------------------------------------------------

@pytest.mark.parametrize(
    "panel",
    [chain_panel(4), chain_panel(6), blocks_panel((2, 3)), rnc_panel(3), general_panel(7, 2)],
)
def test_summands_are_orthogonal_with_hilbert_dims(panel):
    filtration = compute_filtration(panel)
    model = orthogonal_decomposition(panel, filtration)
    assert model.dims() == filtration.hilbert_vector
    assert model.length == filtration.length
    assert model.summand(0) == panel.space
    for p, a in enumerate(model.summands):
        for b in model.summands[p + 1:]:
            assert all(model.form(u, v) == 0 for u in a.basis for v in b.basis)


def test_steps_are_sums_of_summands():
    panel = chain_panel(5)
    filtration = compute_filtration(panel)
    model = orthogonal_decomposition(panel, filtration)
    for i in range(1, filtration.length + 1):
        partial = model.summand(0)
        for p in range(1, i):
            partial = partial + model.summand(p)
        assert partial == filtration.step(i)


def test_projections_split_every_function():
    panel = chain_panel(4)
    model = model_of(panel)
    f = mx.vector([3, -1, 4, 1])
    pieces = [model.component(f, p) for p in range(len(model.summands))]
    total = pieces[0]
    for piece in pieces[1:]:
        total = mx.add(total, piece)
    assert total == f
    for p, piece in enumerate(pieces):
        assert model.summand(p).contains(piece)


def test_level_of():
    panel = chain_panel(4)
    model = model_of(panel)
    assert model.level_of(panel.config.ones()) == 0
    assert model.level_of(mx.vector([0, 0, 0, 0])) is None
    assert model.level_of(model.summand(2).basis[0]) == 2


# Test degenerate restrictions --------------------------------------------------------------------

def test_degenerate_restriction_carries_first_failing_index():
    panel = degenerate_panel()
    with pytest.raises(DegenerateRestriction) as error:
        model_of(panel)
    assert error.value.index == 1
    assert error.value.to_dict()["index"] == 1


def test_rescaling_recovers_from_degenerate_restriction():
    panel = degenerate_panel()
    decomposition = decompose_with_rescaling(panel, seed=0)
    assert decomposition.rescaling is not None
    assert decomposition.attempts >= 1
    assert decomposition.model.dims() == decomposition.filtration.hilbert_vector
    assert decomposition.filtration.hilbert_vector == (2, 1, 0)


def test_rescaling_is_skipped_when_not_needed():
    decomposition = decompose_with_rescaling(chain_panel(4))
    assert decomposition.rescaling is None
    assert decomposition.attempts == 0


def test_rescaling_gives_up_after_max_attempts():
    with pytest.raises(DegenerateRestriction):
        decompose_with_rescaling(degenerate_panel(), max_attempts=0)


# Test delta heads --------------------------------------------------------------------------------

def test_delta_heads_are_nonzero_for_general_points():
    panel = general_panel(7, 2, seed=3)
    assert all(delta_heads_nonzero(model_of(panel)))
