"""
Orthogonal decomposition of the function ring into graded summands.

Hᵖ = H̃₋(p+1) ∩ (H̃₋p)⊥ for p < ℓ and H^ℓ = (H̃₋ℓ)⊥, orthogonal for the trace
form of the configuration. The summands only exist where the trace form is
nondegenerate on every filtration step; otherwise DegenerateRestriction is
raised with the first failing index and a rescaled panel can be tried.
"""
import logging
import random
from dataclasses import dataclass
from typing import Optional, Sequence

from fibre_invariants.configuration.config_model import FnVec, Panel, rescale_panel
from fibre_invariants.filtration.filtration import Filtration, compute_filtration
from fibre_invariants.helpers.errors import DegenerateRestriction, InvariantViolation, UnitVanishes
from fibre_invariants.linalg import matrices as mx
from fibre_invariants.linalg.matrices import Mat
from fibre_invariants.linalg.subspace import BilinearForm, Subspace, orth_complement

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GradedModel:
    """Summands H⁰, ..., H^ℓ of Q^d and the orthogonal projections onto them."""

    summands: tuple[Subspace, ...]
    projections: tuple[tuple[tuple, ...], ...]
    form: BilinearForm

    @property
    def length(self) -> int:
        """ℓ; the last summand H^ℓ is the orthogonal of the stable step."""
        return len(self.summands) - 1

    @property
    def d(self) -> int:
        return self.form.dim

    def summand(self, p: int) -> Subspace:
        if 0 <= p < len(self.summands):
            return self.summands[p]
        return Subspace.zero(self.d)

    def projection(self, p: int) -> Mat:
        if 0 <= p < len(self.projections):
            return [list(row) for row in self.projections[p]]
        return mx.zeros(self.d, self.d)

    def dims(self) -> tuple[int, ...]:
        return tuple(s.dim for s in self.summands)

    def f_step(self, i: int) -> Subspace:
        """Fⁱ = ⊕_{p>=i} Hᵖ."""
        result = Subspace.zero(self.d)
        for p in range(max(i, 0), len(self.summands)):
            result = result + self.summands[p]
        return result

    def component(self, f: Sequence, p: int) -> FnVec:
        return mx.mat_vec(self.projection(p), f)

    def level_of(self, f: Sequence) -> Optional[int]:
        """The unique p with f in Hᵖ, None for zero or mixed vectors."""
        if mx.is_zero(f):
            return None
        for p, s in enumerate(self.summands):
            if s.contains(f):
                return p
        return None


def projection_matrix(basis: Sequence[Sequence], form: BilinearForm) -> Mat:
    """B (Bᵀ G B)⁻¹ Bᵀ G for the columns B of `basis`."""
    d = form.dim
    if not basis:
        return mx.zeros(d, d)
    b = mx.from_columns(basis, d)
    lowered = [list(form.lower(v)) for v in basis]
    gram_inverse = mx.inverse(form.gram_of(basis))
    return mx.mat_mul(mx.mat_mul(b, gram_inverse), lowered)


def orthogonal_decomposition(panel: Panel, filtration: Filtration) -> GradedModel:
    """Graded summands of the fibre.

    Raises:
        DegenerateRestriction: The trace form is degenerate on H̃₋ᵢ, i is the first failing index.
        InvariantViolation: If the summands fail to be an orthogonal direct sum with dims hᵖ.
    """
    form = panel.config.form
    for i, step in enumerate(filtration.steps, start=1):
        if not form.is_nondegenerate_on(step):
            logger.error("Trace form is degenerate on filtration step %s", i)
            raise DegenerateRestriction(i)

    summands = []
    previous = Subspace.zero(panel.d)
    for step in filtration.steps:
        summands.append(step.intersect(orth_complement(previous, form)))
        previous = step
    summands.append(orth_complement(filtration.stable, form))

    dims = tuple(s.dim for s in summands)
    if dims != filtration.hilbert_vector:
        logger.error("Summand dims %s differ from hilbert vector %s", dims, filtration.hilbert_vector)
        raise InvariantViolation(f"Summand dims {dims} differ from hilbert vector {filtration.hilbert_vector}")
    for p, a in enumerate(summands):
        for b in summands[p + 1:]:
            if any(form(u, v) != 0 for u in a.basis for v in b.basis):
                raise InvariantViolation("Graded summands are not orthogonal")

    projections = tuple(tuple(tuple(row) for row in projection_matrix(s.basis, form)) for s in summands)
    return GradedModel(tuple(summands), projections, form)


@dataclass(frozen=True)
class RescaledDecomposition:
    panel: Panel
    filtration: Filtration
    model: GradedModel
    rescaling: Optional[FnVec]
    attempts: int


def decompose_with_rescaling(panel: Panel, seed: int = 0, max_attempts: int = 20, bound: int = 5) -> RescaledDecomposition:
    """Decomposes the panel, moving inside the fibre when the form degenerates.

    On DegenerateRestriction the panel is replaced by rescale_panel(panel, s)
    for seeded random integer combinations s of the panel basis.

    Raises:
        DegenerateRestriction: If no attempt succeeded.
    """
    filtration = compute_filtration(panel)
    try:
        return RescaledDecomposition(panel, filtration, orthogonal_decomposition(panel, filtration), None, 0)
    except DegenerateRestriction as error:
        logger.info("Degenerate on step %s, trying rescaled panels", error.index)
        last_error = error

    rng = random.Random(seed)
    basis = list(panel.space.basis)
    for attempt in range(1, max_attempts + 1):
        coefficients = [rng.randint(-bound, bound) for _ in basis]
        s = mx.linear_combination([mx.as_scalar(c) for c in coefficients], basis, panel.d)
        try:
            moved = rescale_panel(panel, s)
        except UnitVanishes:
            continue
        moved_filtration = compute_filtration(moved)
        try:
            model = orthogonal_decomposition(moved, moved_filtration)
        except DegenerateRestriction as error:
            last_error = error
            continue
        logger.info("Rescaled panel is nondegenerate after %s attempts", attempt)
        return RescaledDecomposition(moved, moved_filtration, model, s, attempt)
    logger.error("No nondegenerate rescaling found in %s attempts", max_attempts)
    raise last_error


def delta_heads_nonzero(model: GradedModel) -> list[bool]:
    """Whether the H⁰ component of every delta function is nonzero."""
    d = model.d
    return [not mx.is_zero(model.component(tuple(mx.ONE if i == a else mx.ZERO for i in range(d)), 0)) for a in range(d)]
