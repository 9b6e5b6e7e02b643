"""
The multiplicative filtration of a panel and the reduction Z -> Z'.

H̃₋₁ = H̃ and H̃₋(i+1) is spanned by products of panel functions with
H̃₋ᵢ. Since the panel contains the constants this is the image of the i-th
symmetric power. The filtration stabilizes after ℓ steps at a unital
subalgebra of Q^Z, which is spanned by the indicators of the blocks of Z'.
"""
import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from fibre_invariants.configuration.config_model import Configuration, FnVec, Panel, mult, rescale_panel
from fibre_invariants.helpers.errors import DegenerateRestriction, InvariantViolation
from fibre_invariants.linalg import matrices as mx
from fibre_invariants.linalg.subspace import Subspace

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Filtration:
    """The steps H̃₋₁ ⊂ ... ⊂ H̃₋ℓ with the Hilbert vector (h⁰, ..., h^ℓ)."""

    steps: tuple[Subspace, ...]
    hilbert_vector: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.steps)

    @property
    def d(self) -> int:
        return self.steps[0].ambient_dim

    @property
    def stable(self) -> Subspace:
        return self.steps[-1]

    def step(self, i: int) -> Subspace:
        """H̃₋ᵢ for any i >= 0; constant from ℓ on and zero for i = 0."""
        if i <= 0:
            return Subspace.zero(self.d)
        return self.steps[min(i, self.length) - 1]

    def dims(self) -> tuple[int, ...]:
        return tuple(s.dim for s in self.steps)


def product_span(a: Subspace, b: Subspace) -> Subspace:
    return Subspace.span([mult(f, g) for f in a.basis for g in b.basis], a.ambient_dim)


def compute_filtration(panel: Panel) -> Filtration:
    """Iterates H̃₋(i+1) = H̃₋ᵢ + H̃·H̃₋ᵢ until the dimension stops growing."""
    steps = [panel.space]
    while True:
        following = steps[-1] + product_span(panel.space, steps[-1])
        if following.dim == steps[-1].dim:
            break
        steps.append(following)
    dims = [s.dim for s in steps]
    hilbert = [dims[0]] + [b - a for a, b in zip(dims, dims[1:])] + [panel.d - dims[-1]]
    logger.debug("Filtration dims %s, hilbert vector %s", dims, hilbert)
    return Filtration(tuple(steps), tuple(hilbert))


def monomial_span_dimension(panel: Panel, degree: int) -> int:
    """Rank of all monomials of degree <= `degree` in a panel basis, evaluated on Z.

    Brute force counterpart of `compute_filtration`, enumerating the monomials.
    """
    basis = panel.ordered_basis()
    values = []
    for k in range(degree + 1):
        for combination in itertools.combinations_with_replacement(range(len(basis)), k):
            f = panel.config.ones()
            for index in combination:
                f = mult(f, basis[index])
            values.append(list(f))
    return mx.rank(values)


@dataclass(frozen=True)
class Reduction:
    """Blocks of points not separated by H̃₋ℓ, ordered by least point index."""

    blocks: tuple[tuple[int, ...], ...]

    @property
    def d_prime(self) -> int:
        return len(self.blocks)

    def block_of(self) -> list[int]:
        """Block index of every point of Z."""
        owner = {}
        for b, block in enumerate(self.blocks):
            for point in block:
                owner[point] = b
        return [owner[i] for i in range(len(owner))]

    def labels(self, config: Configuration) -> list[list[str]]:
        return [[config.labels[i] for i in block] for block in self.blocks]

    def push(self, f: Sequence[Fraction]) -> FnVec:
        """Values of a block constant function on the blocks."""
        return tuple(f[block[0]] for block in self.blocks)

    def pull(self, f: Sequence[Fraction]) -> FnVec:
        """Block constant function on Z with the given block values."""
        return tuple(f[b] for b in self.block_of())


def reduce(panel: Panel, filtration: Filtration) -> Reduction:
    """Level sets of the joint evaluation of a basis of H̃₋ℓ."""
    basis = filtration.stable.basis
    groups: dict[tuple, list[int]] = {}
    for i in range(panel.d):
        groups.setdefault(tuple(b[i] for b in basis), []).append(i)
    blocks = tuple(sorted((tuple(g) for g in groups.values()), key=lambda g: g[0]))
    if len(blocks) != filtration.stable.dim:
        logger.error("Found %s blocks for a stable step of dimension %s", len(blocks), filtration.stable.dim)
        raise InvariantViolation("Stable filtration step is not spanned by block indicators")
    return Reduction(blocks)


def reduced_panel(panel: Panel, reduction: Reduction) -> Panel:
    """The panel pushed down to Z'.

    Points of Z' are labeled by the first label of their block and carry the
    sum of the trace weights of the block.

    Raises:
        DegenerateRestriction: If a block has total weight 0, i.e. the trace
            form degenerates on the stable step.
    """
    config = panel.config
    weights = [sum((config.trace_weights[i] for i in block), mx.ZERO) for block in reduction.blocks]
    if any(w == 0 for w in weights):
        logger.error("A block of Z' has total trace weight 0")
        raise DegenerateRestriction(len(reduction.blocks))
    coords = None
    if config.coords is not None:
        coords = tuple(config.coords[block[0]] for block in reduction.blocks)
    reduced = Configuration(tuple(config.labels[block[0]] for block in reduction.blocks), coords, tuple(weights))
    rows = [reduction.push(f) for f in panel.space.basis]
    return Panel(reduced, Subspace.span(rows, reduced.d))


def scale_subspace(s: Subspace, factor: Sequence[Fraction]) -> Subspace:
    return Subspace.span([mult(v, factor) for v in s.basis], s.ambient_dim)


def rescaling_law_check(panel: Panel, s: Sequence[Fraction], i: Optional[int] = None) -> bool:
    """Checks H̃₋ᵢ(rescaled) = (1+s)^(-i) H̃₋ᵢ and that the stable step is unchanged.

    Args:
        panel: The original panel.
        s: Panel function with 1 + s nowhere zero.
        i: Step to check; all steps up to the longer length when None.
    """
    s = mx.vector(s)
    original = compute_filtration(panel)
    rescaled = compute_filtration(rescale_panel(panel, s))
    inverse_unit = tuple(1 / (1 + x) for x in s)
    indices = [i] if i is not None else range(1, max(original.length, rescaled.length) + 1)
    for index in indices:
        expected = scale_subspace(original.step(index), tuple(u ** index for u in inverse_unit))
        if rescaled.step(index) != expected:
            logger.warning("Rescaling law fails on step %s", index)
            return False
    if rescaled.stable != original.stable:
        logger.warning("Rescaling changed the stable step")
        return False
    return True
