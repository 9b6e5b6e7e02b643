"""
Graded Jordan data of D⁺(t) and D⁻(t).

For N = D⁺(t) the multiplicity μ_qp counts the Jordan chains of size q+1
whose head (the kernel end) lies in Hᵖ; they form the upper triangular
multiplicity matrix and the graded partitions λ⁽ᵖ⁾ = (1^μ₀ₚ ... (p+1)^μₚₚ).
For N = D⁻(t), μ′_qp counts chains of size ℓ-q with head in Hᵖ; they mirror
the D⁺ data through μ′_qp = μ_(ℓ-1-q)(ℓ-1-q+p).
"""
import logging
from dataclasses import dataclass
from typing import Sequence

from fibre_invariants.filtration.decomposition import GradedModel
from fibre_invariants.helpers.errors import InvariantViolation, NotInPanel
from fibre_invariants.lie.triangular import triangular
from fibre_invariants.linalg import matrices as mx
from fibre_invariants.linalg.jordan import Chain, chain_partition, graded_chains, nilpotent_partition
from fibre_invariants.springer.partitions import Partition, conjugate, normalize

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GradedJordan:
    """Jordan chains of a graded nilpotent part together with their counts.

    Attributes:
        chains: Graded Jordan chains.
        step: +1 for D⁺, -1 for D⁻.
        levels: Number of levels the operator acts on.
        partition: Jordan type λ.
        matrix: μ (step +1, upper triangular) or μ′ (step -1, lower triangular) as nested lists.
    """

    chains: tuple[Chain, ...]
    step: int
    levels: int
    partition: Partition
    matrix: tuple[tuple[int, ...], ...]

    def mu(self, q: int, p: int) -> int:
        if 0 <= q < self.levels and 0 <= p < self.levels:
            return self.matrix[q][p]
        return 0

    def graded_partition(self, p: int) -> Partition:
        """λ⁽ᵖ⁾, sizes of the D⁺ chains with head on level p."""
        return normalize(c.length for c in self.chains if c.head_level == p)

    def graded_partitions(self) -> list[Partition]:
        return [self.graded_partition(p) for p in range(self.levels)]


def _require_panel_element(t: Sequence, model: GradedModel) -> tuple:
    t = mx.vector(t)
    if not model.summand(0).contains(t):
        logger.error("Operator function is not a panel element")
        raise NotInPanel("t has to lie in the panel H̃ = H⁰")
    return t


def plus_matrix(chains: Sequence[Chain], levels: int) -> list[list[int]]:
    matrix = [[0] * levels for _ in range(levels)]
    for chain in chains:
        matrix[chain.length - 1][chain.head_level] += 1
    return matrix


def minus_matrix(chains: Sequence[Chain], levels: int) -> list[list[int]]:
    matrix = [[0] * levels for _ in range(levels)]
    for chain in chains:
        matrix[levels - chain.length][chain.head_level] += 1
    return matrix


def graded_jordan(t: Sequence, model: GradedModel, step: int) -> GradedJordan:
    """Graded Jordan chains of the degree `step` part of multiplication by t.

    The model is the reduced one, so the levels are H⁰, ..., H^(ℓ-1).

    Raises:
        NotInPanel: If t is not a panel element.
        InvariantViolation: If the chain partition differs from the rank sequence partition.
    """
    t = _require_panel_element(t, model)
    levels = max(model.length, 1)
    n = triangular(t, model).part(step)
    chains = graded_chains(n, model.summands[:levels], step)
    partition = chain_partition(chains)
    if partition != nilpotent_partition(n):
        logger.error("Chain partition %s differs from rank partition", partition)
        raise InvariantViolation("Graded Jordan chains disagree with the rank sequence partition")
    build = plus_matrix if step == 1 else minus_matrix
    matrix = tuple(tuple(row) for row in build(chains, levels))
    return GradedJordan(tuple(chains), step, levels, partition, matrix)


def graded_jordan_plus(t: Sequence, model: GradedModel) -> GradedJordan:
    """Graded partition and multiplicity matrix of D⁺(t).

    Raises:
        InvariantViolation: If a graded partition leaves its hᵖ x (p+1)
            rectangle or the Hilbert vector is not recovered from the conjugates.
    """
    result = graded_jordan(t, model, 1)
    hilbert = model.dims()
    for p in range(result.levels):
        lam = result.graded_partition(p)
        if len(lam) > hilbert[p] or (lam and lam[0] > p + 1):
            raise InvariantViolation(f"Graded partition {lam} leaves the {hilbert[p]}x{p + 1} rectangle")
    for p in range(result.levels):
        recovered = 0
        for level in range(p, result.levels):
            conj = conjugate(result.graded_partition(level))
            k = level - p
            recovered += conj[k] if k < len(conj) else 0
        if recovered != hilbert[p]:
            logger.error("Level %s: conjugate count %s, hilbert %s", p, recovered, hilbert[p])
            raise InvariantViolation(f"Conjugate partition identity fails on level {p}")
    return result


def graded_jordan_minus(t: Sequence, model: GradedModel) -> GradedJordan:
    """Multiplicities μ′ of D⁻(t), checked against the reflected D⁺ data.

    Raises:
        InvariantViolation: If μ′_qp != μ_(ℓ-1-q)(ℓ-1-q+p) for some q, p.
    """
    minus = graded_jordan(t, model, -1)
    plus = graded_jordan(t, model, 1)
    check_reflection(plus, minus)
    return minus


def check_reflection(plus: GradedJordan, minus: GradedJordan) -> None:
    last = plus.levels - 1
    for q in range(minus.levels):
        for p in range(minus.levels):
            if minus.mu(q, p) != plus.mu(last - q, last - q + p):
                logger.error("Reflection fails at (%s, %s)", q, p)
                raise InvariantViolation(f"μ′_{q}{p} differs from μ_{last - q}{last - q + p}")
