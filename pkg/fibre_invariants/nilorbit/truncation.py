"""
Truncated partition of D⁻(t) on the whole function ring.

Every D⁻ chain starts on its highest level p_i with a vector f_i and falls to
its head. Removing the boxes of degree 0 (one for each chain reaching H⁰,
r+1 in total) gives the truncated partition λ̂ that governs the adjoint
coordinates and the scroll through Z.
"""
import logging
from dataclasses import dataclass
from typing import Optional, Sequence

from fibre_invariants.filtration.decomposition import GradedModel
from fibre_invariants.helpers.errors import DegreeGap, InvariantViolation, NotInPanel
from fibre_invariants.lie.triangular import triangular
from fibre_invariants.linalg import matrices as mx
from fibre_invariants.linalg.jordan import chain_partition, graded_chains
from fibre_invariants.linalg.matrices import Vector
from fibre_invariants.nilorbit.graded_jordan import GradedJordan
from fibre_invariants.springer.partitions import Partition

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TruncatedRow:
    start: Vector
    start_level: int
    length: int
    truncated_length: int


@dataclass(frozen=True)
class Truncation:
    """λ of D⁻(t) on Q^d and its truncation.

    Attributes:
        partition: λ, all chain lengths.
        truncated: λ̂, nonzero truncated lengths.
        rows: One row per nonzero part of λ̂, ordered like λ̂.
        s: Number of parts of λ.
        s_prime: Number of parts of λ̂.
        m1_identity: Whether m₁(λ̂) = μ′_(ℓ-1)1 + μ′_(ℓ-2)0; None when ℓ < 3 or no μ′ given.
    """

    partition: Partition
    truncated: Partition
    rows: tuple[TruncatedRow, ...]
    s: int
    s_prime: int
    m1_identity: Optional[bool] = None


def truncate(t: Sequence, model: GradedModel, minus: Optional[GradedJordan] = None, mu00: Optional[int] = None) -> Truncation:
    """Chains of D⁻(t) on the ambient model with the degree 0 boxes removed.

    Args:
        t: Panel function on Z.
        model: Ambient graded model with summands H⁰, ..., H^ℓ.
        minus: μ′ data of the reduced model, used for the m₁ report.
        mu00: μ₀₀ of the reduced model; when given s′ = s - μ₀₀ is checked.

    Raises:
        NotInPanel: If t is not a panel function.
        DegreeGap: If a chain's levels are not consecutive.
        InvariantViolation: If |λ̂| != d - r - 1 or s′ != s - μ₀₀.
    """
    t = mx.vector(t)
    if not model.summand(0).contains(t):
        raise NotInPanel("t has to lie in the panel H̃ = H⁰")
    n = triangular(t, model).part(-1)
    chains = graded_chains(n, model.summands, -1)

    rows = []
    for index, chain in enumerate(chains):
        expected = tuple(range(chain.start_level, chain.head_level - 1, -1))
        if chain.levels != expected or not all(model.summand(p).contains(v) for p, v in zip(chain.levels, chain.vectors)):
            logger.error("Chain %s has levels %s", index, chain.levels)
            raise DegreeGap(index, chain.levels)
        truncated = chain.length - (1 if chain.head_level == 0 else 0)
        rows.append(TruncatedRow(chain.vectors[0], chain.start_level, chain.length, truncated))
    rows.sort(key=lambda row: (-row.truncated_length, -row.start_level))
    kept = tuple(row for row in rows if row.truncated_length > 0)
    truncated = tuple(row.truncated_length for row in kept)

    r = model.summand(0).dim - 1
    if sum(truncated) != model.d - r - 1:
        logger.error("Truncated partition %s has weight %s, expected %s", truncated, sum(truncated), model.d - r - 1)
        raise InvariantViolation(f"|λ̂| = {sum(truncated)} differs from d - r - 1 = {model.d - r - 1}")
    s = len(chains)
    if mu00 is not None and len(kept) != s - mu00:
        raise InvariantViolation(f"s′ = {len(kept)} differs from s - μ₀₀ = {s - mu00}")

    m1_identity = None
    length = model.length
    if minus is not None and length >= 3:
        m1 = sum(1 for part in truncated if part == 1)
        m1_identity = m1 == minus.mu(length - 1, 1) + minus.mu(length - 2, 0)
        logger.debug("m1(λ̂) = %s, identity holds: %s", m1, m1_identity)
    return Truncation(chain_partition(chains), truncated, kept, s, len(kept), m1_identity)
