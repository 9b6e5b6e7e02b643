"""
sl2 weight data of a fibre read off graded Jordan chains.

A D⁺ chain of size q+1 starting on level P-q carries the sl2 weights
-q, -q+2, ..., q; shifted by ℓ-1 these give the bigrading H^{p,n} with
p <= n <= p+ℓ-1. Weight spaces and weight filtrations are spanned by chain
vectors, no semisimple element is built.
"""
import logging
from dataclasses import dataclass
from typing import Sequence

from fibre_invariants.filtration.decomposition import GradedModel
from fibre_invariants.helpers.errors import InvariantViolation
from fibre_invariants.lie.triangular import triangular
from fibre_invariants.linalg import matrices as mx
from fibre_invariants.linalg.jordan import Chain
from fibre_invariants.linalg.subspace import Subspace, orth_complement
from fibre_invariants.nilorbit.graded_jordan import GradedJordan, graded_jordan

logger = logging.getLogger(__name__)


def chain_weights(chain: Chain) -> list[int]:
    """sl2 weight of every chain vector; D⁺ chains rise from -q, D⁻ chains fall from q."""
    q = chain.length - 1
    if chain.step == 1:
        return [-q + 2 * i for i in range(chain.length)]
    return [q - 2 * i for i in range(chain.length)]


@dataclass(frozen=True)
class Bigrading:
    """Shifted weight data of a fibre.

    Attributes:
        table: table[p][n] = dim H^{p,n}, n running over 0 .. 2ℓ-2.
        weight_dims: dim V(n) for the shifted weights n.
        weight_spaces: V(n) from the D⁺ chains.
        upper_filtration: Wⁿ = ⊕_{m>=n} V(m) for n = 0 .. 2ℓ-1.
        lower_filtration: W′_n = ⊕_{m<=n} V′(m) from the D⁻ chains, n = -1 .. 2ℓ-2.
    """

    table: tuple[tuple[int, ...], ...]
    weight_dims: tuple[int, ...]
    weight_spaces: tuple[Subspace, ...]
    upper_filtration: tuple[Subspace, ...]
    lower_filtration: tuple[Subspace, ...]


def _shifted(jordan: GradedJordan, length: int) -> list[tuple[int, int, tuple]]:
    """(level, shifted weight, vector) for every chain vector."""
    slots = []
    for chain in jordan.chains:
        for i, (w, v) in enumerate(zip(chain_weights(chain), chain.vectors)):
            slots.append((chain.start_level + i * chain.step, length - 1 + w, v))
    return slots


def bigrading(t: Sequence, model: GradedModel) -> Bigrading:
    """Bigrading table, weight spaces and both weight filtrations.

    Raises:
        InvariantViolation: If a slot leaves p <= n <= p+ℓ-1, if (D⁺)^k does
            not map V(ℓ-1-k) injectively, or if W′_n != (W^{n+1})⊥.
    """
    length = max(model.length, 1)
    width = 2 * length - 1
    plus = graded_jordan(t, model, 1)
    minus = graded_jordan(t, model, -1)
    d = model.d

    table = [[0] * width for _ in range(length)]
    by_weight: list[list] = [[] for _ in range(width)]
    for level, n, v in _shifted(plus, length):
        if not level <= n <= level + length - 1:
            logger.error("Weight %s on level %s out of range", n, level)
            raise InvariantViolation(f"Shifted weight {n} on level {level} outside [p, p+ℓ-1]")
        table[level][n] += 1
        by_weight[n].append(v)
    spaces = tuple(Subspace.span(vectors, d) for vectors in by_weight)

    n_plus = triangular(mx.vector(t), model).part(1)
    for k in range(length):
        source = spaces[length - 1 - k]
        power = mx.mat_pow(n_plus, k)
        images = Subspace.span([mx.mat_vec(power, v) for v in source.basis], d)
        if images.dim != source.dim:
            logger.error("Power %s of D+ loses rank on weight %s", k, length - 1 - k)
            raise InvariantViolation(f"(D⁺)^{k} is not injective on V({length - 1 - k})")

    upper = []
    for n in range(width + 1):
        upper.append(Subspace.span([v for m in range(n, width) for v in by_weight[m]], d))
    lower_slots: list[list] = [[] for _ in range(width)]
    for _, n, v in _shifted(minus, length):
        lower_slots[n].append(v)
    lower = []
    for n in range(-1, width):
        lower.append(Subspace.span([v for m in range(0, n + 1) for v in lower_slots[m]], d))

    for index, n in enumerate(range(-1, width)):
        if lower[index] != orth_complement(upper[n + 1], model.form):
            logger.error("Weight filtrations are not orthogonal at n = %s", n)
            raise InvariantViolation(f"W′_{n} differs from (W^{n + 1})⊥")

    return Bigrading(
        tuple(tuple(row) for row in table),
        tuple(s.dim for s in spaces),
        spaces,
        tuple(upper),
        tuple(lower),
    )
