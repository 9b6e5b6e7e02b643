"""
Jordan data of nilpotent operators.

`nilpotent_partition` reads the Jordan type off the rank sequence of the
powers. `graded_chains` builds a Jordan basis adapted to a grading for an
operator of degree +1 or -1, which is what the graded summands of a fibre
need.
"""
import logging
from dataclasses import dataclass
from typing import Sequence

from fibre_invariants.helpers.errors import InvariantViolation, NotNilpotent
from fibre_invariants.linalg import matrices as mx
from fibre_invariants.linalg.matrices import Mat, Vector
from fibre_invariants.linalg.subspace import Subspace, image, preimage_in, restricted_kernel
from fibre_invariants.springer.partitions import Partition, conjugate, normalize

logger = logging.getLogger(__name__)


def rank_sequence(n: Mat) -> list[int]:
    """Ranks of n^0, n^1, ..., n^dim."""
    dim = len(n)
    ranks = [dim]
    power = mx.identity(dim)
    for _ in range(dim):
        power = mx.mat_mul(n, power)
        ranks.append(mx.rank(power))
        if ranks[-1] == 0:
            break
    return ranks


def nilpotent_partition(n: Mat) -> Partition:
    """Jordan type of a nilpotent operator.

    The number of blocks of size >= k is r_{k-1} - r_k with r_k = rank(n^k),
    so the Jordan type is the conjugate of the rank drops.

    Raises:
        NotNilpotent: If n^dim is not zero.
    """
    ranks = rank_sequence(n)
    if ranks[-1] != 0:
        logger.error("Operator of size %s is not nilpotent, rank sequence %s", len(n), ranks)
        raise NotNilpotent(f"Operator is not nilpotent, rank sequence {ranks}")
    drops = normalize(a - b for a, b in zip(ranks, ranks[1:]))
    return conjugate(drops)


@dataclass(frozen=True)
class Chain:
    """A Jordan chain v, Nv, ..., N^q v with N^{q+1} v = 0.

    `vectors[0]` starts the chain and `vectors[-1]` is its head, which lies in
    the kernel of N. The vector `vectors[i]` sits on level
    `start_level + i * step`.
    """

    vectors: tuple[Vector, ...]
    start_level: int
    step: int

    @property
    def length(self) -> int:
        return len(self.vectors)

    @property
    def head_level(self) -> int:
        return self.start_level + (self.length - 1) * self.step

    @property
    def levels(self) -> tuple[int, ...]:
        return tuple(self.start_level + i * self.step for i in range(self.length))

    def at_level(self, level: int) -> Vector:
        return self.vectors[(level - self.start_level) * self.step]


def graded_chains(n: Mat, levels: Sequence[Subspace], step: int) -> list[Chain]:
    """Jordan basis of a graded nilpotent operator.

    For every chain size q+1 and head level p the heads are a deterministic
    complement of (ker n ∩ n^{q+1}(.) ∩ level p) inside
    (ker n ∩ n^q(.) ∩ level p); each head is lifted to a start vector on level
    p - q*step by a particular solution.

    Args:
        n: The operator, mapping level p into level p + step.
        levels: Summands whose direct sum is the space n acts on.
        step: +1 or -1.

    Returns:
        Chains ordered by decreasing length, then by head level.
    """
    if step not in (1, -1):
        raise ValueError("Step has to be +1 or -1")
    count = len(levels)
    ambient = levels[0].ambient_dim if levels else 0

    def source(p: int, q: int) -> int:
        return p - q * step

    images = [list(levels)]
    for q in range(1, count):
        previous = images[-1]
        row = []
        for p in range(count):
            src = p - step
            row.append(image(n, previous[src]) if 0 <= src < count else Subspace.zero(ambient))
        images.append(row)
    kernels = [restricted_kernel(n, level) for level in levels]
    filtered = [[kernels[p].intersect(images[q][p]) for p in range(count)] for q in range(count)]
    filtered.append([Subspace.zero(ambient)] * count)

    powers = [mx.identity(ambient)]
    for _ in range(1, count):
        powers.append(mx.mat_mul(n, powers[-1]))

    chains = []
    for q in range(count - 1, -1, -1):
        for p in range(count):
            heads = filtered[q + 1][p].complement_in(filtered[q][p])
            for head in heads:
                start = preimage_in(powers[q], head, levels[source(p, q)])
                if start is None:
                    logger.error("Head on level %s has no preimage under power %s", p, q)
                    raise InvariantViolation(f"Head on level {p} has no preimage under power {q}")
                vectors = [start]
                for _ in range(q):
                    vectors.append(mx.mat_vec(n, vectors[-1]))
                chains.append(Chain(tuple(vectors), source(p, q), step))

    total = sum(level.dim for level in levels)
    spanned = Subspace.span([v for chain in chains for v in chain.vectors], ambient)
    if spanned.dim != total or sum(c.length for c in chains) != total:
        logger.error("Graded chains span %s of %s dimensions", spanned.dim, total)
        raise InvariantViolation("Graded Jordan chains do not form a basis")
    return chains


def chain_partition(chains: Sequence[Chain]) -> Partition:
    return normalize(chain.length for chain in chains)
