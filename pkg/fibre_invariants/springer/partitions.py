"""
Partitions as weakly decreasing tuples of positive integers.

The empty tuple is the partition of 0.
"""
from collections import Counter
from functools import lru_cache
from typing import Iterable

from typeguard import typechecked

Partition = tuple[int, ...]


def normalize(parts: Iterable[int]) -> Partition:
    """Drops zero parts and sorts decreasingly."""
    return tuple(sorted((int(p) for p in parts if p), reverse=True))


def is_partition(parts: tuple) -> bool:
    return all(isinstance(p, int) and p > 0 for p in parts) and all(
        a >= b for a, b in zip(parts, parts[1:])
    )


def weight(mu: Partition) -> int:
    return sum(mu)


def conjugate(mu: Partition) -> Partition:
    if not mu:
        return ()
    return tuple(sum(1 for p in mu if p >= k) for k in range(1, mu[0] + 1))


def multiplicities(mu: Partition) -> dict[int, int]:
    """Part size to number of parts of that size."""
    return dict(Counter(mu))


def from_multiplicities(mult: dict[int, int]) -> Partition:
    return normalize(size for size, count in mult.items() for _ in range(count))


def n_statistic(mu: Partition) -> int:
    """n(mu) = sum (i-1) mu_i, the Springer fibre dimension."""
    return sum(i * p for i, p in enumerate(mu))


@typechecked
def dominates(lam: Partition, mu: Partition) -> bool:
    """lam dominates mu: equal weights and every partial sum of lam is >= that of mu."""
    if weight(lam) != weight(mu):
        return False
    total_lam = total_mu = 0
    for k in range(max(len(lam), len(mu))):
        total_lam += lam[k] if k < len(lam) else 0
        total_mu += mu[k] if k < len(mu) else 0
        if total_lam < total_mu:
            return False
    return True


@lru_cache(maxsize=None)
def partitions_of(n: int, largest: int = -1) -> tuple[Partition, ...]:
    """All partitions of n in reverse lexicographic order."""
    if largest < 0:
        largest = n
    if n == 0:
        return ((),)
    result = []
    for first in range(min(n, largest), 0, -1):
        for rest in partitions_of(n - first, first):
            result.append((first,) + rest)
    return tuple(result)


def to_str(mu: Partition) -> str:
    """Exponential notation, e.g. (3, 2, 2, 1) -> '3 2^2 1'."""
    counts = Counter(mu)
    return " ".join(f"{size}^{counts[size]}" if counts[size] > 1 else f"{size}" for size in sorted(counts, reverse=True))


def forget_grading(mult_matrix) -> Partition:
    """Forgetful map from a multiplicity matrix to a partition.

    M_s = Σ_p μ_sp counts the parts of size s+1, giving (1^M₀ 2^M₁ ... ℓ^M_(ℓ-1)).
    """
    return from_multiplicities({s + 1: sum(row) for s, row in enumerate(mult_matrix) if sum(row)})
