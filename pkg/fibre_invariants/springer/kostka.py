"""
Kostka-Foulkes polynomials through the charge statistic.

K_λμ(q) = Σ q^charge(T) over the semistandard tableaux T of shape λ and
content μ. Tableaux are lists of rows in English notation; the reading word
reads the rows from the bottom one up, each from left to right.
"""
import itertools
import logging
from collections import Counter
from functools import lru_cache

from sympy import Poly, Symbol

from fibre_invariants.helpers.errors import WeightMismatch
from fibre_invariants.springer.partitions import Partition, dominates, normalize, weight

logger = logging.getLogger(__name__)

Q = Symbol("q")
Tableau = tuple[tuple[int, ...], ...]


def horizontal_strips(inner: Partition, outer_bound: Partition, size: int):
    """Partitions ν ⊇ inner, ν ⊆ outer_bound, with ν/inner a horizontal strip of `size` boxes."""
    rows = len(outer_bound)
    padded = list(inner) + [0] * (rows - len(inner))

    def extend(i: int, remaining: int, built: list):
        if i == rows:
            if remaining == 0:
                yield tuple(built)
            return
        upper = outer_bound[i] if i == 0 else min(outer_bound[i], padded[i - 1])
        for length in range(min(upper, padded[i] + remaining), padded[i] - 1, -1):
            yield from extend(i + 1, remaining - (length - padded[i]), built + [length])

    yield from extend(0, size, [])


def semistandard_tableaux(shape: Partition, content: Partition) -> list[Tableau]:
    """All semistandard tableaux of the shape filled with content[i] letters i+1."""
    results = []

    def fill(letter: int, current: tuple, rows: list):
        if letter > len(content):
            if normalize(current) == shape:
                results.append(tuple(tuple(row) for row in rows))
            return
        for following in horizontal_strips(current, shape, content[letter - 1]):
            grown = [list(row) for row in rows] + [[] for _ in range(len(following) - len(rows))]
            for i, (old, new) in enumerate(zip(list(current) + [0] * len(following), following)):
                grown[i].extend([letter] * (new - old))
            fill(letter + 1, following, grown)

    fill(1, (), [])
    return [tuple(row for row in t if row) for t in results]


def reading_word(tableau: Tableau) -> list[int]:
    return [letter for row in reversed(tableau) for letter in row]


def charge(word: list[int]) -> int:
    """Lascoux-Schützenberger charge of a word with partition content.

    Standard subwords are extracted by scanning leftwards, cyclically, for
    1, 2, ...; the index grows by one whenever the next letter sits to the right.
    """
    positions = list(range(len(word)))
    remaining = dict(zip(positions, word))
    total = 0
    while remaining:
        letters = sorted(set(remaining.values()))
        top = next((k for k, letter in enumerate(letters, start=1) if letter != k), len(letters) + 1) - 1
        cursor = len(word)
        index = 0
        for letter in range(1, top + 1):
            left = [p for p in sorted(remaining, reverse=True) if p < cursor and remaining[p] == letter]
            if left:
                found = left[0]
            else:
                found = max(p for p in remaining if remaining[p] == letter)
                index += 1
            total += index
            del remaining[found]
            cursor = found
    return total


@lru_cache(maxsize=None)
def kostka_foulkes(lam: Partition, mu: Partition) -> Poly:
    """K_λμ(q) as a polynomial with integer coefficients.

    Raises:
        WeightMismatch: If λ and μ are partitions of different integers.
    """
    lam, mu = normalize(lam), normalize(mu)
    if weight(lam) != weight(mu):
        logger.error("Partitions %s and %s have different weights", lam, mu)
        raise WeightMismatch(f"|{lam}| != |{mu}|")
    if not dominates(lam, mu):
        return Poly(0, Q, domain="ZZ")
    counts = Counter(charge(reading_word(t)) for t in semistandard_tableaux(lam, mu))
    return Poly(sum(c * Q ** k for k, c in counts.items()), Q, domain="ZZ")


def kostka_number(lam: Partition, mu: Partition) -> int:
    """Number of semistandard tableaux, counted by brute force over all fillings."""
    lam, mu = normalize(lam), normalize(mu)
    if weight(lam) != weight(mu):
        raise WeightMismatch(f"|{lam}| != |{mu}|")
    letters = [i + 1 for i, m in enumerate(mu) for _ in range(m)]
    count = 0
    for filling in set(itertools.permutations(letters)):
        rows, start = [], 0
        for length in lam:
            rows.append(filling[start:start + length])
            start += length
        rows_ok = all(a <= b for row in rows for a, b in zip(row, row[1:]))
        columns_ok = all(upper[j] < lower[j] for upper, lower in zip(rows, rows[1:]) for j in range(len(lower)))
        count += rows_ok and columns_ok
    return count
