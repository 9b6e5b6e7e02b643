"""
Canonical subspaces of Q^n and symmetric bilinear forms.

A Subspace stores its basis as the nonzero rows of a reduced row-echelon
form, so two subspaces are equal exactly when their stored rows are equal.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from fibre_invariants.helpers.errors import DimensionMismatch
from fibre_invariants.linalg import matrices as mx
from fibre_invariants.linalg.matrices import Mat, Vector

logger = logging.getLogger(__name__)


def _check_ambient(a: int, b: int) -> None:
    if a != b:
        logger.error("Ambient dimensions differ: %s != %s", a, b)
        raise DimensionMismatch(f"Ambient dimensions differ: {a} != {b}")


@dataclass(frozen=True)
class Subspace:
    ambient_dim: int
    basis: tuple[Vector, ...]
    pivots: tuple[int, ...]

    @classmethod
    def span(cls, vectors: Iterable[Sequence[Fraction]], ambient_dim: int) -> "Subspace":
        rows = [tuple(v) for v in vectors]
        for row in rows:
            _check_ambient(len(row), ambient_dim)
        reduced, pivots = mx.rref([list(r) for r in rows])
        return cls(ambient_dim, tuple(tuple(r) for r in reduced), pivots)

    @classmethod
    def zero(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, (), ())

    @classmethod
    def full(cls, ambient_dim: int) -> "Subspace":
        return cls.span(mx.identity(ambient_dim), ambient_dim)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __len__(self) -> int:
        return self.dim

    def contains(self, v: Sequence[Fraction]) -> bool:
        _check_ambient(len(v), self.ambient_dim)
        residual = list(v)
        for row, p in zip(self.basis, self.pivots):
            c = residual[p]
            if c:
                residual = [x - c * y for x, y in zip(residual, row)]
        return mx.is_zero(residual)

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(v) for v in other.basis)

    def coordinates(self, v: Sequence[Fraction]) -> Vector:
        """Coefficients of v in the stored basis; raises ValueError when v is outside."""
        if not self.contains(v):
            raise ValueError("Vector does not lie in the subspace")
        return tuple(v[p] for p in self.pivots)

    def __add__(self, other: "Subspace") -> "Subspace":
        _check_ambient(self.ambient_dim, other.ambient_dim)
        return Subspace.span(self.basis + other.basis, self.ambient_dim)

    def constraints(self) -> list[Vector]:
        """Rows c with c.v = 0 exactly for v in the subspace."""
        return mx.nullspace([list(b) for b in self.basis], self.ambient_dim)

    def intersect(self, other: "Subspace") -> "Subspace":
        """Intersection computed as the kernel of both stacked constraint systems."""
        _check_ambient(self.ambient_dim, other.ambient_dim)
        stacked = [list(c) for c in self.constraints() + other.constraints()]
        if not stacked:
            return Subspace.full(self.ambient_dim)
        return Subspace.span(mx.nullspace(stacked, self.ambient_dim), self.ambient_dim)

    def complement_in(self, larger: "Subspace") -> list[Vector]:
        """Deterministic basis vectors of `larger` completing this subspace.

        Vectors are taken from the stored basis of `larger` in order and kept
        whenever they are independent of what was collected so far.
        """
        chosen = []
        current = self
        for v in larger.basis:
            if current.dim == larger.dim:
                break
            if not current.contains(v):
                chosen.append(v)
                current = Subspace.span(current.basis + (v,), self.ambient_dim)
        return chosen


def image(op: Mat, s: Subspace) -> Subspace:
    n_rows, n_cols = mx.shape(op)
    _check_ambient(n_cols, s.ambient_dim)
    return Subspace.span([mx.mat_vec(op, v) for v in s.basis], n_rows)


def kernel(op: Mat, n_cols: Optional[int] = None) -> Subspace:
    width = mx.shape(op)[1] if op else n_cols
    return Subspace.span(mx.nullspace(op, width), width)


def restricted_kernel(op: Mat, s: Subspace) -> Subspace:
    """{v in s : op v = 0}."""
    images = [mx.mat_vec(op, v) for v in s.basis]
    if not images:
        return Subspace.zero(s.ambient_dim)
    coefficient_kernel = mx.nullspace(mx.from_columns(images, len(images[0])), len(images))
    vectors = [mx.linear_combination(c, s.basis, s.ambient_dim) for c in coefficient_kernel]
    return Subspace.span(vectors, s.ambient_dim)


def preimage_in(op: Mat, target: Sequence[Fraction], s: Subspace) -> Optional[Vector]:
    """Some v in s with op v = target, or None."""
    images = [mx.mat_vec(op, v) for v in s.basis]
    coefficients = mx.solve_in_span(images, target)
    if coefficients is None:
        return None
    return mx.linear_combination(coefficients, s.basis, s.ambient_dim)


@dataclass(frozen=True)
class BilinearForm:
    """Symmetric bilinear form given by its Gram matrix in the standard basis."""

    gram: tuple[Vector, ...]

    @classmethod
    def from_matrix(cls, gram: Mat) -> "BilinearForm":
        rows = tuple(tuple(r) for r in gram)
        if any(rows[i][j] != rows[j][i] for i in range(len(rows)) for j in range(len(rows))):
            raise ValueError("Gram matrix is not symmetric")
        return cls(rows)

    @classmethod
    def diagonal(cls, weights: Sequence[Fraction]) -> "BilinearForm":
        return cls(tuple(tuple(r) for r in mx.diagonal(list(weights))))

    @property
    def dim(self) -> int:
        return len(self.gram)

    def __call__(self, u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
        return mx.dot(u, mx.mat_vec([list(r) for r in self.gram], v))

    def lower(self, v: Sequence[Fraction]) -> Vector:
        """The covector q(v, .)."""
        return mx.mat_vec([list(r) for r in self.gram], v)

    def gram_of(self, vectors: Sequence[Sequence[Fraction]]) -> Mat:
        lowered = [self.lower(v) for v in vectors]
        return [[mx.dot(u, w) for w in lowered] for u in vectors]

    def is_nondegenerate_on(self, s: Subspace) -> bool:
        return mx.rank(self.gram_of(s.basis)) == s.dim


def orth_complement(s: Subspace, q: BilinearForm) -> Subspace:
    """{w : q(w, v) = 0 for every v in s}."""
    _check_ambient(s.ambient_dim, q.dim)
    if s.dim == 0:
        return Subspace.full(q.dim)
    return kernel([list(q.lower(v)) for v in s.basis], q.dim)


class EchelonBasis:
    """Row-echelon basis grown one vector at a time.

    Rows are primitive integer vectors on distinct pivots. A new vector is
    scaled to a primitive integer vector and reduced fraction free against
    the rows in increasing pivot order; it is kept when a remainder survives.
    """

    def __init__(self, length: int):
        self.length = length
        self._rows: dict[int, list[int]] = {}
        self.vectors: list = []

    @property
    def dim(self) -> int:
        return len(self._rows)

    def reduce(self, v: Sequence[Fraction]) -> list[int]:
        residual = mx.primitive_vector(v)
        for p in sorted(self._rows):
            c = residual[p]
            if c:
                row = self._rows[p]
                lead = row[p]
                residual = mx.primitive_vector([lead * x - c * y for x, y in zip(residual, row)])
        return residual

    def add(self, v: Sequence[Fraction], payload=None) -> bool:
        """Adds v when it is independent; `payload` is stored alongside in `vectors`."""
        residual = self.reduce(v)
        pivot = next((i for i, x in enumerate(residual) if x != 0), None)
        if pivot is None:
            return False
        self._rows[pivot] = residual
        self.vectors.append(payload if payload is not None else tuple(v))
        return True


class ModularEchelonBasis:
    """EchelonBasis over the prime field of `modulus`, rows with a leading 1.

    Integer vectors independent here are independent over Q.
    """

    def __init__(self, length: int, modulus: int):
        self.length = length
        self.modulus = modulus
        self._rows: dict[int, list[int]] = {}

    @property
    def dim(self) -> int:
        return len(self._rows)

    def add(self, v: Sequence[int]) -> bool:
        p = self.modulus
        residual = [x % p for x in v]
        for pivot in sorted(self._rows):
            c = residual[pivot]
            if c:
                residual = [(x - c * y) % p for x, y in zip(residual, self._rows[pivot])]
        lead_at = next((i for i, x in enumerate(residual) if x), None)
        if lead_at is None:
            return False
        scale = pow(residual[lead_at], -1, p)
        self._rows[lead_at] = [x * scale % p for x in residual]
        return True
