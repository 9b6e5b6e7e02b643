"""
Configurations Z of d distinct points, their function ring Q^Z and panels.

A function on Z is a tuple of Fractions, one value per point, i.e. its
coordinates in the basis of delta functions. Multiplication is pointwise and
the trace form is q(f, g) = sum_z w_z f(z) g(z); the weights w_z default to 1
and are kept as part of the configuration so that reduced configurations
(blocks of points) carry the block sizes.

A panel is the subspace H̃ of functions containing the constants, which
together with Z encodes a point of the fibre.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from typeguard import typechecked

from fibre_invariants.helpers.errors import (ConfigMismatch, InvalidInstance, PreconditionError, SigmaVanishes,
                                             UnitVanishes)
from fibre_invariants.linalg import matrices as mx
from fibre_invariants.linalg.matrices import Vector
from fibre_invariants.linalg.subspace import BilinearForm, Subspace

logger = logging.getLogger(__name__)

FnVec = Vector


@dataclass(frozen=True)
class Configuration:
    """Labeled distinct points, optionally with rational coordinates.

    Attributes:
        labels: Point labels, pairwise distinct.
        coords: Optional coordinate vector per point, all of the same length and pairwise distinct.
        trace_weights: Nonzero rational weight per point of the trace form.
    """

    labels: tuple[str, ...]
    coords: Optional[tuple[Vector, ...]] = None
    trace_weights: tuple[Fraction, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(str(label) for label in self.labels))
        object.__setattr__(self, "trace_weights", mx.vector(self.trace_weights))
        if self.coords is not None:
            object.__setattr__(self, "coords", tuple(mx.vector(c) for c in self.coords))
        if len(set(self.labels)) != len(self.labels):
            logger.error("Duplicate point labels in %s", self.labels)
            raise InvalidInstance("Point labels have to be distinct")
        if not self.labels:
            raise InvalidInstance("A configuration needs at least one point")
        if self.coords is not None:
            if len(self.coords) != len(self.labels):
                raise InvalidInstance("One coordinate vector per point is required")
            if len({len(c) for c in self.coords}) > 1:
                raise InvalidInstance("Coordinate vectors have different lengths")
            if len(set(self.coords)) != len(self.coords):
                logger.error("Configuration has repeated coordinates")
                raise InvalidInstance("Points of a configuration have to be distinct")
        if not self.trace_weights:
            object.__setattr__(self, "trace_weights", tuple(mx.ONE for _ in self.labels))
        if len(self.trace_weights) != len(self.labels) or any(w == 0 for w in self.trace_weights):
            raise InvalidInstance("Trace weights have to be nonzero, one per point")

    @classmethod
    def unlabeled(cls, d: int, **kwargs) -> "Configuration":
        return cls(tuple(f"z{i + 1}" for i in range(d)), **kwargs)

    @property
    def d(self) -> int:
        return len(self.labels)

    @property
    def form(self) -> BilinearForm:
        return BilinearForm.diagonal(self.trace_weights)

    def ones(self) -> FnVec:
        return tuple(mx.ONE for _ in self.labels)

    def delta(self, index: int) -> FnVec:
        return tuple(mx.ONE if i == index else mx.ZERO for i in range(self.d))


def trace(f: Sequence[Fraction], weights: Optional[Sequence[Fraction]] = None) -> Fraction:
    """Weighted sum of the values; the plain sum when no weights are given."""
    if weights is None:
        return sum(f, mx.ZERO)
    return sum((w * x for w, x in zip(weights, f)), mx.ZERO)


def mult(f: Sequence[Fraction], g: Sequence[Fraction]) -> FnVec:
    if len(f) != len(g):
        logger.error("Functions live on configurations of size %s and %s", len(f), len(g))
        raise ConfigMismatch(f"Functions live on configurations of size {len(f)} and {len(g)}")
    return tuple(x * y for x, y in zip(f, g))


def power(f: Sequence[Fraction], k: int) -> FnVec:
    return tuple(x ** k for x in f)


def multiplication_operator(t: Sequence[Fraction]) -> mx.Mat:
    """Multiplication by t in the delta basis, a diagonal matrix."""
    return mx.diagonal(list(t))


@dataclass(frozen=True)
class Panel:
    config: Configuration
    space: Subspace

    def __post_init__(self):
        if self.space.ambient_dim != self.config.d:
            raise ConfigMismatch("Panel functions do not live on the configuration")
        if not self.space.contains(self.config.ones()):
            logger.error("Panel of dimension %s misses the constants", self.space.dim)
            raise InvalidInstance("A panel has to contain the constant function 1")
        if self.space.dim < 2:
            logger.error("Panel has dimension %s, at least 2 is required", self.space.dim)
            raise InvalidInstance("A panel needs dimension r + 1 >= 2")

    @classmethod
    def from_functions(cls, config: Configuration, functions: Sequence[Sequence[Fraction]]) -> "Panel":
        """Panel spanned by the given functions together with the constants."""
        vectors = [config.ones()] + [mx.vector(f) for f in functions]
        return cls(config, Subspace.span(vectors, config.d))

    @property
    def r(self) -> int:
        return self.space.dim - 1

    @property
    def d(self) -> int:
        return self.config.d

    def ordered_basis(self) -> list[FnVec]:
        """1_Z first, then a deterministic RREF complement."""
        ones = Subspace.span([self.config.ones()], self.d)
        return [self.config.ones()] + ones.complement_in(self.space)

    def contains(self, f: Sequence[Fraction]) -> bool:
        return self.space.contains(f)


@typechecked
def panel_from_pencil(config: Configuration, section_values: list, sigma_prime_row: int) -> Panel:
    """Panel of the quotients section_j / sigma' restricted to the points.

    Args:
        config: The configuration Z.
        section_values: One row per section, one value per point of Z.
        sigma_prime_row: Index of the row of the designated section sigma'.

    Raises:
        InvalidInstance: If sigma_prime_row is not the index of a section.
        ConfigMismatch: If a section has the wrong number of values.
        SigmaVanishes: If sigma' vanishes at a point of Z.
    """
    rows = mx.matrix(section_values)
    if not 0 <= sigma_prime_row < len(rows):
        logger.error("Designated section %s out of %s sections", sigma_prime_row, len(rows))
        raise InvalidInstance(f"sigma_prime {sigma_prime_row} is not one of the {len(rows)} sections")
    if any(len(row) != config.d for row in rows):
        logger.error("Section values do not match the %s points", config.d)
        raise ConfigMismatch("Section values do not match the number of points")
    sigma = rows[sigma_prime_row]
    for label, value in zip(config.labels, sigma):
        if value == 0:
            logger.error("Designated section vanishes at %s", label)
            raise SigmaVanishes(label)
    quotients = [tuple(x / s for x, s in zip(row, sigma)) for row in rows]
    return Panel(config, Subspace.span(quotients, config.d))


def rescale_panel(panel: Panel, s: Sequence[Fraction]) -> Panel:
    """The panel {h / (1 + s) : h in panel} of the rescaled extension class.

    Raises:
        PreconditionError: If s is not a panel function.
        UnitVanishes: If 1 + s vanishes at a point.
    """
    s = mx.vector(s)
    if not panel.contains(s):
        logger.error("Rescaling function is not a panel element")
        raise PreconditionError("Rescaling function has to lie in the panel")
    unit = tuple(1 + x for x in s)
    for label, value in zip(panel.config.labels, unit):
        if value == 0:
            logger.error("1 + s vanishes at %s", label)
            raise UnitVanishes(label)
    rows = [tuple(x / u for x, u in zip(h, unit)) for h in panel.space.basis]
    return Panel(panel.config, Subspace.span(rows, panel.d))


def inverse_rescaling(s: Sequence[Fraction]) -> FnVec:
    """The function s' with (1 + s')(1 + s) = 1, which undoes rescale_panel."""
    return tuple(1 / (1 + x) - 1 for x in s)


def kappa_embed(panel: Panel) -> list[Vector]:
    """Projective coordinates (1 : b_1(z) : ... : b_r(z)) of every point."""
    basis = panel.ordered_basis()
    return [tuple(b[i] for b in basis) for i in range(panel.d)]
