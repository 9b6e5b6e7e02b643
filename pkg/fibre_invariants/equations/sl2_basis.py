"""
sl2-adapted basis of the functions on the reduced configuration Z′.

Every D⁺(t) chain of size q+1 with head on level p starts with a vector
y ∈ H^(p-q). Replacing the powers of D⁺(t) by multiplication with t gives the
elements t^m·y, 0 <= m <= q, of degree p-q+m. They form a basis of Q^Z′
whose elements of degree <= p span H̃₋(p+1).

The chain starts on level 0 span H̃ and serve as homogeneous coordinates
Y_p_s; every other start y ∈ H^k is lifted to a homogeneous polynomial of
degree k+1 in them with the same values on Z′.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from sympy.polys.rings import PolyElement

from fibre_invariants.configuration.config_model import FnVec, mult, power
from fibre_invariants.equations import polynomials as pl
from fibre_invariants.filtration.decomposition import GradedModel
from fibre_invariants.helpers.errors import InvariantViolation, NonConstantRequired
from fibre_invariants.helpers.helpers import format_rational
from fibre_invariants.linalg import matrices as mx
from fibre_invariants.linalg.subspace import Subspace
from fibre_invariants.nilorbit.graded_jordan import GradedJordan, graded_jordan_plus

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Sl2Generator:
    """Start y⁽ˢ⁾_qp of a D⁺ chain and its lifting."""

    q: int
    p: int
    s: int
    vector: FnVec
    lifting: PolyElement

    @property
    def level(self) -> int:
        return self.p - self.q


@dataclass(frozen=True)
class Sl2Element:
    """t^m·y⁽ˢ⁾_qp."""

    generator: int
    m: int
    vector: FnVec
    degree: int


@dataclass(frozen=True)
class Sl2Basis:
    """sl2-adapted basis together with the coordinates used by the relations.

    Attributes:
        t: The operator function on Z′.
        jordan: Graded Jordan data of D⁺(t).
        generators: Chain starts with their liftings.
        elements: The basis elements t^m·y.
        variables: Names of the coordinates, one per chain start on level 0.
        labels: Point labels of Z′.
        points: Values of the coordinates at every point.
        t_alpha: Linear form with the value 1 at every point.
        t_tilde: Linear form with the values of t.
    """

    t: FnVec
    jordan: GradedJordan
    generators: tuple[Sl2Generator, ...]
    elements: tuple[Sl2Element, ...]
    variables: tuple[str, ...]
    labels: tuple[str, ...]
    points: tuple[tuple[Fraction, ...], ...]
    t_alpha: PolyElement
    t_tilde: PolyElement

    @property
    def length(self) -> int:
        return self.jordan.levels

    @property
    def gens(self) -> tuple[PolyElement, ...]:
        return tuple(self.t_alpha.ring.gens)

    def generators_of(self, q: int, p: int) -> list[Sl2Generator]:
        return [g for g in self.generators if g.q == q and g.p == p]

    def expand(self, f: Sequence[Fraction], max_degree: int) -> Optional[list[tuple[Sl2Element, Fraction]]]:
        """Coefficients of f in the elements of degree <= max_degree, None if f is not in their span."""
        chosen = [e for e in self.elements if e.degree <= max_degree]
        coefficients = mx.solve_in_span([e.vector for e in chosen], mx.vector(f))
        if coefficients is None:
            return None
        return [(e, c) for e, c in zip(chosen, coefficients) if c != 0]

    def lift(self, element: Sl2Element) -> PolyElement:
        """T̃^m·P of degree element.degree + 1."""
        return self.t_tilde ** element.m * self.generators[element.generator].lifting

    def lift_expansion(self, expansion: Sequence[tuple[Sl2Element, Fraction]], degree: Optional[int] = None) -> PolyElement:
        """Sum of the liftings, padded with powers of T_α to `degree` when given."""
        result = self.t_alpha.ring.zero
        for element, c in expansion:
            term = pl.to_qq(c) * self.lift(element)
            if degree is not None:
                term *= self.t_alpha ** (degree - element.degree - 1)
            result += term
        return result

    def to_dict(self) -> dict:
        return {
            "variables": list(self.variables),
            "elements": [
                {"q": self.generators[e.generator].q, "p": self.generators[e.generator].p,
                 "s": self.generators[e.generator].s, "m": e.m, "degree": e.degree,
                 "values": [format_rational(x) for x in e.vector]}
                for e in self.elements
            ],
            "liftings": [
                {"q": g.q, "p": g.p, "s": g.s, **pl.poly_to_dict(g.lifting)} for g in self.generators
            ],
        }


def lift_function(f: Sequence[Fraction], degree: int, gens: Sequence[PolyElement], points: Sequence[Sequence[Fraction]]) -> Optional[PolyElement]:
    """A homogeneous polynomial of the given degree taking the values f at the points."""
    exponents = pl.homogeneous_monomials(len(gens), degree)
    values = [[_monomial_value(point, exps) for exps in exponents] for point in points]
    coefficients = mx.solve(values, mx.vector(f))
    if coefficients is None:
        return None
    return pl.combination(gens, coefficients, exponents)


def _monomial_value(point: Sequence[Fraction], exps: Sequence[int]) -> Fraction:
    value = mx.ONE
    for x, e in zip(point, exps):
        if e:
            value *= x ** e
    return value


def sl2_basis(t: Sequence, model: GradedModel, labels: Sequence[str]) -> Sl2Basis:
    """sl2-adapted basis of Q^Z′ for a non-constant panel function t.

    Args:
        t: Panel function on Z′.
        model: Graded model of the reduced panel; its stable step is Q^Z′.
        labels: Point labels of Z′.

    Raises:
        NotInPanel: If t is not a panel function.
        NonConstantRequired: If t is constant.
        InvariantViolation: If the elements are not a basis adapted to the filtration.
    """
    t = mx.vector(t)
    d = model.d
    if Subspace.span([tuple(mx.ONE for _ in range(d))], d).contains(t):
        logger.error("sl2 basis requested for a constant function")
        raise NonConstantRequired("t has to be a non-constant panel function")
    jordan = graded_jordan_plus(t, model)

    counters: dict = {}
    starts = []
    for chain in jordan.chains:
        q, p = chain.length - 1, chain.head_level
        s = counters.get((q, p), 0)
        counters[(q, p)] = s + 1
        starts.append((q, p, s, chain.vectors[0]))
    starts.sort(key=lambda item: (item[1] - item[0], item[1], item[2]))

    coordinates = [item for item in starts if item[0] == item[1]]
    if len(coordinates) != model.summand(0).dim:
        logger.error("%s chain starts on level 0, panel dimension %s", len(coordinates), model.summand(0).dim)
        raise InvariantViolation("Chain starts on level 0 do not form a basis of the panel")
    variables = tuple(f"Y_{p}_{s}" for _, p, s, _ in coordinates)
    _, gens = pl.polynomial_ring(variables)
    points = tuple(tuple(y[k] for _, _, _, y in coordinates) for k in range(d))

    generators = []
    for q, p, s, y in starts:
        lifting = lift_function(y, p - q + 1, gens, points)
        if lifting is None:
            logger.error("No lifting of y_%s%s of degree %s", q, p, p - q + 1)
            raise InvariantViolation(f"Chain start y_{q}{p} has no lifting of degree {p - q + 1}")
        generators.append(Sl2Generator(q, p, s, y, lifting))
    t_alpha = lift_function(tuple(mx.ONE for _ in range(d)), 1, gens, points)
    t_tilde = lift_function(t, 1, gens, points)

    elements = []
    for index, g in enumerate(generators):
        for m in range(g.q + 1):
            elements.append(Sl2Element(index, m, mult(power(t, m), g.vector), g.level + m))
    elements.sort(key=lambda e: (e.degree, e.generator, e.m))

    _check_adapted(elements, model)
    logger.debug("sl2 basis with %s elements, %s coordinates", len(elements), len(variables))
    return Sl2Basis(t, jordan, tuple(generators), tuple(elements), variables, tuple(labels), points, t_alpha, t_tilde)


def _check_adapted(elements: Sequence[Sl2Element], model: GradedModel) -> None:
    d = model.d
    if len(elements) != d or mx.rank([list(e.vector) for e in elements]) != d:
        logger.error("%s sl2 elements on %s points", len(elements), d)
        raise InvariantViolation("sl2 elements are not a basis of the functions on Z′")
    step = Subspace.zero(d)
    for p in range(model.length):
        step = step + model.summand(p)
        span = Subspace.span([e.vector for e in elements if e.degree <= p], d)
        if span != step:
            logger.error("Degree <= %s elements span dimension %s, filtration step %s", p, span.dim, step.dim)
            raise InvariantViolation(f"sl2 elements of degree <= {p} do not span H̃₋{p + 1}")
