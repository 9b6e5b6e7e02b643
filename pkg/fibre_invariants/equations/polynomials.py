"""
Polynomials with rational coefficients in named homogeneous coordinates.

Polynomials are elements of a sympy polynomial ring over QQ. Evaluation at
points stays in `fractions.Fraction` so certificates are exact and
independent of the ground type sympy picked.
"""
import itertools
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from sympy import QQ
from sympy.polys.orderings import grevlex
from sympy.polys.rings import PolyElement, ring

from fibre_invariants.helpers.helpers import format_rational, parse_rational
from fibre_invariants.linalg import matrices as mx

logger = logging.getLogger(__name__)


def polynomial_ring(names: Sequence[str]):
    """The ring QQ[names] with graded reverse lexicographic order and its generators."""
    result = ring(list(names), QQ, grevlex)
    return result[0], tuple(result[1:])


def to_qq(value: Fraction):
    value = Fraction(value)
    return QQ(value.numerator, value.denominator)


def from_qq(value) -> Fraction:
    return Fraction(int(value.numerator), int(value.denominator))


def evaluate(poly: PolyElement, point: Sequence[Fraction]) -> Fraction:
    """Exact value of the polynomial at the given coordinates."""
    total = mx.ZERO
    for exps, coefficient in poly.terms():
        term = from_qq(coefficient)
        for x, e in zip(point, exps):
            if e:
                term *= x ** e
        total += term
    return total


def homogeneous_degree(poly: PolyElement) -> Optional[int]:
    """Common total degree of all terms, None for mixed degrees or the zero polynomial."""
    degrees = {sum(exps) for exps in poly.monoms()}
    return degrees.pop() if len(degrees) == 1 else None


def homogeneous_monomials(n_vars: int, degree: int) -> list[tuple[int, ...]]:
    """Exponent vectors of all monomials of the given degree."""
    result = []
    for combination in itertools.combinations_with_replacement(range(n_vars), degree):
        exps = [0] * n_vars
        for index in combination:
            exps[index] += 1
        result.append(tuple(exps))
    return result


def monomial(gens: Sequence[PolyElement], exps: Sequence[int]) -> PolyElement:
    result = gens[0].ring.one
    for g, e in zip(gens, exps):
        if e:
            result *= g ** e
    return result


def linear_form(gens: Sequence[PolyElement], coefficients: Sequence[Fraction]) -> PolyElement:
    result = gens[0].ring.zero
    for g, c in zip(gens, coefficients):
        if c:
            result += to_qq(c) * g
    return result


def combination(gens: Sequence[PolyElement], coefficients: Sequence[Fraction], exponents: Sequence[Sequence[int]]) -> PolyElement:
    result = gens[0].ring.zero
    for c, exps in zip(coefficients, exponents):
        if c:
            result += to_qq(c) * monomial(gens, exps)
    return result


def coefficient_rank(polys: Sequence[PolyElement]) -> int:
    """Dimension of the span of the polynomials."""
    support = sorted({exps for p in polys for exps in p.monoms()})
    rows = [[_coefficient(p, exps) for exps in support] for p in polys]
    return mx.rank(rows) if rows and support else 0


def _coefficient(poly: PolyElement, exps: tuple) -> Fraction:
    value = poly.get(exps)
    return from_qq(value) if value is not None else mx.ZERO


def quadric_rank(poly: PolyElement) -> int:
    """Rank of the symmetric matrix of a quadratic form."""
    n = poly.ring.ngens
    matrix = mx.zeros(n, n)
    for exps, coefficient in poly.terms():
        c = from_qq(coefficient)
        indices = [i for i, e in enumerate(exps) for _ in range(e)]
        if len(indices) != 2:
            raise ValueError("Not a quadratic form")
        i, j = indices
        if i == j:
            matrix[i][i] += c
        else:
            matrix[i][j] += c / 2
            matrix[j][i] += c / 2
    return mx.rank(matrix)


def poly_to_dict(poly: PolyElement) -> dict:
    return {
        "terms": [
            {"coef": format_rational(from_qq(c)), "exps": list(exps)}
            for exps, c in sorted(poly.terms(), reverse=True)
        ]
    }


def poly_from_dict(poly_ring, data: dict) -> PolyElement:
    result = poly_ring.zero
    for term in data["terms"]:
        result += poly_ring({tuple(term["exps"]): to_qq(parse_rational(term["coef"]))})
    return result


@dataclass
class EquationSet:
    """Polynomials in named coordinates together with the points they vanish on.

    Attributes:
        variables: Coordinate names.
        polys: The polynomials.
        labels: Point labels.
        points: Coordinates of each point, one value per variable.
        kind: Name of the producing procedure.
        notes: Free form remarks, e.g. why the set is empty.
        certificate: Per polynomial, its value at each point, filled by `certify`.
    """

    variables: tuple[str, ...]
    polys: list
    labels: tuple[str, ...]
    points: tuple[tuple[Fraction, ...], ...]
    kind: str = ""
    notes: list = field(default_factory=list)
    certificate: list = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.polys)

    def evaluations(self) -> list[list[Fraction]]:
        return [[evaluate(p, point) for point in self.points] for p in self.polys]

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "vars": list(self.variables),
            "polys": [poly_to_dict(p) for p in self.polys],
            "points": [
                {"label": label, "coords": [format_rational(x) for x in point]}
                for label, point in zip(self.labels, self.points)
            ],
            "certificate": [[format_rational(x) for x in row] for row in self.certificate],
            "notes": list(self.notes),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "EquationSet":
        variables = tuple(data["vars"])
        polys = []
        if data["polys"]:
            poly_ring, _ = polynomial_ring(variables)
            polys = [poly_from_dict(poly_ring, p) for p in data["polys"]]
        return cls(
            variables,
            polys,
            tuple(p["label"] for p in data["points"]),
            tuple(tuple(parse_rational(x) for x in p["coords"]) for p in data["points"]),
            data.get("kind", ""),
            list(data.get("notes", [])),
        )
