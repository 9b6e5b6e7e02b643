"""
Multiplication operators and their triangular decomposition.

Multiplication by t is split into the parts of degree -1, 0 and +1 with
respect to the graded summands: D⁺(t) = Σ P_{p+1} D(t) P_p and likewise for
D⁰ and D⁻. For t in the panel D(t) = D⁻(t) + D⁰(t) + D⁺(t).
"""
import logging
from dataclasses import dataclass
from typing import Sequence

from fibre_invariants.configuration.config_model import FnVec, multiplication_operator
from fibre_invariants.filtration.decomposition import GradedModel
from fibre_invariants.helpers.errors import InvariantViolation
from fibre_invariants.linalg import matrices as mx
from fibre_invariants.linalg.matrices import Mat

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TriangularOp:
    t: FnVec
    full: tuple
    minus: tuple
    zero: tuple
    plus: tuple

    def part(self, degree: int) -> Mat:
        """Matrix of the part of degree -1, 0 or +1."""
        chosen = {-1: self.minus, 0: self.zero, 1: self.plus}[degree]
        return [list(row) for row in chosen]


def _freeze(a: Mat) -> tuple:
    return tuple(tuple(row) for row in a)


def graded_part(op: Mat, model: GradedModel, degree: int) -> Mat:
    d = model.d
    result = mx.zeros(d, d)
    for p in range(len(model.summands)):
        target = p + degree
        if not 0 <= target < len(model.summands):
            continue
        result = mx.mat_add(result, mx.mat_mul(model.projection(target), mx.mat_mul(op, model.projection(p))))
    return result


def triangular(t: Sequence, model: GradedModel) -> TriangularOp:
    """Degree -1, 0, +1 parts of multiplication by t.

    Raises:
        InvariantViolation: If t lies in H⁰ and the three parts do not add up to D(t).
    """
    t = mx.vector(t)
    full = multiplication_operator(t)
    minus, zero, plus = (graded_part(full, model, degree) for degree in (-1, 0, 1))
    if model.summand(0).contains(t) and mx.mat_add(mx.mat_add(minus, zero), plus) != full:
        logger.error("Triangular parts of a panel element do not add up")
        raise InvariantViolation("D(t) differs from D⁻(t) + D⁰(t) + D⁺(t)")
    return TriangularOp(t, _freeze(full), _freeze(minus), _freeze(zero), _freeze(plus))
