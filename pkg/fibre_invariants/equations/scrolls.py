"""
Adjoint coordinates of Z and the determinantal equations of the scroll
through their image.

The rows of the truncated partition λ̂ of D⁻(t) give the coordinates
X_i_m = t^m·f_i, 0 <= m < λ̂_i, where f_i starts the i-th chain. Their values
span F¹ = (H̃)⊥, so they embed Z into P^(d-r-2). Since every column
(X_i_m, X_i_(m+1)) is proportional to (1, t(z)), the 2x2 minors of the
matrices built from consecutive coordinates vanish on the image.
"""
import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from fibre_invariants.checks.certificates import certify
from fibre_invariants.configuration.config_model import mult, power
from fibre_invariants.equations import polynomials as pl
from fibre_invariants.equations.polynomials import EquationSet
from fibre_invariants.filtration.decomposition import GradedModel
from fibre_invariants.helpers.errors import InvariantViolation
from fibre_invariants.linalg import matrices as mx
from fibre_invariants.linalg.subspace import Subspace
from fibre_invariants.nilorbit.truncation import Truncation, truncate

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AdjointCoordinates:
    """Values of the coordinates X_i_m at the points of Z.

    Attributes:
        names: Coordinate names, row by row.
        rows: λ̂, the number of coordinates in every row.
        labels: Point labels.
        points: Coordinate values per point.
        all_points_nonzero: Whether no point is mapped to the zero vector.
    """

    names: tuple[str, ...]
    rows: tuple[int, ...]
    labels: tuple[str, ...]
    points: tuple[tuple[Fraction, ...], ...]
    all_points_nonzero: bool

    def index(self, i: int, m: int) -> int:
        return sum(self.rows[:i]) + m

    def to_dict(self) -> dict:
        return {
            "names": list(self.names),
            "rows": list(self.rows),
            "points": {label: list(point) for label, point in zip(self.labels, self.points)},
            "all_points_nonzero": self.all_points_nonzero,
        }


def adjoint_coordinates(t: Sequence, model: GradedModel, labels: Sequence[str], truncation: Optional[Truncation] = None) -> AdjointCoordinates:
    """Values of φ_im = t^m·f_i on Z.

    Raises:
        InvariantViolation: If the values do not span F¹.
    """
    t = mx.vector(t)
    truncation = truncation or truncate(t, model)
    names, functions = [], []
    for i, row in enumerate(truncation.rows, start=1):
        for m in range(row.truncated_length):
            names.append(f"X_{i}_{m}")
            functions.append(mult(power(t, m), row.start))

    if Subspace.span(functions, model.d) != model.f_step(1):
        logger.error("Adjoint coordinates span dimension %s", Subspace.span(functions, model.d).dim)
        raise InvariantViolation("Adjoint coordinates do not span F¹")
    points = tuple(tuple(f[k] for f in functions) for k in range(model.d))
    nonzero = all(not mx.is_zero(point) for point in points)
    return AdjointCoordinates(tuple(names), truncation.truncated, tuple(labels), points, nonzero)


def _row_matrix(coordinates: AdjointCoordinates, gens, i: int) -> list[list]:
    """Rows (X_i_(λ̂-2), ..., X_i_0) and (X_i_(λ̂-1), ..., X_i_1)."""
    size = coordinates.rows[i]
    top = [gens[coordinates.index(i, m)] for m in range(size - 2, -1, -1)]
    bottom = [gens[coordinates.index(i, m)] for m in range(size - 1, 0, -1)]
    return [top, bottom]


def _minors(matrix: list[list]) -> list:
    top, bottom = matrix
    return [top[a] * bottom[b] - top[b] * bottom[a] for a, b in itertools.combinations(range(len(top)), 2)]


def scroll_equations(coordinates: AdjointCoordinates, mixed: bool = False) -> EquationSet:
    """2x2 minors of the scroll through the adjoint image of Z.

    By default the minors of every row matrix are emitted separately; with
    `mixed` the row matrices are concatenated and all their minors are emitted.

    Raises:
        CertificateFailure: If a minor does not vanish at a point.
    """
    result = EquationSet(coordinates.names, [], coordinates.labels, coordinates.points, "scroll")
    blocks = []
    if coordinates.names:
        _, gens = pl.polynomial_ring(coordinates.names)
        blocks = [_row_matrix(coordinates, gens, i) for i, size in enumerate(coordinates.rows) if size >= 2]
    if mixed:
        if blocks:
            result.polys.extend(_minors([sum((b[0] for b in blocks), []), sum((b[1] for b in blocks), [])]))
    else:
        for block in blocks:
            result.polys.extend(_minors(block))
    if not result.polys:
        result.notes.append(f"No 2x2 minors for λ̂ = {list(coordinates.rows)}: the scroll is the whole space")
    logger.debug("%s scroll minors for λ̂ = %s", len(result), coordinates.rows)
    return certify(result)
