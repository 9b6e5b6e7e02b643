"""
Quadrics of rank at most 4 through the points of Z′.

With the first g-1 points z_1, ..., z_(g-1) of Z′ (g-1 = dim H̃) and the dual
basis x_i of H̃, x_i(z_j) = δ_ij, every product x_i x_j with 2 <= i < j agrees
on Z′ with x_1·h for a panel function h. The quadrics X_i X_j - X_1·H_ij
follow, where X_s evaluates to x_s and H_ij = sum_s h(z_s) X_s.
"""
import itertools
import logging
from math import comb

from fibre_invariants.checks.certificates import certify
from fibre_invariants.configuration.config_model import Panel, mult
from fibre_invariants.equations import polynomials as pl
from fibre_invariants.equations.polynomials import EquationSet
from fibre_invariants.filtration.decomposition import GradedModel
from fibre_invariants.helpers.errors import HypothesisDPlusHFails, InvariantViolation, NotGeneralPosition
from fibre_invariants.lie.triangular import triangular
from fibre_invariants.linalg import matrices as mx
from fibre_invariants.linalg.subspace import Subspace, image, orth_complement, preimage_in

logger = logging.getLogger(__name__)


def evaluation_rows(panel: Panel) -> list[list]:
    """Values of the panel basis at every point, one row per point."""
    basis = panel.ordered_basis()
    return [[b[k] for b in basis] for k in range(panel.d)]


def check_general_position(panel: Panel) -> None:
    """Every g-1 points impose independent conditions on the panel.

    Raises:
        NotGeneralPosition: For the first dependent subset.
    """
    rows = evaluation_rows(panel)
    size = panel.r + 1
    for subset in itertools.combinations(range(panel.d), size):
        if mx.rank([rows[k] for k in subset]) < size:
            labels = [panel.config.labels[k] for k in subset]
            logger.error("Points %s are dependent in the dual of the panel", labels)
            raise NotGeneralPosition(f"Points {labels} do not span the dual of the panel")


def dual_basis(panel: Panel) -> list[tuple]:
    """x_1, ..., x_(g-1) in the panel with x_i(z_j) = δ_ij for the first g-1 points."""
    basis = panel.ordered_basis()
    size = len(basis)
    evaluations = [[b[k] for b in basis] for k in range(size)]
    inverse = mx.inverse(evaluations)
    return [mx.linear_combination([inverse[row][i] for row in range(size)], basis, panel.d) for i in range(size)]


def rank4_quadrics(panel: Panel, model: GradedModel) -> EquationSet:
    """C(g-2, 2) independent quadrics of rank <= 4 vanishing on Z′.

    Args:
        panel: Reduced panel on Z′.
        model: Its graded model.

    Raises:
        NotGeneralPosition: If some g-1 points of Z′ are dependent.
        HypothesisDPlusHFails: If D⁺(x_i): H -> H¹ is not an isomorphism.
        InvariantViolation: If a product x_i x_j - x_1 h′ is not a multiple of x_1,
            or the quadrics are dependent or of rank above 4.
    """
    check_general_position(panel)
    xs = dual_basis(panel)
    size = len(xs)
    ones = panel.config.ones()
    h_space = panel.space.intersect(orth_complement(Subspace.span([ones], panel.d), model.form))
    h_one = model.summand(1)

    raising = []
    for i, x in enumerate(xs, start=1):
        op = triangular(x, model).part(1)
        if h_one.dim != h_space.dim or image(op, h_space).dim != h_space.dim:
            logger.error("D⁺(x_%s) is not an isomorphism H -> H¹", i)
            raise HypothesisDPlusHFails(i)
        raising.append(op)

    variables = tuple(f"X_{i}" for i in range(1, size + 1))
    _, gens = pl.polynomial_ring(variables)
    points = tuple(tuple(x[k] for x in xs) for k in range(panel.d))
    result = EquationSet(variables, [], panel.config.labels, points, "rank4")

    for i, j in itertools.combinations(range(1, size), 2):
        target = mx.mat_vec(raising[i], xs[j])
        h_prime = preimage_in(raising[0], target, h_space)
        if h_prime is None:
            raise InvariantViolation(f"D⁺(x_{i + 1}) x_{j + 1} is not in the image of D⁺(x_1) on H")
        remainder = mx.sub(mult(xs[i], xs[j]), mult(xs[0], h_prime))
        c = remainder[0]
        if remainder != mx.scale(c, xs[0]):
            logger.error("x_%s x_%s - x_1 h′ is not a multiple of x_1", i + 1, j + 1)
            raise InvariantViolation(f"x_{i + 1} x_{j + 1} - x_1 h′ is not a multiple of x_1")
        h = mx.add(h_prime, mx.scale(c, ones))
        linear = pl.linear_form(gens, [h[k] for k in range(size)])
        result.polys.append(gens[i] * gens[j] - gens[0] * linear)

    expected = comb(size - 1, 2)
    if len(result) != expected or pl.coefficient_rank(result.polys) != expected:
        raise InvariantViolation(f"Expected {expected} independent quadrics, found {pl.coefficient_rank(result.polys)}")
    if any(pl.quadric_rank(q) > 4 for q in result.polys):
        raise InvariantViolation("A quadric has rank above 4")
    logger.debug("%s rank 4 quadrics through %s points", expected, panel.d)
    return certify(result)
