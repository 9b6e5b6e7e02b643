"""
Splitting Z′ along the zero set of a panel function.

A function t of the panel vanishing on r points of Z′ that span a hyperplane
cuts Z′ into its zero set Z₁ and the rest Z₂. On K = ker D⁺(t) ∩ H⁰ the
product t·x equals D⁰(t)x = ξ(x)·t, and the panel functions vanishing on Z₂
are exactly ker ξ, of dimension μ₀₀(t) - 1, while those vanishing on Z₁ are
the multiples of t.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from fibre_invariants.configuration.config_model import FnVec, Panel, mult
from fibre_invariants.equations.quadrics import evaluation_rows
from fibre_invariants.filtration.decomposition import GradedModel
from fibre_invariants.helpers.errors import InvariantViolation, NonConstantRequired, NotGeneralEnough, NotInPanel
from fibre_invariants.lie.triangular import triangular
from fibre_invariants.linalg import matrices as mx
from fibre_invariants.linalg.subspace import EchelonBasis, Subspace, restricted_kernel
from fibre_invariants.nilorbit.graded_jordan import graded_jordan_plus

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Mu00Split:
    t: FnVec
    hyperplane_points: tuple[str, ...]
    z1: tuple[str, ...]
    z2: tuple[str, ...]
    mu00: int
    kernel: tuple[FnVec, ...]
    xi: tuple[Fraction, ...]
    vanishing_on_z1: int
    vanishing_on_z2: int

    def to_dict(self) -> dict:
        return {
            "t": list(self.t),
            "hyperplane_points": list(self.hyperplane_points),
            "Z1": list(self.z1),
            "Z2": list(self.z2),
            "mu00": self.mu00,
            "xi": list(self.xi),
            "vanishing_on_Z1": self.vanishing_on_z1,
            "vanishing_on_Z2": self.vanishing_on_z2,
        }


def hyperplane_function(panel: Panel, points: Optional[Sequence[int]] = None) -> tuple[FnVec, tuple[int, ...]]:
    """A panel function vanishing on r independent points.

    Without `points` the first r points in label order imposing independent
    conditions are taken.

    Raises:
        NotGeneralEnough: If the chosen points do not impose r independent conditions.
    """
    rows = evaluation_rows(panel)
    if points is None:
        echelon = EchelonBasis(panel.r + 1)
        chosen = [k for k in range(panel.d) if echelon.dim < panel.r and echelon.add(rows[k], k)]
    else:
        chosen = list(points)
    if len(chosen) != panel.r or mx.rank([rows[k] for k in chosen]) != panel.r:
        logger.error("Points %s do not span a hyperplane", chosen)
        raise NotGeneralEnough(f"{len(chosen)} chosen points do not span a hyperplane of the panel dual")
    coefficients = mx.nullspace([rows[k] for k in chosen], panel.r + 1)[0]
    return mx.linear_combination(coefficients, panel.ordered_basis(), panel.d), tuple(chosen)


def _vanishing_on(panel: Panel, indices: Sequence[int]) -> Subspace:
    outside = [panel.config.delta(k) for k in range(panel.d) if k not in set(indices)]
    return panel.space.intersect(Subspace.span(outside, panel.d))


def mu00_split(panel: Panel, model: GradedModel, t: Optional[Sequence] = None, points: Optional[Sequence[int]] = None) -> Mu00Split:
    """Split of Z′ by the zero set of t and the speciality counts of both parts.

    Args:
        panel: Reduced panel on Z′.
        model: Its graded model.
        t: Panel function to split with; by default one vanishing on r points.
        points: Indices of the r points defining t when t is not given.

    Raises:
        NotGeneralEnough: If the points or the zero set of t fail to span a hyperplane.
        NonConstantRequired: If t is constant.
        InvariantViolation: If D⁰(t) is not ξ·t on K or the vanishing counts disagree with μ₀₀(t).
    """
    if t is None:
        t, chosen = hyperplane_function(panel, points)
    else:
        t, chosen = mx.vector(t), ()
        if not panel.contains(t):
            raise NotInPanel("t has to lie in the panel")
    if Subspace.span([panel.config.ones()], panel.d).contains(t):
        logger.error("Split requested for a constant function")
        raise NonConstantRequired("A constant function has no zero set on Z′")

    kernel = restricted_kernel(triangular(t, model).part(1), model.summand(0))
    mu00 = kernel.dim
    if mu00 != graded_jordan_plus(t, model).mu(0, 0):
        raise InvariantViolation("dim ker D⁺(t) ∩ H⁰ differs from μ₀₀(t)")

    z1 = [k for k in range(panel.d) if t[k] == 0]
    z2 = [k for k in range(panel.d) if t[k] != 0]
    on_z1 = _vanishing_on(panel, z1)
    if on_z1.dim != 1:
        logger.error("Zero set of t carries %s independent panel functions", on_z1.dim)
        raise NotGeneralEnough("Zero set of t does not span a hyperplane")

    zero_part = triangular(t, model).part(0)
    xi = []
    for x in kernel.basis:
        product = mx.mat_vec(zero_part, x)
        if product != mult(t, x):
            raise InvariantViolation("D⁰(t) differs from multiplication by t on ker D⁺(t) ∩ H⁰")
        coefficient = mx.solve_in_span([t], product)
        if coefficient is None:
            logger.error("D⁰(t) x is not a multiple of t")
            raise InvariantViolation("D⁰(t) x is not a multiple of t on ker D⁺(t) ∩ H⁰")
        xi.append(coefficient[0])

    on_z2 = _vanishing_on(panel, z2)
    xi_kernel = Subspace.span(
        [mx.linear_combination(c, kernel.basis, panel.d) for c in mx.nullspace([xi], len(xi))], panel.d
    )
    if on_z2 != xi_kernel or on_z2.dim != mu00 - 1:
        logger.error("Vanishing dims %s and %s with μ₀₀ = %s", on_z1.dim, on_z2.dim, mu00)
        raise InvariantViolation("Panel functions vanishing on the parts disagree with μ₀₀(t)")

    labels = panel.config.labels
    return Mu00Split(
        t,
        tuple(labels[k] for k in chosen),
        tuple(labels[k] for k in z1),
        tuple(labels[k] for k in z2),
        mu00,
        kernel.basis,
        tuple(xi),
        on_z1.dim,
        on_z2.dim,
    )
