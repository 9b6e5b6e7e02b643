"""
Kernels of the differentials d⁺_p and the Torelli index.

T⁽ᵖ⁾ consists of the panel functions t (modulo constants) whose raising part
D⁺(t) vanishes on Hᵖ. The kernels are nested, T⁽ᵖ⁾ ⊂ T⁽ᵖ⁺¹⁾, and the total
kernel of d⁺ has dimension ν - 1 and agrees with the kernel of d⁻.
"""
import logging
from dataclasses import dataclass
from typing import Optional, Union

from fibre_invariants.configuration.config_model import Panel
from fibre_invariants.filtration.decomposition import GradedModel
from fibre_invariants.helpers.errors import InvariantViolation
from fibre_invariants.lie.triangular import triangular
from fibre_invariants.linalg import matrices as mx
from fibre_invariants.linalg.subspace import Subspace

logger = logging.getLogger(__name__)

STRONG = "strong"


@dataclass(frozen=True)
class TorelliReport:
    """Kernels T⁽ᵖ⁾ as panel subspaces containing the constants.

    Attributes:
        kernels: T⁽ᵖ⁾ for p = 0, ..., ℓ-1 (the last one is always everything).
        kernel_dims: dim T⁽ᵖ⁾ - 1, i.e. dimensions modulo constants.
        total_kernel_dim: dim ker d⁺ modulo constants.
        index: First p <= ℓ-2 with a nonzero kernel, "strong" if there is none.
    """

    kernels: tuple[Subspace, ...]
    kernel_dims: tuple[int, ...]
    total_kernel_dim: int
    index: Union[int, str]


def _kernel_of(panel: Panel, model: GradedModel, degree: int, restrict_to: Optional[Subspace]) -> Subspace:
    """Panel functions t with D^degree(t) zero on `restrict_to` (everything when None)."""
    basis = panel.ordered_basis()
    columns = []
    for t in basis:
        part = triangular(t, model).part(degree)
        if restrict_to is None:
            columns.append(mx.flatten(part))
        else:
            columns.append(tuple(x for v in restrict_to.basis for x in mx.mat_vec(part, v)))
    length = len(columns[0])
    if length == 0:
        return panel.space
    coefficients = mx.nullspace(mx.from_columns(columns, length), len(basis))
    return Subspace.span([mx.linear_combination(c, basis, panel.d) for c in coefficients], panel.d)


def torelli_index(panel: Panel, model: GradedModel, center_dim: Optional[int] = None) -> TorelliReport:
    """Kernels of d⁺_p, the total kernels of d± and the Torelli index.

    For ℓ = 1 there is no p <= ℓ-2 and the index is reported as 0, the level
    where the (full) kernel sits.

    Raises:
        InvariantViolation: If the kernels are not nested, ker d⁺ != ker d⁻, or
            dim ker d⁺ differs from center_dim - 1 when center_dim is given.
    """
    length = model.length
    kernels = tuple(_kernel_of(panel, model, 1, model.summand(p)) for p in range(max(length, 1)))
    for p in range(len(kernels) - 1):
        if not kernels[p + 1].contains_subspace(kernels[p]):
            logger.error("Torelli kernels are not nested at p = %s", p)
            raise InvariantViolation(f"T({p}) is not contained in T({p + 1})")

    total_plus = _kernel_of(panel, model, 1, None)
    total_minus = _kernel_of(panel, model, -1, None)
    if total_plus != total_minus:
        logger.error("Kernels of d+ and d- differ")
        raise InvariantViolation("ker d⁺ differs from ker d⁻")
    if center_dim is not None and total_plus.dim - 1 != center_dim - 1:
        logger.error("dim ker d+ = %s but center dimension %s", total_plus.dim - 1, center_dim)
        raise InvariantViolation(f"dim ker d⁺ = {total_plus.dim - 1} differs from ν - 1 = {center_dim - 1}")

    dims = tuple(k.dim - 1 for k in kernels)
    if length <= 1:
        index: Union[int, str] = 0
    else:
        index = next((p for p in range(length - 1) if dims[p] > 0), STRONG)
    logger.debug("Torelli kernel dims %s, index %s", dims, index)
    return TorelliReport(kernels, dims, total_plus.dim - 1, index)
