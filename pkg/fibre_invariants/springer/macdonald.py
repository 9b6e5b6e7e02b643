"""
Springer fibre dimensions and the graded character of their cohomology.

The cohomology of the Springer fibre B_μ carries a graded action of the
symmetric group. Writing q for the degree 2 generator, the multiplicity of
the irreducible χ^λ is the cocharge polynomial
K̃_λμ(q) = q^n(μ)·K_λμ(1/q): at q = 1 it is the Kostka number and its top
coefficient, in degree n(μ) = dim B_μ, is χ^μ alone.
"""
import logging
from dataclasses import dataclass, field

from sympy import Poly
from typeguard import typechecked

from fibre_invariants.helpers.errors import InvariantViolation, WeightMismatch
from fibre_invariants.springer.kostka import Q, kostka_foulkes
from fibre_invariants.springer.partitions import Partition, is_partition, n_statistic, normalize, partitions_of, weight

logger = logging.getLogger(__name__)


def _require_partition(mu: Partition, n: int) -> Partition:
    mu = tuple(mu)
    if not is_partition(mu) or weight(mu) != n:
        logger.error("%s is not a partition of %s", mu, n)
        raise WeightMismatch(f"{mu} is not a partition of {n}")
    return mu


@typechecked
def orbit_dim(mu: Partition, n: int) -> int:
    """Dimension n² - Σ_k (2k-1) μ_k of the nilpotent orbit of Jordan type μ."""
    mu = _require_partition(mu, n)
    return n * n - sum((2 * k - 1) * part for k, part in enumerate(mu, start=1))


@typechecked
def springer_fibre_dim(mu: Partition) -> int:
    """b_μ = Σ_k (k-1) μ_k.

    Raises:
        InvariantViolation: If 2 b_μ differs from Σ (2k-1) μ_k - n.
    """
    mu = normalize(mu)
    n = weight(mu)
    b = n_statistic(mu)
    if 2 * b != sum((2 * k - 1) * part for k, part in enumerate(mu, start=1)) - n:
        logger.error("Springer fibre dimension identity fails for %s", mu)
        raise InvariantViolation(f"Springer fibre dimension identity fails for {mu}")
    return b


def cocharge(lam: Partition, mu: Partition) -> Poly:
    """q^n(μ) K_λμ(1/q)."""
    coefficients = kostka_foulkes(normalize(lam), normalize(mu)).all_coeffs()[::-1]
    b = n_statistic(normalize(mu))
    return Poly(sum(c * Q ** (b - k) for k, c in enumerate(coefficients)), Q, domain="ZZ")


@dataclass
class SymFunPoly:
    """Σ_λ c_λ(q) s_λ over partitions λ of n; zero coefficients are not stored."""

    n: int
    terms: dict = field(default_factory=dict)

    def coefficient(self, lam: Partition) -> Poly:
        return self.terms.get(normalize(lam), Poly(0, Q, domain="ZZ"))

    def at_one(self) -> dict:
        return {lam: int(c.eval(1)) for lam, c in self.terms.items()}

    def degree(self) -> int:
        return max((c.degree() for c in self.terms.values()), default=0)

    def top_component(self) -> dict:
        """Partitions carrying the top degree with their coefficients there."""
        top = self.degree()
        return {lam: int(c.coeff_monomial(Q ** top)) for lam, c in self.terms.items() if c.coeff_monomial(Q ** top)}

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "terms": [
                {"lambda": list(lam), "poly_q": [int(c) for c in poly.all_coeffs()[::-1]]}
                for lam, poly in self.terms.items()
            ],
        }


def macdonald_value(mu: Partition, n: int) -> SymFunPoly:
    """Graded character Σ_λ K̃_λμ(q) s_λ of the cohomology of B_μ.

    Raises:
        WeightMismatch: If μ is not a partition of n.
        InvariantViolation: If the top degree is not b_μ carried by χ^μ alone.
    """
    mu = _require_partition(mu, n)
    value = SymFunPoly(n)
    for lam in partitions_of(n):
        coefficient = cocharge(lam, mu)
        if not coefficient.is_zero:
            value.terms[lam] = coefficient
    b = springer_fibre_dim(mu)
    if value.degree() != b or value.top_component() != {mu: 1}:
        logger.error("Top degree %s with components %s for %s", value.degree(), value.top_component(), mu)
        raise InvariantViolation(f"Top degree of the Springer character of {mu} is not χ^μ in degree {b}")
    return value
