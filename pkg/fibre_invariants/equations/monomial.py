"""
Relations of Z′ read off the sl2-adapted basis.

A monomial y^m in the level 0 chain starts lies in H̃₋|m| and is a
combination of the basis elements t^k·y of degree < |m|; replacing every
element by its lifting gives a polynomial F(m) vanishing on Z′, and padding
with powers of T_α its homogeneous version H(m) of degree |m|.

A chain start y of a chain of size q+1 ending on level p satisfies
t^(q+1)·y ∈ H̃₋(p+1), which gives a relation of degree p+2 for every such
chain.
"""
import logging
from dataclasses import dataclass
from typing import Optional

from fibre_invariants.checks.certificates import certify
from fibre_invariants.configuration.config_model import mult, power
from fibre_invariants.equations import polynomials as pl
from fibre_invariants.equations.polynomials import EquationSet
from fibre_invariants.equations.sl2_basis import Sl2Basis
from fibre_invariants.helpers.errors import InvariantViolation
from fibre_invariants.linalg import matrices as mx

logger = logging.getLogger(__name__)


@dataclass
class MonomialRelations:
    """F(m) and H(m) for every monomial up to the degree cap."""

    inhomogeneous: EquationSet
    homogeneous: EquationSet
    monomials: list


def _empty(basis: Sl2Basis, kind: str) -> EquationSet:
    return EquationSet(basis.variables, [], basis.labels, basis.points, kind)


def monomial_value(basis: Sl2Basis, exps) -> tuple:
    value = tuple(mx.ONE for _ in basis.labels)
    for index, e in enumerate(exps):
        if e:
            coordinate = tuple(point[index] for point in basis.points)
            value = mult(value, power(coordinate, e))
    return value


def monomial_relations(basis: Sl2Basis, degree_cap: int = 4) -> MonomialRelations:
    """F(m) and H(m) for all monomials m with 2 <= |m| <= degree_cap.

    Monomials whose relation is the zero polynomial are skipped.

    Raises:
        InvariantViolation: If a monomial is not in the span of the basis
            elements of degree < |m|.
        CertificateFailure: If an emitted polynomial does not vanish on Z′.
    """
    gens = basis.gens
    n_vars = len(gens)
    inhomogeneous = _empty(basis, "monomial_inhomogeneous")
    homogeneous = _empty(basis, "monomial")
    monomials = []
    for degree in range(2, degree_cap + 1):
        max_degree = min(degree - 1, basis.length - 1)
        for exps in pl.homogeneous_monomials(n_vars, degree):
            expansion = basis.expand(monomial_value(basis, exps), max_degree)
            if expansion is None:
                logger.error("Monomial %s is not expressible in degree <= %s", exps, max_degree)
                raise InvariantViolation(f"Monomial {exps} leaves H̃₋{max_degree + 1}")
            leading = pl.monomial(gens, exps)
            f = leading - basis.lift_expansion(expansion)
            h = leading - basis.lift_expansion(expansion, degree)
            if f:
                inhomogeneous.polys.append(f)
            if h:
                homogeneous.polys.append(h)
                monomials.append(exps)
    logger.debug("%s homogeneous monomial relations up to degree %s", len(homogeneous), degree_cap)
    return MonomialRelations(certify(inhomogeneous), certify(homogeneous), monomials)


def rank_bounded_relations(basis: Sl2Basis, q: int, p: int, s: Optional[int] = None) -> EquationSet:
    """Relations G of degree p+2 from t^(q+1)·y⁽ˢ⁾_qp, one per chain (or only the chain s).

    The forms of one (q, p) are linearly independent except for (0, 0), where
    the constant function among the y_00 makes them dependent, rank μ₀₀ - 1.

    Raises:
        InvariantViolation: If t^(q+1)·y is not in the span of the elements of degree <= p.
        CertificateFailure: If a relation does not vanish on Z′.
    """
    result = _empty(basis, "rank_bounded")
    result.notes.append(f"q={q} p={p} mu={basis.jordan.mu(q, p)}")
    for index, g in enumerate(basis.generators):
        if g.q != q or g.p != p or (s is not None and g.s != s):
            continue
        raised = mult(power(basis.t, q + 1), g.vector)
        expansion = basis.expand(raised, p)
        if expansion is None:
            logger.error("t^%s y_%s%s is not in H̃₋%s", q + 1, q, p, p + 1)
            raise InvariantViolation(f"t^{q + 1} y_{q}{p} leaves H̃₋{p + 1}")
        relation = basis.t_tilde ** (q + 1) * g.lifting - basis.lift_expansion(expansion, p + 2)
        if relation:
            result.polys.append(relation)
    return certify(result)


def expected_relation_rank(basis: Sl2Basis, q: int, p: int) -> int:
    mu = basis.jordan.mu(q, p)
    return max(mu - 1, 0) if (q, p) == (0, 0) else mu


def all_rank_bounded_relations(basis: Sl2Basis) -> list[EquationSet]:
    """rank_bounded_relations for every nonzero μ_qp."""
    result = []
    for q in range(basis.length):
        for p in range(q, basis.length):
            if basis.jordan.mu(q, p):
                relations = rank_bounded_relations(basis, q, p)
                rank = pl.coefficient_rank(relations.polys)
                if rank != expected_relation_rank(basis, q, p):
                    logger.error("Relations of (%s, %s) have rank %s", q, p, rank)
                    raise InvariantViolation(f"Relations from μ_{q}{p} have rank {rank}")
                result.append(relations)
    return result
