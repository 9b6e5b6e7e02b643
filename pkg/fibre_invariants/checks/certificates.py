"""
Exact vanishing certificates of equation sets.
"""
import logging
from fractions import Fraction

from fibre_invariants.equations.polynomials import EquationSet
from fibre_invariants.helpers.errors import CertificateFailure

logger = logging.getLogger(__name__)


def nonzero_entries(equations: EquationSet) -> list[tuple[int, str, Fraction]]:
    """(polynomial index, point label, value) for every nonzero evaluation."""
    failures = []
    for index, row in enumerate(equations.evaluations()):
        for label, value in zip(equations.labels, row):
            if value != 0:
                failures.append((index, label, value))
    return failures


def certify(equations: EquationSet) -> EquationSet:
    """Evaluate every polynomial at every point and store the values as certificate.

    Raises:
        CertificateFailure: If a polynomial does not vanish at a point.
    """
    failures = nonzero_entries(equations)
    if failures:
        index, label, value = failures[0]
        logger.error("%s nonzero evaluations, first: polynomial %s at %s is %s", len(failures), index, label, value)
        raise CertificateFailure(f"Polynomial {index} does not vanish at {label} (value {value})")
    equations.certificate = equations.evaluations()
    logger.debug("Certified %s polynomials at %s points", len(equations), len(equations.labels))
    return equations


def verify_document(document: dict) -> dict:
    """Re-evaluate a serialized equation set; returns a summary, raises on any nonzero value."""
    equations = EquationSet.from_dict(document)
    failures = nonzero_entries(equations)
    if failures:
        index, label, value = failures[0]
        logger.error("Verification failed for %s evaluations", len(failures))
        raise CertificateFailure(f"Polynomial {index} does not vanish at {label} (value {value})")
    return {"kind": equations.kind, "polynomials": len(equations), "points": len(equations.labels), "verified": True}
