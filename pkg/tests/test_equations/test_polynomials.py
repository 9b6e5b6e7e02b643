from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fibre_invariants.checks.certificates import certify, nonzero_entries, verify_document
from fibre_invariants.equations import polynomials as pl
from fibre_invariants.equations.polynomials import EquationSet
from fibre_invariants.helpers.errors import CertificateFailure

small_fractions = st.fractions(min_value=-4, max_value=4, max_denominator=5)


# Test evaluation and ranks -----------------------------------------------------------------------

@settings(max_examples=30, deadline=None)
@given(small_fractions, small_fractions, small_fractions)
def test_evaluate_is_exact(x, y, c):
    _, (X, Y) = pl.polynomial_ring(["X", "Y"])
    poly = X ** 2 * Y - pl.to_qq(c) * Y + 3
    assert pl.evaluate(poly, (x, y)) == x * x * y - c * y + 3


@pytest.mark.parametrize(
    ("build", "expected"),
    [
        # X0 X1 - X2 X3 is a rank 4 form
        (lambda g: g[0] * g[1] - g[2] * g[3], 4),
        # a square of a linear form
        (lambda g: (g[0] + g[1]) ** 2, 1),
        (lambda g: g[0] ** 2 - g[1] ** 2, 2),
    ]
)
def test_quadric_rank(build, expected):
    _, gens = pl.polynomial_ring(["a", "b", "c", "d"])
    assert pl.quadric_rank(build(gens)) == expected


def test_quadric_rank_rejects_cubics():
    _, (X, Y) = pl.polynomial_ring(["X", "Y"])
    with pytest.raises(ValueError):
        pl.quadric_rank(X ** 3 + Y ** 2)


def test_coefficient_rank():
    _, (X, Y) = pl.polynomial_ring(["X", "Y"])
    assert pl.coefficient_rank([X * Y, 2 * X * Y, X ** 2]) == 2
    assert pl.coefficient_rank([]) == 0


def test_homogeneous_monomials_and_degree():
    assert pl.homogeneous_monomials(2, 2) == [(2, 0), (1, 1), (0, 2)]
    assert len(pl.homogeneous_monomials(3, 4)) == 15
    _, (X, Y) = pl.polynomial_ring(["X", "Y"])
    assert pl.homogeneous_degree(X * Y + Y ** 2) == 2
    assert pl.homogeneous_degree(X + Y ** 2) is None


def test_combination_and_linear_form():
    _, gens = pl.polynomial_ring(["X", "Y"])
    poly = pl.combination(gens, [Fraction(1, 2), Fraction(0), Fraction(-3)], [(2, 0), (1, 1), (0, 2)])
    assert pl.evaluate(poly, (Fraction(2), Fraction(1))) == Fraction(-1)
    assert pl.evaluate(pl.linear_form(gens, [1, 2]), (Fraction(1), Fraction(1))) == 3


# Test EquationSet and certificates -------------------------------------------------------------------

def conic_set():
    """The conic X Z - Y^2 through three points of the parabola."""
    _, (X, Y, Z) = pl.polynomial_ring(["X", "Y", "Z"])
    points = tuple((Fraction(1), Fraction(s), Fraction(s * s)) for s in (0, 1, 2))
    return EquationSet(("X", "Y", "Z"), [X * Z - Y ** 2], ("p0", "p1", "p2"), points, "conic")


def test_certify_stores_zero_evaluations():
    equations = certify(conic_set())
    assert equations.certificate == [[0, 0, 0]]


def test_certify_raises_on_nonvanishing_polynomial():
    equations = conic_set()
    X = equations.polys[0].ring.gens[0]
    equations.polys.append(X)
    assert nonzero_entries(equations) == [(1, "p0", 1), (1, "p1", 1), (1, "p2", 1)]
    with pytest.raises(CertificateFailure):
        certify(equations)


def test_serialized_equations_verify():
    document = certify(conic_set()).to_dict()
    assert document["kind"] == "conic"
    assert document["polys"][0]["terms"]
    assert verify_document(document) == {"kind": "conic", "polynomials": 1, "points": 3, "verified": True}


def test_tampered_point_fails_verification():
    document = certify(conic_set()).to_dict()
    document["points"][1]["coords"] = ["1", "1", "2"]
    with pytest.raises(CertificateFailure):
        verify_document(document)


def test_empty_equation_set_round_trips():
    empty = EquationSet((), [], ("p0",), ((),), "scroll", ["nothing to emit"])
    again = EquationSet.from_dict(empty.to_dict())
    assert len(again) == 0
    assert again.notes == ["nothing to emit"]
