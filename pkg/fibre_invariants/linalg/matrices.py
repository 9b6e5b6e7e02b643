"""
Dense exact matrices over the rationals.

Matrices are lists of rows of `fractions.Fraction`; vectors are tuples of
`Fraction`. Operators act on column vectors, so `mat_vec(a, v)` is `a @ v`.
Row reduction uses positional pivoting (leftmost nonzero column, first
eligible row), which makes every result deterministic.
"""
import logging
import math
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

from fibre_invariants.helpers.errors import SingularMatrix

logger = logging.getLogger(__name__)

Scalar = Fraction
Vector = tuple[Fraction, ...]
Mat = list[list[Fraction]]

ZERO = Fraction(0)
ONE = Fraction(1)


def as_scalar(value: Union[int, str, Fraction]) -> Fraction:
    """Converts ints, Fractions and "p/q" strings to a canonical Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("Booleans are not rationals")
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError(f"Cannot interpret {value!r} as an exact rational")


def vector(values: Iterable) -> Vector:
    return tuple(as_scalar(v) for v in values)


def matrix(rows: Iterable[Iterable]) -> Mat:
    result = [[as_scalar(v) for v in row] for row in rows]
    if result and any(len(row) != len(result[0]) for row in result):
        raise ValueError("Matrix rows have different lengths")
    return result


def zeros(n_rows: int, n_cols: int) -> Mat:
    return [[ZERO] * n_cols for _ in range(n_rows)]


def identity(n: int) -> Mat:
    return [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]


def diagonal(values: Sequence[Fraction]) -> Mat:
    n = len(values)
    return [[values[i] if i == j else ZERO for j in range(n)] for i in range(n)]


def shape(a: Mat) -> tuple[int, int]:
    return len(a), (len(a[0]) if a else 0)


def transpose(a: Mat) -> Mat:
    return [list(col) for col in zip(*a)]


def from_columns(columns: Sequence[Sequence[Fraction]], n_rows: int) -> Mat:
    """Builds the matrix whose columns are the given vectors."""
    if not columns:
        return [[] for _ in range(n_rows)]
    return [[col[i] for col in columns] for i in range(n_rows)]


def mat_mul(a: Mat, b: Mat) -> Mat:
    b_cols = list(zip(*b))
    return [[sum((x * y for x, y in zip(row, col) if x and y), ZERO) for col in b_cols] for row in a]


def mat_vec(a: Mat, v: Sequence[Fraction]) -> Vector:
    return tuple(sum((x * y for x, y in zip(row, v) if x and y), ZERO) for row in a)


def mat_add(a: Mat, b: Mat) -> Mat:
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_sub(a: Mat, b: Mat) -> Mat:
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(c: Fraction, a: Mat) -> Mat:
    return [[c * x for x in row] for row in a]


def mat_pow(a: Mat, k: int) -> Mat:
    result = identity(len(a))
    for _ in range(k):
        result = mat_mul(a, result)
    return result


def is_zero_matrix(a: Mat) -> bool:
    return all(x == 0 for row in a for x in row)


def bracket(a: Mat, b: Mat) -> Mat:
    """Commutator [a, b] = ab - ba."""
    return mat_sub(mat_mul(a, b), mat_mul(b, a))


def flatten(a: Mat) -> Vector:
    return tuple(x for row in a for x in row)


def unflatten(v: Sequence[Fraction], n: int) -> Mat:
    return [list(v[i * n:(i + 1) * n]) for i in range(n)]


def add(u: Sequence[Fraction], v: Sequence[Fraction]) -> Vector:
    return tuple(x + y for x, y in zip(u, v))


def sub(u: Sequence[Fraction], v: Sequence[Fraction]) -> Vector:
    return tuple(x - y for x, y in zip(u, v))


def scale(c: Fraction, v: Sequence[Fraction]) -> Vector:
    return tuple(c * x for x in v)


def dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    return sum((x * y for x, y in zip(u, v)), ZERO)


def linear_combination(coefficients: Sequence[Fraction], vectors: Sequence[Sequence[Fraction]], length: int) -> Vector:
    result = [ZERO] * length
    for c, vec in zip(coefficients, vectors):
        if c:
            for i, x in enumerate(vec):
                if x:
                    result[i] += c * x
    return tuple(result)


def is_zero(v: Sequence[Fraction]) -> bool:
    return all(x == 0 for x in v)


def rref(a: Mat) -> tuple[Mat, tuple[int, ...]]:
    """Reduced row-echelon form with positional pivoting.

    Zero rows are dropped from the result, so the returned rows form a basis
    of the row space.

    Args:
        a: Matrix to reduce, left untouched.

    Returns:
        The nonzero rows of the RREF and the tuple of pivot columns.
    """
    rows = [list(row) for row in a]
    n_rows, n_cols = shape(rows)
    pivots = []
    pivot_row = 0
    for col in range(n_cols):
        if pivot_row == n_rows:
            break
        found = next((i for i in range(pivot_row, n_rows) if rows[i][col] != 0), None)
        if found is None:
            continue
        rows[pivot_row], rows[found] = rows[found], rows[pivot_row]
        lead = rows[pivot_row][col]
        if lead != 1:
            rows[pivot_row] = [x / lead for x in rows[pivot_row]]
        pivot = rows[pivot_row]
        for i in range(n_rows):
            factor = rows[i][col]
            if i != pivot_row and factor != 0:
                rows[i] = [x - factor * y for x, y in zip(rows[i], pivot)]
        pivots.append(col)
        pivot_row += 1
    return rows[:pivot_row], tuple(pivots)


def rank(a: Mat) -> int:
    return len(rref(a)[1])


def nullspace(a: Mat, n_cols: Optional[int] = None) -> list[Vector]:
    """Basis of {x : a x = 0}, one vector per free column.

    Args:
        a: Matrix acting on column vectors.
        n_cols: Width of `a`, needed when `a` has no rows.
    """
    width = shape(a)[1] if a else n_cols
    if width is None:
        raise ValueError("Width of an empty matrix must be given")
    reduced, pivots = rref(a)
    free = [c for c in range(width) if c not in pivots]
    basis = []
    for f in free:
        vec = [ZERO] * width
        vec[f] = ONE
        for row, p in zip(reduced, pivots):
            vec[p] = -row[f]
        basis.append(tuple(vec))
    return basis


def solve(a: Mat, b: Sequence[Fraction]) -> Optional[Vector]:
    """A particular solution of a x = b, free variables set to zero.

    Returns:
        The solution vector or None when the system is inconsistent.
    """
    n_cols = shape(a)[1] if a else 0
    augmented = [list(row) + [rhs] for row, rhs in zip(a, b)]
    if not a:
        return () if is_zero(b) else None
    reduced, pivots = rref(augmented)
    if pivots and pivots[-1] == n_cols:
        return None
    x = [ZERO] * n_cols
    for row, p in zip(reduced, pivots):
        x[p] = row[n_cols]
    return tuple(x)


def solve_in_span(vectors: Sequence[Sequence[Fraction]], target: Sequence[Fraction]) -> Optional[Vector]:
    """Coefficients c with sum c_i vectors_i = target, or None."""
    if not vectors:
        return () if is_zero(target) else None
    return solve(from_columns(vectors, len(target)), target)


def inverse(a: Mat) -> Mat:
    """Inverse of a square matrix.

    Raises:
        SingularMatrix: If `a` has no inverse.
    """
    n = len(a)
    augmented = [list(row) + [ONE if i == j else ZERO for j in range(n)] for i, row in enumerate(a)]
    reduced, pivots = rref(augmented)
    if pivots[:n] != tuple(range(n)) or len(reduced) < n:
        logger.error("Matrix of size %s is singular", n)
        raise SingularMatrix(f"Matrix of size {n} is singular")
    return [row[n:] for row in reduced]


def primitive_vector(v: Iterable[Union[int, Fraction]]) -> list[int]:
    """The integer vector on the line of v with coprime entries and positive lead.

    Denominators are cleared first. The zero vector stays zero.
    """
    values = list(v)
    denominator = math.lcm(*(Fraction(x).denominator for x in values)) if values else 1
    ints = [int(x * denominator) for x in values]
    g = math.gcd(*ints)
    if g == 0:
        return ints
    lead = next(x for x in ints if x != 0)
    if lead < 0:
        g = -g
    return [x // g for x in ints]
