"""
The Lie algebra generated by the triangular parts of panel multiplications,
its center and the block decomposition of Z'.

Everything here runs on the reduced model, where the stable filtration step
is all of Q^{Z'} and the algebra sits inside gl(d').

The generators are block diagonal for the connected components of their
support, so the algebra lies in the sum of gl over those blocks. The closure
is first run on the primitive integer generators reduced modulo a prime:
brackets independent there are independent over Q, so reaching the block
bound proves the algebra is the whole block sum. Otherwise the closure is
redone exactly on primitive integer brackets.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from fibre_invariants.configuration.config_model import Panel
from fibre_invariants.filtration.decomposition import GradedModel
from fibre_invariants.filtration.filtration import Reduction
from fibre_invariants.helpers.errors import CenterNotDiagonal, InvariantViolation
from fibre_invariants.lie.triangular import triangular
from fibre_invariants.linalg import matrices as mx
from fibre_invariants.linalg.matrices import Mat
from fibre_invariants.linalg.subspace import EchelonBasis, ModularEchelonBasis

logger = logging.getLogger(__name__)

QUASI_ABELIAN = "quasi_abelian"
SIMPLE = "simple"
MIXED = "mixed"

MODULUS = 2 ** 61 - 1


@dataclass(frozen=True)
class LieAlgebra:
    """A basis of G̃ as flattened d' x d' matrices.

    Attributes:
        size: d'.
        basis: Flattened basis matrices.
        generators: Flattened panel generators.
        support_blocks: Components of the generator support; G̃ is block diagonal for them.
    """

    size: int
    basis: tuple
    generators: tuple
    support_blocks: tuple = ()

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def block_bound(self) -> int:
        return sum(len(block) ** 2 for block in self.support_blocks)

    @property
    def fills_blocks(self) -> bool:
        """True when G̃ is the whole sum of gl over the support blocks."""
        return bool(self.support_blocks) and self.dim == self.block_bound

    def element(self, k: int) -> Mat:
        return mx.unflatten(self.basis[k], self.size)
@dataclass(frozen=True)
class LieReport:
    """Center, blocks and classification of a fibre.

    Attributes:
        algebra_dim: dim G̃.
        center_dim: ν.
        blocks: Blocks of Z' as tuples of Z' point indices.
        block_dims: dim V_λ per block.
        classification: One of "quasi_abelian", "simple", "mixed".
        lambda_one: Indices of blocks with dim V_λ = 1 (mixed case).
        lambda_two: Indices of blocks with dim V_λ >= 2 (mixed case).
    """

    algebra_dim: int
    center_dim: int
    blocks: tuple[tuple[int, ...], ...]
    block_dims: tuple[int, ...]
    classification: str = ""
    lambda_one: tuple[int, ...] = ()
    lambda_two: tuple[int, ...] = ()

    def blocks_on(self, reduction: Reduction) -> list[list[int]]:
        """Blocks pulled back to the points of Z."""
        return [sorted(i for zp in block for i in reduction.blocks[zp]) for block in self.blocks]


def panel_generators(panel: Panel, model: GradedModel) -> list[Mat]:
    """Nonzero D⁻(tᵢ), D⁰(tᵢ), D⁺(tᵢ) for the ordered basis tᵢ of the panel."""
    generators = []
    for t in panel.ordered_basis():
        op = triangular(t, model)
        for degree in (-1, 0, 1):
            part = op.part(degree)
            if not mx.is_zero_matrix(part):
                generators.append(part)
    return generators


def support_blocks(generators: Sequence[Mat], size: int) -> tuple[tuple[int, ...], ...]:
    """Components of the graph joining i and j when a generator has a nonzero (i, j) entry."""
    neighbours: dict[int, set] = {i: set() for i in range(size)}
    for g in generators:
        for i in range(size):
            for j in range(size):
                if i != j and g[i][j] != 0:
                    neighbours[i].add(j)
                    neighbours[j].add(i)
    seen: set = set()
    blocks = []
    for start in range(size):
        if start in seen:
            continue
        seen.add(start)
        component, stack = [], [start]
        while stack:
            i = stack.pop()
            component.append(i)
            for j in neighbours[i] - seen:
                seen.add(j)
                stack.append(j)
        blocks.append(tuple(sorted(component)))
    return tuple(blocks)


def _block_entries(blocks: Sequence[Sequence[int]]) -> list[tuple[int, int]]:
    return [(i, j) for block in blocks for i in block for j in block]


def _restrict(a: Sequence[Sequence], entries: Sequence[tuple[int, int]]) -> list:
    return [a[i][j] for i, j in entries]


def _modular_matrix(g: Mat) -> list[list[int]]:
    size = len(g)
    flat = mx.primitive_vector(mx.flatten(g))
    return [[x % MODULUS for x in flat[i * size:(i + 1) * size]] for i in range(size)]


def _modular_bracket(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    a_columns = list(zip(*a))
    b_columns = list(zip(*b))
    return [
        [(sum(x * y for x, y in zip(a_row, b_col)) - sum(x * y for x, y in zip(b_row, a_col))) % MODULUS
         for b_col, a_col in zip(b_columns, a_columns)]
        for a_row, b_row in zip(a, b)
    ]


def modular_closure_dim(generators: Sequence[Mat], entries: Sequence[tuple[int, int]]) -> int:
    """Dimension over GF(MODULUS) of the closure of the primitive generators, capped at len(entries)."""
    bound = len(entries)
    reduced = [_modular_matrix(g) for g in generators]
    span = ModularEchelonBasis(bound, MODULUS)
    frontier = [g for g in reduced if span.add(_restrict(g, entries))]
    while frontier and span.dim < bound:
        following = []
        for x in frontier:
            for g in reduced:
                c = _modular_bracket(g, x)
                if span.add(_restrict(c, entries)):
                    following.append(c)
                    if span.dim == bound:
                        return bound
        frontier = following
    return span.dim


def exact_closure(generators: Sequence[Mat], entries: Sequence[tuple[int, int]]) -> list[Mat]:
    """Basis of the generated algebra from primitive integer brackets, capped at len(entries) elements."""
    bound = len(entries)
    size = len(generators[0]) if generators else 0
    span = EchelonBasis(bound)

    def primitive(c: Mat) -> Mat:
        return mx.unflatten([Fraction(x) for x in mx.primitive_vector(mx.flatten(c))], size)

    scaled = [primitive(g) for g in generators]
    frontier = [g for g in scaled if span.add(_restrict(g, entries), g)]
    while frontier and span.dim < bound:
        logger.debug("Lie closure at dimension %s, frontier %s", span.dim, len(frontier))
        following = []
        for x in frontier:
            for g in scaled:
                c = primitive(mx.bracket(g, x))
                if span.add(_restrict(c, entries), c):
                    following.append(c)
        frontier = following
    return span.vectors


def generate_lie_algebra(panel: Panel, model: GradedModel, exact: bool = False) -> LieAlgebra:
    """Lie closure of the panel generators by breadth first bracket saturation.

    Right normed brackets [g, x] of generators g with the newest elements x
    span the generated algebra. The search stops once the sum of gl over the
    support blocks is reached, whose elementary matrices then form the basis.

    Args:
        panel: Reduced panel.
        model: Graded model of the reduced panel.
        exact: Skip the modular pass and saturate over Q directly.
    """
    size = panel.d
    generators = panel_generators(panel, model)
    blocks = support_blocks(generators, size)
    entries = _block_entries(blocks)
    if not exact and modular_closure_dim(generators, entries) == len(entries):
        logger.debug("Lie closure fills %s support blocks, dimension %s", len(blocks), len(entries))
        basis = []
        for i, j in entries:
            flat = [mx.ZERO] * (size * size)
            flat[i * size + j] = mx.ONE
            basis.append(tuple(flat))
    else:
        basis = [mx.flatten(m) for m in exact_closure(generators, entries)]
    return LieAlgebra(size, tuple(basis), tuple(mx.flatten(g) for g in generators), blocks)


def rational_nullspace(rows: Sequence[Sequence[Fraction]], width: int) -> list[tuple[Fraction, ...]]:
    """Basis of {x : rows x = 0} computed with a sympy DomainMatrix over QQ."""
    if not rows:
        return [tuple(mx.ONE if i == j else mx.ZERO for j in range(width)) for i in range(width)]
    entries = [[QQ(x.numerator, x.denominator) for x in map(Fraction, row)] for row in rows]
    kernel = DomainMatrix(entries, (len(rows), width), QQ).nullspace()
    return [tuple(Fraction(int(x.numerator), int(x.denominator)) for x in row) for row in kernel.to_list()]


def center(algebra: LieAlgebra) -> list[Mat]:
    """Basis of the center of G̃.

    A full block sum has the block scalars as center. Otherwise the center is
    the commutant, inside G̃, of an independent subset of the generators.
    """
    size = algebra.size
    if algebra.fills_blocks:
        return [mx.diagonal([mx.ONE if i in block else mx.ZERO for i in range(size)]) for block in algebra.support_blocks]
    elements = [algebra.element(k) for k in range(algebra.dim)]
    independent = EchelonBasis(size * size)
    for g in algebra.generators:
        independent.add(g, mx.unflatten(g, size))
    rows = []
    for g in independent.vectors:
        brackets = [mx.flatten(mx.bracket(x, g)) for x in elements]
        rows.extend([b[e] for b in brackets] for e in range(size * size))
    rows = [row for row in rows if any(row)]
    return [mx.unflatten(mx.linear_combination(c, algebra.basis, size * size), size)
            for c in rational_nullspace(rows, algebra.dim)]


def center_and_blocks(algebra: LieAlgebra) -> LieReport:
    """Blocks of Z' from the common eigenspaces of the center.

    Center elements are diagonal in the delta basis, so points are grouped by
    their tuple of diagonal entries over a center basis.

    Raises:
        CenterNotDiagonal: If a center element is not diagonal.
        InvariantViolation: If ν differs from the number of blocks or dim G̃ from Σ (dim V_λ)².
    """
    size = algebra.size
    central = center(algebra)
    for z in central:
        if any(z[i][j] != 0 for i in range(size) for j in range(size) if i != j):
            logger.error("Center element is not diagonal")
            raise CenterNotDiagonal("Center element is not diagonal in the delta basis")
    groups: dict[tuple, list[int]] = {}
    for i in range(size):
        groups.setdefault(tuple(z[i][i] for z in central), []).append(i)
    blocks = tuple(sorted((tuple(g) for g in groups.values()), key=lambda g: g[0]))
    block_dims = tuple(len(b) for b in blocks)
    if len(blocks) != len(central):
        logger.error("Center dimension %s but %s blocks", len(central), len(blocks))
        raise InvariantViolation(f"Center dimension {len(central)} differs from number of blocks {len(blocks)}")
    if algebra.dim != sum(k * k for k in block_dims):
        logger.error("Algebra dimension %s, blocks %s", algebra.dim, block_dims)
        raise InvariantViolation(f"dim G̃ = {algebra.dim} differs from sum of squares of {block_dims}")
    return LieReport(algebra.dim, len(central), blocks, block_dims)


def classify(report: LieReport, panel: Panel, model: GradedModel) -> LieReport:
    """Tags the report as quasi-abelian, simple or mixed.

    Quasi-abelian when D⁺ vanishes on the whole panel, simple when ν = 1 and
    mixed otherwise, split into blocks with dim V_λ = 1 and >= 2.
    """
    quasi_abelian = all(mx.is_zero_matrix(triangular(t, model).part(1)) for t in panel.space.basis)
    if quasi_abelian:
        tag = QUASI_ABELIAN
    elif report.center_dim == 1:
        tag = SIMPLE
    else:
        tag = MIXED
    lambda_one = tuple(k for k, dim in enumerate(report.block_dims) if dim == 1)
    lambda_two = tuple(k for k, dim in enumerate(report.block_dims) if dim >= 2)
    return LieReport(report.algebra_dim, report.center_dim, report.blocks, report.block_dims, tag, lambda_one, lambda_two)


def blocks_refine(report: LieReport, reduction_blocks: Sequence[Sequence[int]], z_blocks: Sequence[Sequence[int]]) -> bool:
    """True when every Z' class lies inside one block pulled back to Z."""
    owner = {}
    for k, block in enumerate(z_blocks):
        for i in block:
            owner[i] = k
    return all(len({owner[i] for i in cls}) == 1 for cls in reduction_blocks)
