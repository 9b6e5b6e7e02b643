"""Loop exponents a_p = tr(h_{p+1}) - tr(h_p) of the sl2 semisimple element."""
import logging
from dataclasses import dataclass
from typing import Optional, Sequence

from fibre_invariants.filtration.decomposition import GradedModel
from fibre_invariants.helpers.errors import InvariantViolation
from fibre_invariants.nilorbit.bigrading import chain_weights
from fibre_invariants.nilorbit.graded_jordan import GradedJordan, graded_jordan_plus

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LoopData:
    traces: tuple[int, ...]
    exponents: tuple[int, ...]

    @property
    def coweight(self) -> tuple[int, ...]:
        return self.exponents


def graded_traces(jordan: GradedJordan) -> list[int]:
    """tr(h_p): sum of the sl2 weights of the chain vectors on level p."""
    traces = [0] * jordan.levels
    for chain in jordan.chains:
        for level, w in zip(chain.levels, chain_weights(chain)):
            traces[level] += w
    return traces


def loop_exponents(t: Sequence, model: GradedModel, jordan: Optional[GradedJordan] = None) -> LoopData:
    """Graded traces and loop exponents of D⁺(t).

    Raises:
        InvariantViolation: If the traces do not sum to 0 or an exponent exceeds 2 h^max ℓ.
    """
    jordan = jordan or graded_jordan_plus(t, model)
    traces = graded_traces(jordan)
    exponents = [b - a for a, b in zip(traces, traces[1:])]
    if sum(traces) != 0:
        logger.error("Graded traces %s do not sum to 0", traces)
        raise InvariantViolation(f"Graded traces {traces} do not sum to 0")
    bound = 2 * max(model.dims()[:jordan.levels]) * jordan.levels
    if any(abs(a) > bound for a in exponents):
        logger.error("Exponents %s exceed the bound %s", exponents, bound)
        raise InvariantViolation(f"Loop exponents {exponents} exceed 2 h^max ℓ = {bound}")
    return LoopData(tuple(traces), tuple(exponents))
