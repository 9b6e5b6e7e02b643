"""
Orchestrates the fibrewise computations for one instance.

`FibreAnalysis` builds the filtration and graded model of a panel (moving to
a rescaled panel when the trace form degenerates), reduces the configuration
to Z′ and hands the reduced and ambient models to the Lie, Jordan and
equation modules.
"""
import logging
import random
from typing import Optional, Sequence

from fibre_invariants.configuration.config_model import FnVec, Panel
from fibre_invariants.filtration.decomposition import decompose_with_rescaling, orthogonal_decomposition
from fibre_invariants.filtration.filtration import compute_filtration, reduce, reduced_panel
from fibre_invariants.helpers.errors import NotInPanel
from fibre_invariants.lie.lie_algebra import LieReport, center_and_blocks, classify, generate_lie_algebra
from fibre_invariants.lie.torelli import TorelliReport, torelli_index
from fibre_invariants.linalg import matrices as mx
from fibre_invariants.nilorbit.strata import random_panel_element

logger = logging.getLogger(__name__)


class FibreAnalysis:
    """Filtration, graded models and reduction of a panel.

    Attributes:
        panel: The panel as given.
        working_panel: The panel the models are built from; differs from `panel`
            only when a rescaling was needed.
        rescaling: The function s of the rescaling, None if none was applied.
        filtration: Filtration of the working panel.
        model: Graded model of the working panel on Z.
        reduction: Blocks of points of Z forming Z′.
        reduced: The panel pushed down to Z′.
        reduced_model: Graded model on Z′.
    """

    def __init__(self, panel: Panel, seed: int = 0, max_attempts: int = 20):
        self.panel = panel
        self.seed = seed
        decomposition = decompose_with_rescaling(panel, seed=seed, max_attempts=max_attempts)
        self.working_panel = decomposition.panel
        self.rescaling = decomposition.rescaling
        self.filtration = decomposition.filtration
        self.model = decomposition.model
        self.reduction = reduce(self.working_panel, self.filtration)
        self.reduced = reduced_panel(self.working_panel, self.reduction)
        self.reduced_model = orthogonal_decomposition(self.reduced, compute_filtration(self.reduced))
        self._lie_report: Optional[LieReport] = None
        logger.debug("Fibre with hilbert vector %s and %s blocks", self.filtration.hilbert_vector, self.reduction.d_prime)

    @property
    def length(self) -> int:
        return self.filtration.length

    def transport(self, t: Sequence) -> FnVec:
        """A function of the given panel as a function of the working panel.

        Raises:
            NotInPanel: If t is not a panel function.
        """
        t = mx.vector(t)
        if len(t) != self.panel.d or not self.panel.contains(t):
            logger.error("Function is not an element of the panel")
            raise NotInPanel("t has to lie in the panel")
        if self.rescaling is None:
            return t
        return tuple(x / (1 + s) for x, s in zip(t, self.rescaling))

    def operator(self, t: Optional[Sequence] = None, seed: Optional[int] = None) -> tuple[FnVec, FnVec]:
        """(t on Z, t on Z′) for a given t or a seeded random panel function."""
        if t is None:
            rng = random.Random(self.seed if seed is None else seed)
            reduced_t = random_panel_element(self.reduced, rng)
            return self.reduction.pull(reduced_t), reduced_t
        ambient = self.transport(t)
        return ambient, self.reduction.push(ambient)

    def lie_report(self) -> LieReport:
        if self._lie_report is None:
            algebra = generate_lie_algebra(self.reduced, self.reduced_model)
            self._lie_report = classify(center_and_blocks(algebra), self.reduced, self.reduced_model)
        return self._lie_report

    def torelli(self) -> TorelliReport:
        return torelli_index(self.reduced, self.reduced_model, self.lie_report().center_dim)
