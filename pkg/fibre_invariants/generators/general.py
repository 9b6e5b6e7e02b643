"""
General position points of A^r with the panel of affine functions.
"""
import logging
import random

from fibre_invariants.configuration.config_model import Configuration, Panel
from fibre_invariants.generators.base_generator import BaseGenerator
from fibre_invariants.helpers.errors import InvalidInstance

logger = logging.getLogger(__name__)


class General(BaseGenerator):
    """d random integer points of A^r; the panel is spanned by 1 and the coordinate functions.

    Attributes:
        d: Number of points.
        r: Dimension of the affine space, the panel has dimension r + 1.
        bound: Coordinates are drawn from [-bound, bound].
    """

    def __init__(self, d: int = 7, r: int = 2, bound: int = 100):
        if r < 1 or d < r + 1:
            logger.error("General instance with d=%s, r=%s", d, r)
            raise InvalidInstance("General instances need r >= 1 and d >= r + 1")
        self.d = d
        self.r = r
        self.bound = bound

    def generate(self, rng: random.Random) -> Panel:
        coords = []
        while len(coords) < self.d:
            point = tuple(rng.randint(-self.bound, self.bound) for _ in range(self.r))
            if point not in coords:
                coords.append(point)
        config = Configuration.unlabeled(self.d, coords=tuple(coords))
        functions = [[point[i] for point in coords] for i in range(self.r)]
        return Panel.from_functions(config, functions)
