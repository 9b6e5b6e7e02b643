"""
Complete intersection type instances on a rational normal curve.

2m points s = 1, ..., 2m of the line, mapped to the rational normal curve of
degree m-1, with the panel spanned by 1, s, ..., s^(m-1). The Hilbert vector
is (m, m-1, 1, 0).
"""
import logging
import random

from fibre_invariants.configuration.config_model import Configuration, Panel
from fibre_invariants.generators.base_generator import BaseGenerator
from fibre_invariants.helpers.errors import InvalidInstance

logger = logging.getLogger(__name__)


class Rnc(BaseGenerator):
    def __init__(self, m: int = 3, shuffle: bool = False):
        if m < 2:
            logger.error("Rational normal curve instance with m=%s", m)
            raise InvalidInstance("Rational normal curve instances need m >= 2")
        self.m = m
        self.shuffle = shuffle

    def generate(self, rng: random.Random) -> Panel:
        params = list(range(1, 2 * self.m + 1))
        if self.shuffle:
            rng.shuffle(params)
        config = Configuration.unlabeled(2 * self.m, coords=tuple((s,) for s in params))
        return Panel.from_functions(config, [[s ** j for s in params] for j in range(1, self.m)])
