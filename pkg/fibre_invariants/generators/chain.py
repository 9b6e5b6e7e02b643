"""
Chain panels: points on a line with the panel spanned by 1 and the coordinate.
"""
import random
from typing import Optional

from fibre_invariants.configuration.config_model import Configuration, Panel
from fibre_invariants.generators.base_generator import BaseGenerator
from fibre_invariants.helpers.errors import InvalidInstance
from fibre_invariants.helpers.helpers import parse_rational_list


class Chain(BaseGenerator):
    """The values x(z) are 0, 1, ..., d-1 unless given; H̃₋ᵢ are the polynomials of degree <= i."""

    def __init__(self, d: int = 4, values: Optional[list] = None):
        self.values = parse_rational_list(values) if values is not None else tuple(range(d))
        if len(self.values) < 2 or len(set(self.values)) != len(self.values):
            raise InvalidInstance("A chain panel needs at least two distinct values")

    def generate(self, rng: random.Random) -> Panel:
        d = len(self.values)
        config = Configuration.unlabeled(d, coords=tuple((x,) for x in self.values))
        return Panel.from_functions(config, [self.values])
