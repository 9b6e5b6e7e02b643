"""
Block panels spanned by the indicator functions of a partition of the points.

The panel is closed under multiplication, so the filtration stops at once
and every raising and lowering part vanishes.
"""
import random

from fibre_invariants.configuration.config_model import Configuration, Panel
from fibre_invariants.generators.base_generator import BaseGenerator
from fibre_invariants.helpers.errors import InvalidInstance


class Blocks(BaseGenerator):
    def __init__(self, sizes=(2, 2)):
        self.sizes = tuple(int(s) for s in sizes)
        if len(self.sizes) < 2 or any(s < 1 for s in self.sizes):
            raise InvalidInstance("Block panels need at least two nonempty blocks")

    def generate(self, rng: random.Random) -> Panel:
        d = sum(self.sizes)
        config = Configuration.unlabeled(d)
        indicators, start = [], 0
        for size in self.sizes:
            indicators.append([1 if start <= k < start + size else 0 for k in range(d)])
            start += size
        return Panel.from_functions(config, indicators)
