"""
Disjoint unions of instances with the direct sum of their panels.
"""
import logging
import random
from typing import Optional

from fibre_invariants.configuration.config_model import Configuration, Panel
from fibre_invariants.generators.base_generator import BaseGenerator
from fibre_invariants.generators.generator_manager import GeneratorManager
from fibre_invariants.helpers.errors import InvalidInstance
from fibre_invariants.linalg import matrices as mx
from fibre_invariants.linalg.subspace import Subspace

logger = logging.getLogger(__name__)


class Union(BaseGenerator):
    """Block diagonal union of the instances of other generators.

    Attributes:
        parts: List of {"generator": <class name>, "args": {...}}.
    """

    def __init__(self, parts: Optional[list] = None):
        self.parts = parts or [{"generator": "Chain", "args": {"d": 4}}, {"generator": "General", "args": {"d": 4, "r": 1}}]
        if len(self.parts) < 2:
            raise InvalidInstance("A union needs at least two parts")

    def generate(self, rng: random.Random) -> Panel:
        panels = [GeneratorManager(part["generator"], part.get("args", {})).generate_panel(rng) for part in self.parts]
        d = sum(p.d for p in panels)
        labels, weights, rows, offset = [], [], [], 0
        for index, panel in enumerate(panels):
            labels.extend(f"{chr(ord('a') + index)}{label}" for label in panel.config.labels)
            weights.extend(panel.config.trace_weights)
            for row in panel.space.basis:
                rows.append((mx.ZERO,) * offset + row + (mx.ZERO,) * (d - offset - panel.d))
            offset += panel.d
        logger.debug("Union of %s panels on %s points", len(panels), d)
        config = Configuration(tuple(labels), trace_weights=tuple(weights))
        return Panel(config, Subspace.span(rows, d))
