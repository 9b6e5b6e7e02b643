"""
Provides an abstract base class for instance generators. Custom generators
subclass `BaseGenerator` and implement `generate`, which builds a panel on
a configuration from a seeded random number generator.

To be found by name, a generator has to be saved in a file of the
`generators` module. The class name has to be in CamelCase and the file
the exactly same name in snake_case.

Example:
    class MyPanel(BaseGenerator):
        def generate(self, rng):
            config = Configuration.unlabeled(5)
            return Panel.from_functions(config, [[rng.randint(0, 9) for _ in range(5)]])

# Saved in a file named my_panel.py
"""
from abc import ABC, abstractmethod
import random

from fibre_invariants.configuration.config_model import Panel


class BaseGenerator(ABC):
    """Interface of the synthetic instance generators."""

    @abstractmethod
    def generate(self, rng: random.Random) -> Panel:
        """Builds a panel.

        Args:
            rng: Seeded random number generator; generators without randomness ignore it.
        """
        raise NotImplementedError("Must override generate")
