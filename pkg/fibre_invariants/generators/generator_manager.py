"""
Manages the different input types of instance generators.
Can handle the following input types:
- a string with the class name of the wanted generator.
- an initialized instance of the BaseGenerator class.
- a subclass of the BaseGenerator class that needs to be initialized with the generator_args.

More information can be found in the docstring of the modul `base_generator`.
"""
import inspect
import logging
import random
from typing import Optional, Union

from fibre_invariants.configuration.config_model import Panel
from fibre_invariants.configuration.io import panel_to_document
from fibre_invariants.generators.base_generator import BaseGenerator
from fibre_invariants.helpers import helpers

logger = logging.getLogger(__name__)


class GeneratorManager:
    """Builds instances with the given generator.

    Attributes:
        generator: The generator used to build panels.
    """

    def __init__(self, generator: Union[str, type, BaseGenerator], generator_args: Optional[dict] = None):
        self.generator = self._initialize_generator(generator, generator_args or {})

    def _initialize_generator(self, generator, generator_args: dict) -> BaseGenerator:
        if isinstance(generator, BaseGenerator):
            return generator

        if inspect.isclass(generator) and issubclass(generator, BaseGenerator):
            return generator(**generator_args)

        if isinstance(generator, str):
            imported_class = helpers.import_class(
                class_name=generator,
                modul_path="fibre_invariants.generators.",
            )
            return imported_class(**generator_args)

        logger.error("Generator has to be a string, a BaseGenerator subclass or an instance")
        raise ValueError("Generator has to be a string, a BaseGenerator subclass or an instance")

    def generate_panel(self, rng: random.Random) -> Panel:
        return self.generator.generate(rng)

    def generate(self, seed: int = 0) -> dict:
        """Instance document of the generated panel."""
        return panel_to_document(self.generate_panel(random.Random(seed)))
