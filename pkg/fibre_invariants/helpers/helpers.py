import importlib
import json
import logging
import re
from fractions import Fraction
from typing import Any, Iterable, Union

from typeguard import typechecked

logger = logging.getLogger(__name__)

SCHEMA_VERSION = "1"


@typechecked
def parse_rational(value: Union[str, int, Fraction]) -> Fraction:
    """Parses a "p/q" string (or an int) into a Fraction.

    Decimal strings are rejected, rationals have to be given exactly.

    Raises:
        ValueError: If the string is not of the form "p" or "p/q", or q is zero.
    """
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        return Fraction(value)
    if not isinstance(value, str):
        logger.error("Not a rational: %r", value)
        raise TypeError(f"Not a rational: {value!r}")
    text = value.strip()
    if not re.fullmatch(r"[+-]?\d+(/[+-]?\d+)?", text):
        logger.error("Not an exact rational: %s", value)
        raise ValueError(f"Not an exact rational 'p/q': {value!r}")
    try:
        return Fraction(text)
    except ZeroDivisionError as e:
        logger.error("Zero denominator: %s", value)
        raise ValueError(f"Zero denominator in {value!r}") from e


def format_rational(value: Fraction) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_rational_list(text: Union[str, Iterable]) -> tuple[Fraction, ...]:
    """Parses "1,2/3,-1" or an iterable of rationals."""
    if isinstance(text, str):
        return tuple(parse_rational(part) for part in text.split(",") if part.strip())
    return tuple(parse_rational(part) for part in text)


def to_jsonable(obj: Any) -> Any:
    """Converts Fractions (recursively) to "p/q" strings and tuples to lists."""
    if isinstance(obj, Fraction):
        return format_rational(obj)
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    return obj


def dump_json(payload: dict, pretty: bool = False) -> str:
    """Deterministic JSON: schema tag, sorted keys and fixed separators."""
    document = {"schema": SCHEMA_VERSION, **to_jsonable(payload)}
    if pretty:
        return json.dumps(document, sort_keys=True, indent=2)
    return json.dumps(document, sort_keys=True, separators=(",", ":"))


def class_name_to_modul(class_name: str) -> str:
    """Converts a class name (ExampleName) to modul name (example_name).

    Class names should be written in CamelCase and modul names in snake_case.

    Args:
        class_name: Class name as string in CamelCase.

    Returns:
        Converted modul name as string in snake_case.
    """
    return "_".join(word.lower() for word in re.findall(r"[A-Z][a-z0-9]*", class_name))


def import_class(class_name: str, modul_path: str = ""):
    """Imports a class from the modul named after it in snake_case.

    Args:
        class_name: The name of the class to be loaded, CamelCase.
        modul_path: Dotted path of the package holding the modul, with trailing dot.

    Returns:
        The imported class.

    Raises:
        ModuleNotFoundError: If the modul could not be imported
        AttributeError: If the class could not be found inside the modul
    """
    logger.debug("Importing the modul %s%s", modul_path, class_name)
    modul_name = class_name_to_modul(class_name)

    try:
        imported_modul = importlib.import_module(modul_path + modul_name)
    except ModuleNotFoundError as e:
        logger.error("Modul %s not found inside the path %s: %s", modul_name, modul_path, e)
        raise e

    try:
        return getattr(imported_modul, class_name)
    except AttributeError as e:
        logger.error("Class %s not found inside the modul %s", class_name, modul_name)
        raise e
