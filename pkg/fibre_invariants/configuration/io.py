"""
Reading and writing fibre instances as JSON.

Instance documents look like

    {"points": [{"label": "z1", "coords": ["0", "1/2"]}, ...],
     "weights": ["1", "-1", ...],                        # optional
     "panel": [["1", "1", ...], ["0", "1", ...]]}

or carry a pencil instead of the panel:

    {"points": [...], "pencil": {"sections": [[...], ...], "sigma_prime": 0}}

All rationals are exact "p/q" strings.
"""
import json
import logging
import os
import pathlib
from typing import Union

from typeguard import TypeCheckError

from fibre_invariants.configuration.config_model import Configuration, Panel, panel_from_pencil
from fibre_invariants.helpers.errors import InvalidInstance
from fibre_invariants.helpers.helpers import format_rational, parse_rational, parse_rational_list
from fibre_invariants.linalg.subspace import Subspace

logger = logging.getLogger(__name__)

MALFORMED = (KeyError, IndexError, TypeError, ValueError, TypeCheckError)


def _malformed(what: str, error: Exception) -> InvalidInstance:
    logger.error("Malformed %s: %r", what, error)
    return InvalidInstance(f"Malformed {what}: {error!r}")


def load_document(source: Union[str, pathlib.Path, dict]) -> dict:
    """Returns the instance document from a dict or a path to a JSON file.

    Raises:
        FileNotFoundError: If the path does not exist.
        InvalidInstance: If the file is not valid JSON or not a JSON object.
    """
    if isinstance(source, dict):
        return source
    if not os.path.exists(source):
        logger.error("Instance file not found: %s", source)
        raise FileNotFoundError(f"Instance file not found: {source}")
    with open(source, encoding="utf-8") as file:
        try:
            document = json.load(file)
        except json.JSONDecodeError as e:
            logger.error("Instance file %s is not valid JSON: %s", source, e)
            raise InvalidInstance(f"Instance file {source} is not valid JSON: {e}") from e
    if not isinstance(document, dict):
        logger.error("Instance file %s does not hold a JSON object", source)
        raise InvalidInstance(f"Instance file {source} does not hold a JSON object")
    return document


def configuration_from_document(document: dict) -> Configuration:
    """Points, coordinates and weights of an instance document.

    Raises:
        InvalidInstance: If there are no points or an entry is missing or not an exact rational.
    """
    points = document.get("points")
    if not points:
        logger.error("Instance has no points")
        raise InvalidInstance("Instance has no points")
    try:
        labels = tuple(str(p["label"]) for p in points)
        coords = None
        if all("coords" in p for p in points):
            coords = tuple(parse_rational_list(p["coords"]) for p in points)
        weights = parse_rational_list(document["weights"]) if "weights" in document else ()
    except MALFORMED as error:
        raise _malformed("points", error) from error
    return Configuration(labels, coords, weights)


def panel_from_document(source: Union[str, pathlib.Path, dict]) -> Panel:
    """Builds the Panel of an instance document (panel rows or pencil).

    Raises:
        InvalidInstance: If the document is malformed, including an out of range sigma_prime.
    """
    document = load_document(source)
    config = configuration_from_document(document)
    if "panel" in document:
        try:
            rows = [parse_rational_list(row) for row in document["panel"]]
        except MALFORMED as error:
            raise _malformed("panel", error) from error
        if any(len(row) != config.d for row in rows):
            logger.error("Panel rows do not match the %s points", config.d)
            raise InvalidInstance("Panel rows do not match the number of points")
        return Panel(config, Subspace.span(rows, config.d))
    if "pencil" in document:
        try:
            pencil = document["pencil"]
            sections = [[parse_rational(v) for v in row] for row in pencil["sections"]]
            sigma_prime = int(pencil["sigma_prime"])
        except MALFORMED as error:
            raise _malformed("pencil", error) from error
        return panel_from_pencil(config, sections, sigma_prime)
    logger.error("Instance has neither a panel nor a pencil")
    raise InvalidInstance("Instance needs a 'panel' or a 'pencil' entry")


def panel_to_document(panel: Panel) -> dict:
    config = panel.config
    points = []
    for i, label in enumerate(config.labels):
        point = {"label": label}
        if config.coords is not None:
            point["coords"] = [format_rational(x) for x in config.coords[i]]
        points.append(point)
    document = {
        "points": points,
        "panel": [[format_rational(x) for x in row] for row in panel.space.basis],
    }
    if any(w != 1 for w in config.trace_weights):
        document["weights"] = [format_rational(w) for w in config.trace_weights]
    return document
