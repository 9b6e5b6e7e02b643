"""
This file includes the argument parsers of the fibre_invariants command line.

The parsers are composed from parent parsers:
- base_args: Arguments shared by all subcommands.
- args_for_instance: The instance file to analyse.
- args_for_operator: The panel function t, or the seed and sample count to draw it.
- args_for_equations: Which equations to generate.
- args_for_generator: Generator name and arguments for synthetic instances.
"""
import argparse
import json
import logging
import os
from typing import Union

from typeguard import typechecked

from fibre_invariants.helpers.helpers import parse_rational_list

logger = logging.getLogger(__name__)

GENERATOR_KINDS = ["general", "chain", "blocks", "rnc", "union"]
EQUATION_KINDS = ["monomial", "rank_bounded", "rank4", "scroll"]


@typechecked
def base_args():
    """Arguments needed by every subcommand."""
    parser = argparse.ArgumentParser(add_help=False)
    parser.add_argument("--seed", type=int, default=0, help="Seed of every random choice")
    parser.add_argument("--pretty", action="store_true", help="Indent the JSON output")
    parser.add_argument("--json", action="store_true", help="Compact JSON output, the default")
    parser.add_argument("--verbose", action="store_true", help="Log at DEBUG level on stderr")
    parser.add_argument("--max_attempts", type=int, default=20, help="Rescaling attempts when the trace form degenerates")
    return parser


@typechecked
def args_for_instance():
    parser = argparse.ArgumentParser(add_help=False)
    parser.add_argument("--input", required=True, help="Path to the JSON instance file")
    return parser


@typechecked
def args_for_operator():
    """Subgroup of arguments choosing the panel function t"""
    parser = argparse.ArgumentParser(add_help=False)
    parser.add_argument("--t", type=load_rationals, default=None, help="Panel function as comma separated 'p/q' values, random if empty")
    parser.add_argument("--samples", type=int, default=0, help="Number of random t to sample for the strata overview")
    return parser


@typechecked
def args_for_equations():
    parser = argparse.ArgumentParser(add_help=False)
    parser.add_argument("--kind", choices=EQUATION_KINDS, default="monomial", help="Equations to generate")
    parser.add_argument("--degree-cap", dest="degree_cap", type=int, default=4, help="Largest monomial degree")
    parser.add_argument("--q", type=int, default=None, help="Chain size minus one for rank bounded relations, all if empty")
    parser.add_argument("--p", type=int, default=None, help="Head level for rank bounded relations")
    parser.add_argument("--mixed", action="store_true", help="Minors of the concatenated scroll matrix")
    return parser


@typechecked
def args_for_generator():
    parser = argparse.ArgumentParser(add_help=False)
    parser.add_argument("kind", choices=GENERATOR_KINDS, help="Generator of the synthetic instance")
    parser.add_argument("--generator_args", type=load_dict, default={}, help="Dict, JSON string or path to a JSON file with the generator arguments")
    parser.add_argument("--defaults", type=load_dict, default={}, help="JSON file with default arguments per generator, config/generator_args.json if empty")
    return parser


@typechecked
def main_argparser():
    """Parser of the fibre_invariants entry point with one subparser per command."""
    parser = argparse.ArgumentParser(description="Exact fibrewise invariants of point configurations with a panel.")
    subparsers = parser.add_subparsers(dest="command", required=True)
    subparsers.add_parser("gen", parents=[args_for_generator(), base_args()], help="Generate a synthetic instance")
    subparsers.add_parser("analyze", parents=[args_for_instance(), base_args()], help="Filtration, decomposition, Lie report and Torelli index")
    subparsers.add_parser("jordan", parents=[args_for_instance(), args_for_operator(), base_args()], help="Graded Jordan data of D±(t)")
    subparsers.add_parser(
        "equations",
        parents=[args_for_instance(), args_for_operator(), args_for_equations(), base_args()],
        help="Equations vanishing on the configuration",
    )
    subparsers.add_parser("mu00", parents=[args_for_instance(), args_for_operator(), base_args()], help="Split along the zero set of t")
    subparsers.add_parser("loop", parents=[args_for_instance(), args_for_operator(), base_args()], help="Loop exponents of t")
    macdonald = subparsers.add_parser("macdonald", parents=[base_args()], help="Springer character of a partition")
    macdonald.add_argument("--mu", type=load_partition, required=True, help="Partition as comma separated parts")
    macdonald.add_argument("--n", type=int, default=None, help="Weight of the partition, |mu| if empty")
    verify = subparsers.add_parser("verify", parents=[base_args()], help="Re-evaluate an equation set")
    verify.add_argument("--equations", required=True, help="Path to the JSON output of the equations command")
    verify.add_argument("--input", default=None, help="Instance file the equations were generated from")
    return parser


@typechecked
def load_dict(input: Union[str, dict, None]) -> dict:
    """Load arguments from a dict, a JSON object string or a JSON file.

    Raises:
        argparse.ArgumentTypeError: If the input is none of these.
    """
    if isinstance(input, dict):
        return input

    if input == "" or input is None:
        return {}

    if input.strip().startswith("{"):
        try:
            return json.loads(input)
        except json.JSONDecodeError as e:
            raise argparse.ArgumentTypeError(f"{input} is not a valid JSON object: {e}")

    if input.endswith(".json"):
        if not os.path.exists(input):
            raise argparse.ArgumentTypeError(f"{input} file not found.")

        with open(input) as file:
            return json.load(file)

    raise argparse.ArgumentTypeError(f"{input} is not a path to a JSON file or dict containing the args.")


@typechecked
def load_rationals(input: str) -> tuple:
    try:
        return parse_rational_list(input)
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"{input} is not a list of rationals: {e}")


@typechecked
def load_partition(input: str) -> tuple:
    try:
        parts = tuple(int(part) for part in input.split(",") if part.strip())
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"{input} is not a partition: {e}")
    if any(p <= 0 for p in parts) or list(parts) != sorted(parts, reverse=True):
        raise argparse.ArgumentTypeError(f"{input} is not a weakly decreasing list of positive integers")
    return parts
