import argparse
import json
from fractions import Fraction

import pytest

from fibre_invariants.helpers.argparser import load_dict, load_partition, load_rationals, main_argparser


# Test load_dict ---------------------------------------------------------------------------------

def test_load_dict_from_dict_string_and_file(tmp_path):
    path = tmp_path / "args.json"
    path.write_text(json.dumps({"d": 5}))
    assert load_dict({"d": 4}) == {"d": 4}
    assert load_dict('{"d": 6}') == {"d": 6}
    assert load_dict(str(path)) == {"d": 5}
    assert load_dict("") == {}
    assert load_dict(None) == {}


@pytest.mark.parametrize("value", ["{not json", "missing.json", "d=5"])
def test_load_dict_rejects(value):
    with pytest.raises(argparse.ArgumentTypeError):
        load_dict(value)


# Test list arguments ----------------------------------------------------------------------------

def test_load_rationals():
    assert load_rationals("0,1/2,-3") == (Fraction(0), Fraction(1, 2), Fraction(-3))
    with pytest.raises(argparse.ArgumentTypeError):
        load_rationals("0.5")


@pytest.mark.parametrize(("text", "expected"), [("3,2,2", (3, 2, 2)), ("1", (1,))])
def test_load_partition(text, expected):
    assert load_partition(text) == expected


@pytest.mark.parametrize("text", ["1,2", "2,0", "a"])
def test_load_partition_rejects(text):
    with pytest.raises(argparse.ArgumentTypeError):
        load_partition(text)


# Test main_argparser ----------------------------------------------------------------------------

def test_subcommands_get_their_arguments():
    parser = main_argparser()
    args = parser.parse_args(["equations", "--input", "x.json", "--kind", "rank_bounded", "--q", "2", "--p", "2", "--t", "0,1"])
    assert args.command == "equations"
    assert (args.kind, args.q, args.p) == ("rank_bounded", 2, 2)
    assert args.t == (Fraction(0), Fraction(1))
    assert args.seed == 0 and args.degree_cap == 4

    args = parser.parse_args(["gen", "chain", "--generator_args", '{"d": 5}', "--seed", "3"])
    assert (args.kind, args.generator_args, args.seed) == ("chain", {"d": 5}, 3)

    args = parser.parse_args(["macdonald", "--mu", "2,1"])
    assert args.mu == (2, 1) and args.n is None


def test_instance_is_required():
    with pytest.raises(SystemExit):
        main_argparser().parse_args(["analyze"])
