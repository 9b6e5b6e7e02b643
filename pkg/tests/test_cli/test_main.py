import json
from fractions import Fraction
from unittest import mock

import pytest

from fibre_invariants.commands import COMMANDS
from fibre_invariants.helpers.errors import DegenerateRestriction
from fibre_invariants.lie.lie_algebra import SIMPLE
from fibre_invariants.lie.torelli import STRONG
from fibre_invariants.main import main, run_record
from tests.instances import chain_document


def run(capsys, argv):
    code = main(argv)
    return code, json.loads(capsys.readouterr().out)


@pytest.fixture
def instance(tmp_path):
    path = tmp_path / "chain.json"
    path.write_text(json.dumps(chain_document(4)))
    return str(path)


# Test gen and analyze ----------------------------------------------------------------------------

def test_gen_output_is_an_instance(capsys, tmp_path):
    code, document = run(capsys, ["gen", "chain", "--generator_args", '{"d": 5}', "--seed", "2"])
    assert code == 0
    assert document["schema"] == "1"
    assert len(document["points"]) == 5
    assert document["generator"] == {"name": "Chain", "args": {"d": 5}}
    assert document["run"]["command"] == "gen"
    assert document["run"]["seed"] == 2

    path = tmp_path / "gen.json"
    path.write_text(json.dumps(document))
    code, payload = run(capsys, ["analyze", "--input", str(path)])
    assert code == 0
    assert payload["filtration"]["hilbert_vector"] == [2, 1, 1, 1, 0]


def test_gen_is_deterministic(capsys):
    _, first = run(capsys, ["gen", "general", "--seed", "7"])
    _, second = run(capsys, ["gen", "general", "--seed", "7"])
    assert first == second
    assert first["generator"]["args"] == {"d": 7, "r": 2, "bound": 100}


def test_analyze_chain(capsys, instance):
    code, payload = run(capsys, ["analyze", "--input", instance])
    assert code == 0
    assert (payload["d"], payload["r"]) == (4, 1)
    assert payload["rescaling"] is None
    assert payload["reduction"]["d_prime"] == 4
    assert payload["lie"]["dim"] == 16
    assert payload["lie"]["classification"] == SIMPLE
    assert payload["torelli"]["index"] == STRONG
    assert payload["run"] == run_record("analyze", 0, chain_document(4))


# Test jordan, mu00, loop and macdonald -----------------------------------------------------------

def test_jordan_with_given_t(capsys, instance):
    code, payload = run(capsys, ["jordan", "--input", instance, "--t", "0,1,2,3", "--samples", "5"])
    assert code == 0
    assert payload["t"] == ["0", "1", "2", "3"]
    assert payload["plus"]["partition"] == [3, 1]
    assert payload["minus"]["partition"] == [3, 1]
    assert payload["bigrading"]["weight_dims"] == [1, 0, 2, 0, 1]
    assert payload["truncation"]["truncated"] == [2]
    assert payload["truncation"]["m1_identity"] is True
    assert sum(row["count"] for row in payload["strata"]["summary"]) == 5


def test_mu00_and_loop(capsys, instance):
    code, split = run(capsys, ["mu00", "--input", instance])
    assert code == 0
    assert split["mu00"] == 1
    assert split["Z1"] == ["z1"]
    code, loop = run(capsys, ["loop", "--input", instance, "--t", "0,1,2,3"])
    assert code == 0
    assert loop["exponents"] == [2, 2]


def test_macdonald(capsys):
    code, payload = run(capsys, ["macdonald", "--mu", "2,1"])
    assert code == 0
    assert payload["orbit_dim"] == 4
    assert payload["springer_fibre_dim"] == 1
    assert {tuple(item["lambda"]): item["multiplicity"] for item in payload["at_one"]} == {(3,): 1, (2, 1): 1}
    assert payload["run"]["input_hash"] == run_record("macdonald", 0, {"mu": [2, 1], "n": 3})["input_hash"]


def test_macdonald_weight_mismatch_exits_with_2(capsys):
    code, payload = run(capsys, ["macdonald", "--mu", "2,1", "--n", "5"])
    assert code == 2
    assert payload["error"] == "WeightMismatch"


# Test equations and verify -----------------------------------------------------------------------

def write_equations(capsys, instance, tmp_path, extra):
    code, payload = run(capsys, ["equations", "--input", instance, "--t", "0,1,2,3", *extra])
    assert code == 0
    path = tmp_path / "equations.json"
    path.write_text(json.dumps(payload))
    return payload, str(path)


def test_equations_round_trip_through_verify(capsys, instance, tmp_path):
    payload, path = write_equations(capsys, instance, tmp_path, ["--kind", "rank_bounded", "--q", "2", "--p", "2"])
    assert len(payload["equation_sets"]) == 1
    assert len(payload["equation_sets"][0]["polys"]) == 1
    code, result = run(capsys, ["verify", "--equations", path, "--input", instance])
    assert code == 0
    assert result["verified"] is True


def test_tampered_equations_exit_with_3(capsys, instance, tmp_path):
    payload, path = write_equations(capsys, instance, tmp_path, ["--kind", "rank_bounded", "--q", "2", "--p", "2"])
    term = payload["equation_sets"][0]["polys"][0]["terms"][0]
    term["coef"] = str(Fraction(term["coef"]) + 1)
    with open(path, "w") as file:
        json.dump(payload, file)
    code, result = run(capsys, ["verify", "--equations", path])
    assert code == 3
    assert result["error"] == "CertificateFailure"


def test_verify_checks_the_point_labels(capsys, instance, tmp_path):
    _, path = write_equations(capsys, instance, tmp_path, ["--kind", "monomial", "--degree-cap", "4"])
    other = tmp_path / "other.json"
    document = chain_document(4)
    for point in document["points"]:
        point["label"] = "x" + point["label"]
    other.write_text(json.dumps(document))
    code, result = run(capsys, ["verify", "--equations", path, "--input", str(other)])
    assert code == 2
    assert result["error"] == "ConfigMismatch"


def test_scroll_without_minors_carries_a_note(capsys, instance, tmp_path):
    payload, _ = write_equations(capsys, instance, tmp_path, ["--kind", "scroll"])
    assert payload["adjoint_coordinates"]["rows"] == [2]
    assert payload["equation_sets"][0]["polys"] == []
    assert payload["equation_sets"][0]["notes"]


# Test error handling -----------------------------------------------------------------------------

def test_invalid_instance_exits_with_2(capsys, tmp_path):
    path = tmp_path / "bad.json"
    document = chain_document(3)
    document["points"][1]["label"] = "z1"
    path.write_text(json.dumps(document))
    code, result = run(capsys, ["analyze", "--input", str(path)])
    assert code == 2
    assert result == {"schema": "1", "error": "InvalidInstance", "message": "Point labels have to be distinct"}


def corrupted_chain(entry, value):
    document = chain_document(3)
    if entry == "panel":
        document["panel"][1][2] = value
    elif value is None:
        document["points"][0].pop(entry)
    else:
        document["points"][2][entry] = value
    return document


@pytest.mark.parametrize(
    ("entry", "value"),
    [
        ("panel", "abc"),
        ("panel", "1/0"),
        ("label", None),
        ("coords", ["two"]),
    ]
)
def test_malformed_instance_exits_with_2(capsys, tmp_path, entry, value):
    document = corrupted_chain(entry, value)
    path = tmp_path / "malformed.json"
    path.write_text(json.dumps(document))
    code, result = run(capsys, ["analyze", "--input", str(path)])
    assert code == 2
    assert result["error"] == "InvalidInstance"
    assert result["message"].startswith("Malformed")


def test_degenerate_restriction_reports_the_index(capsys, instance):
    def degenerate(args):
        raise DegenerateRestriction(2)

    with mock.patch.dict(COMMANDS, {"analyze": degenerate}):
        code, result = run(capsys, ["analyze", "--input", instance])
    assert code == 2
    assert result["index"] == 2
    assert result["error"] == "DegenerateRestriction"
