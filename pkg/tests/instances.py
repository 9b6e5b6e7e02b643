"""Small instances shared by the tests."""
import random

from fibre_invariants.generators.blocks import Blocks
from fibre_invariants.generators.chain import Chain
from fibre_invariants.generators.general import General
from fibre_invariants.generators.rnc import Rnc


def chain_panel(d: int = 4):
    return Chain(d=d).generate(random.Random(0))


def blocks_panel(sizes=(2, 2)):
    return Blocks(sizes=sizes).generate(random.Random(0))


def rnc_panel(m: int = 3):
    return Rnc(m=m).generate(random.Random(0))


def general_panel(d: int = 7, r: int = 2, seed: int = 0):
    return General(d=d, r=r).generate(random.Random(seed))


def chain_document(d: int = 4) -> dict:
    return {
        "points": [{"label": f"z{i + 1}", "coords": [str(i)]} for i in range(d)],
        "panel": [["1"] * d, [str(i) for i in range(d)]],
    }
