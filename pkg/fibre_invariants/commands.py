"""
The subcommands of the fibre_invariants entry point.

Every command takes the parsed arguments and returns a JSON ready payload;
`main` adds the schema tag and the run record and maps errors to exit codes.
"""
import json
import logging
import pathlib

from fibre_invariants.checks.certificates import verify_document
from fibre_invariants.configuration.io import configuration_from_document, load_document, panel_from_document
from fibre_invariants.equations.monomial import all_rank_bounded_relations, monomial_relations, rank_bounded_relations
from fibre_invariants.equations.mu00 import mu00_split
from fibre_invariants.equations.quadrics import rank4_quadrics
from fibre_invariants.equations.scrolls import adjoint_coordinates, scroll_equations
from fibre_invariants.equations.sl2_basis import sl2_basis
from fibre_invariants.fibre import FibreAnalysis
from fibre_invariants.filtration.decomposition import delta_heads_nonzero
from fibre_invariants.generators.generator_manager import GeneratorManager
from fibre_invariants.helpers.errors import ConfigMismatch
from fibre_invariants.lie.lie_algebra import blocks_refine
from fibre_invariants.nilorbit.bigrading import bigrading
from fibre_invariants.nilorbit.graded_jordan import check_reflection, graded_jordan_minus, graded_jordan_plus
from fibre_invariants.nilorbit.loop import loop_exponents
from fibre_invariants.nilorbit.strata import sample_strata
from fibre_invariants.nilorbit.truncation import truncate
from fibre_invariants.springer.macdonald import macdonald_value, orbit_dim, springer_fibre_dim
from fibre_invariants.springer.partitions import weight

logger = logging.getLogger(__name__)

DEFAULT_GENERATOR_ARGS = pathlib.Path(__file__).parents[1] / "config" / "generator_args.json"


def _fibre(args) -> tuple[dict, FibreAnalysis]:
    document = load_document(args.input)
    return document, FibreAnalysis(panel_from_document(document), seed=args.seed, max_attempts=args.max_attempts)


def _basis(subspace) -> list:
    return [list(v) for v in subspace.basis]


def _jordan_to_dict(jordan) -> dict:
    return {
        "partition": list(jordan.partition),
        "matrix": [list(row) for row in jordan.matrix],
        "graded_partitions": [list(lam) for lam in jordan.graded_partitions()],
    }


def cmd_gen(args) -> tuple[dict, dict]:
    """Synthetic instance of the chosen generator, defaults merged with --generator_args."""
    defaults = args.defaults
    if not defaults and DEFAULT_GENERATOR_ARGS.exists():
        with open(DEFAULT_GENERATOR_ARGS) as file:
            defaults = json.load(file)
    class_name = args.kind.capitalize()
    generator_args = {**defaults.get(class_name, {}), **args.generator_args}
    logger.info("Generating %s instance with %s", class_name, generator_args)
    document = GeneratorManager(class_name, generator_args).generate(args.seed)
    document["generator"] = {"name": class_name, "args": generator_args}
    return {"generator": class_name, "args": generator_args}, document


def cmd_analyze(args) -> tuple[dict, dict]:
    """Filtration, decomposition, reduction, Lie report and Torelli index of an instance."""
    document, fibre = _fibre(args)
    report = fibre.lie_report()
    torelli = fibre.torelli()
    labels = fibre.working_panel.config.labels
    z_blocks = report.blocks_on(fibre.reduction)
    payload = {
        "d": fibre.panel.d,
        "r": fibre.panel.r,
        "filtration": {
            "length": fibre.length,
            "dims": list(fibre.filtration.dims()),
            "hilbert_vector": list(fibre.filtration.hilbert_vector),
        },
        "rescaling": None if fibre.rescaling is None else list(fibre.rescaling),
        "decomposition": {
            "dims": list(fibre.model.dims()),
            "summands": [_basis(s) for s in fibre.model.summands],
            "delta_heads_nonzero": delta_heads_nonzero(fibre.model),
        },
        "reduction": {
            "d_prime": fibre.reduction.d_prime,
            "blocks": fibre.reduction.labels(fibre.working_panel.config),
        },
        "lie": {
            "dim": report.algebra_dim,
            "center_dim": report.center_dim,
            "blocks": [[labels[i] for i in block] for block in z_blocks],
            "block_dims": list(report.block_dims),
            "blocks_refine_reduction": blocks_refine(report, fibre.reduction.blocks, z_blocks),
            "classification": report.classification,
            "lambda_one": list(report.lambda_one),
            "lambda_two": list(report.lambda_two),
        },
        "torelli": {
            "index": torelli.index,
            "kernel_dims": list(torelli.kernel_dims),
            "total_kernel_dim": torelli.total_kernel_dim,
        },
    }
    return document, payload


def cmd_jordan(args) -> tuple[dict, dict]:
    """Graded Jordan data of D±(t), the bigrading and the truncated partition.

    With --samples the strata of random operators are summarized as well.
    """
    document, fibre = _fibre(args)
    ambient_t, t = fibre.operator(args.t)
    plus = graded_jordan_plus(t, fibre.reduced_model)
    minus = graded_jordan_minus(t, fibre.reduced_model)
    check_reflection(plus, minus)
    grading = bigrading(t, fibre.reduced_model)
    truncation = truncate(ambient_t, fibre.model, minus=minus, mu00=plus.mu(0, 0))
    payload = {
        "t": list(t),
        "plus": _jordan_to_dict(plus),
        "minus": _jordan_to_dict(minus),
        "bigrading": {
            "table": [list(row) for row in grading.table],
            "weight_dims": list(grading.weight_dims),
            "upper_filtration_dims": [w.dim for w in grading.upper_filtration],
            "lower_filtration_dims": [w.dim for w in grading.lower_filtration],
        },
        "truncation": {
            "partition": list(truncation.partition),
            "truncated": list(truncation.truncated),
            "s": truncation.s,
            "s_prime": truncation.s_prime,
            "m1_identity": truncation.m1_identity,
        },
    }
    if args.samples > 0:
        strata = sample_strata(fibre.reduced, fibre.reduced_model, args.samples, seed=args.seed)
        payload["strata"] = {
            "generic_partition": list(strata.generic_partition),
            "generic_matrix": [list(row) for row in strata.generic_matrix],
            "flagged": strata.flagged,
            "partitions": [list(lam) for lam in strata.partitions],
            "summary": json.loads(strata.summary.to_json(orient="records")),
        }
    return document, payload


def cmd_equations(args) -> tuple[dict, dict]:
    """Certified equation sets of the requested kind."""
    document, fibre = _fibre(args)
    payload = {"kind": args.kind}
    if args.kind == "rank4":
        sets = [rank4_quadrics(fibre.reduced, fibre.reduced_model)]
    elif args.kind == "scroll":
        ambient_t, _ = fibre.operator(args.t)
        coordinates = adjoint_coordinates(ambient_t, fibre.model, fibre.working_panel.config.labels)
        payload["t"] = list(ambient_t)
        payload["adjoint_coordinates"] = coordinates.to_dict()
        sets = [scroll_equations(coordinates, mixed=args.mixed)]
    else:
        _, t = fibre.operator(args.t)
        basis = sl2_basis(t, fibre.reduced_model, fibre.reduced.config.labels)
        payload["t"] = list(t)
        payload["sl2_basis"] = basis.to_dict()
        if args.kind == "monomial":
            relations = monomial_relations(basis, degree_cap=args.degree_cap)
            sets = [relations.homogeneous, relations.inhomogeneous]
        elif args.q is not None and args.p is not None:
            sets = [rank_bounded_relations(basis, args.q, args.p)]
        else:
            sets = all_rank_bounded_relations(basis)
    payload["equation_sets"] = [eqs.to_dict() for eqs in sets]
    logger.info("%s equation sets with %s polynomials", len(sets), sum(len(eqs) for eqs in sets))
    return document, payload


def cmd_mu00(args) -> tuple[dict, dict]:
    """Split of Z′ by the zero set of a panel function."""
    document, fibre = _fibre(args)
    t = None if args.t is None else fibre.reduction.push(fibre.transport(args.t))
    split = mu00_split(fibre.reduced, fibre.reduced_model, t=t)
    return document, split.to_dict()


def cmd_loop(args) -> tuple[dict, dict]:
    document, fibre = _fibre(args)
    _, t = fibre.operator(args.t)
    loop = loop_exponents(t, fibre.reduced_model)
    return document, {"t": list(t), "traces": list(loop.traces), "exponents": list(loop.exponents), "coweight": list(loop.coweight)}


def cmd_macdonald(args) -> tuple[dict, dict]:
    """Orbit dimension, Springer fibre dimension and graded character of a partition."""
    mu = args.mu
    n = weight(mu) if args.n is None else args.n
    value = macdonald_value(mu, n)
    payload = {
        "mu": list(mu),
        "orbit_dim": orbit_dim(mu, n),
        "springer_fibre_dim": springer_fibre_dim(mu),
        "value": value.to_dict(),
        "at_one": [{"lambda": list(lam), "multiplicity": m} for lam, m in value.at_one().items()],
    }
    return {"mu": list(mu), "n": n}, payload


def cmd_verify(args) -> tuple[dict, dict]:
    """Exact re-evaluation of the equation sets of an equations output.

    Raises:
        ConfigMismatch: If the equations name points the instance does not have.
        CertificateFailure: If a polynomial does not vanish at a point.
    """
    document = load_document(args.equations)
    sets = document.get("equation_sets", [document])
    if args.input is not None:
        instance_labels = set(configuration_from_document(load_document(args.input)).labels)
        for eqs in sets:
            missing = [p["label"] for p in eqs["points"] if p["label"] not in instance_labels]
            if missing:
                logger.error("Points %s are not in the instance", missing)
                raise ConfigMismatch(f"Points {missing} of the equations are not points of the instance")
    results = [verify_document(eqs) for eqs in sets]
    return document, {"verified": all(r["verified"] for r in results), "equation_sets": results}


COMMANDS = {
    "gen": cmd_gen,
    "analyze": cmd_analyze,
    "jordan": cmd_jordan,
    "equations": cmd_equations,
    "mu00": cmd_mu00,
    "loop": cmd_loop,
    "macdonald": cmd_macdonald,
    "verify": cmd_verify,
}
