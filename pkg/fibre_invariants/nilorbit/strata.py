"""
Sampling the strata of multiplicity matrices over the panel.

Random panel functions t with integer coordinates are drawn; every sample
records the Jordan type and the multiplicity matrix of D⁺(t) in a pandas
overview. The generic stratum is the dominance maximal partition among the
samples; it is flagged when it is not unique or seen in less than half of
the samples.
"""
import json
import logging
import random
from dataclasses import dataclass

import pandas as pd

from fibre_invariants.configuration.config_model import Panel
from fibre_invariants.filtration.decomposition import GradedModel
from fibre_invariants.helpers.helpers import format_rational
from fibre_invariants.linalg import matrices as mx
from fibre_invariants.nilorbit.graded_jordan import graded_jordan_plus
from fibre_invariants.springer.partitions import Partition, dominates, forget_grading

logger = logging.getLogger(__name__)


@dataclass
class StrataReport:
    """Outcome of `sample_strata`.

    Attributes:
        overview: One row per sample: sample, t, partition, mult_matrix (JSON keys).
        summary: Sample counts per (partition, mult_matrix).
        generic_partition: Dominance maximal observed partition.
        generic_matrix: Most frequent matrix of the generic partition.
        flagged: True if the maximum is not unique or attained by fewer than half the samples.
        partitions: Forgetful images of all observed matrices.
    """

    overview: pd.DataFrame
    summary: pd.DataFrame
    generic_partition: Partition
    generic_matrix: tuple
    flagged: bool
    partitions: tuple[Partition, ...]


def random_panel_element(panel: Panel, rng: random.Random, bound: int = 10) -> tuple:
    coefficients = [mx.as_scalar(rng.randint(-bound, bound)) for _ in panel.space.basis]
    return mx.linear_combination(coefficients, panel.space.basis, panel.d)


def sample_strata(panel: Panel, model: GradedModel, n_samples: int, seed: int = 0, bound: int = 10) -> StrataReport:
    """Samples multiplicity matrices of D⁺(t) for random panel functions t.

    Args:
        panel: Reduced panel.
        model: Graded model of the reduced panel.
        n_samples: Number of samples, at least 1.
        seed: Seed of the sampler.
        bound: Coordinates of t are drawn from [-bound, bound].
    """
    if n_samples < 1:
        raise ValueError("At least one sample is required")
    rng = random.Random(seed)
    records = []
    partitions_by_key: dict[str, Partition] = {}
    matrices_by_key: dict[str, tuple] = {}
    for sample in range(n_samples):
        t = random_panel_element(panel, rng, bound)
        jordan = graded_jordan_plus(t, model)
        partition_key = matrix_key(jordan.partition)
        mult_key = matrix_key(jordan.matrix)
        partitions_by_key[partition_key] = jordan.partition
        matrices_by_key[mult_key] = jordan.matrix
        records.append({
            "sample": sample,
            "t": ",".join(format_rational(x) for x in t),
            "partition": partition_key,
            "mult_matrix": mult_key,
        })
        logger.debug("Sample %s: partition %s", sample, jordan.partition)
    overview = pd.DataFrame(records)
    summary = (
        overview.groupby(["partition", "mult_matrix"])
        .size()
        .reset_index(name="count")
        .sort_values(["count", "partition", "mult_matrix"], ascending=[False, True, True], ignore_index=True)
    )

    observed = sorted(partitions_by_key.values(), reverse=True)
    maximal = [lam for lam in observed if not any(mu != lam and dominates(mu, lam) for mu in observed)]
    generic = maximal[0]
    generic_rows = summary[summary["partition"] == matrix_key(generic)]
    generic_matrix = matrices_by_key[generic_rows.iloc[0]["mult_matrix"]]
    attained = int(generic_rows["count"].sum())
    flagged = len(maximal) > 1 or 2 * attained < n_samples
    if flagged:
        logger.warning("Generic stratum is ambiguous: maximal %s, attained %s of %s", maximal, attained, n_samples)
    partitions = tuple(sorted({forget_grading(m) for m in matrices_by_key.values()}, reverse=True))
    return StrataReport(overview, summary, generic, generic_matrix, flagged, partitions)


def matrix_key(value: tuple) -> str:
    """Compact string form of a partition or a matrix, used as a grouping key."""
    return json.dumps(value, separators=(",", ":"))
