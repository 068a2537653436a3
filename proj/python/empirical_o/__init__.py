"""Empirical complexity estimation for quicksort over random inputs."""

from ._core import (
    DistributionSpec,
    aggregate,
    all_classes,
    fit,
    load_fixture_table1,
    quicksort,
    run_experiment,
    sample,
    select_bound,
    trial_seed,
)

__all__ = [
    "DistributionSpec",
    "aggregate",
    "all_classes",
    "fit",
    "load_fixture_table1",
    "quicksort",
    "run_experiment",
    "sample",
    "select_bound",
    "trial_seed",
]
