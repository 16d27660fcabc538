"""Exact verification suites for Prym-map computations."""

import json

from ._core import (
    Error,
    UsageError,
    adjunction_genus,
    builtin_bitangent_count,
    class_T,
    count_parities,
    fiber_relation,
    node_budget,
    run_suite_json,
    suite_names,
)

__all__ = [
    "Error",
    "UsageError",
    "adjunction_genus",
    "builtin_bitangent_count",
    "class_T",
    "count_parities",
    "fiber_relation",
    "node_budget",
    "run_suite",
    "run_suite_json",
    "suite_names",
]


def run_suite(suite, **options):
    """Run a suite and return the report as a dict."""
    return json.loads(run_suite_json(suite, **options))
