"""Parking functions on directed graphs: counting, flips and verification suites."""

import json

from ._core import (
    BudgetExceeded,
    DiGraph,
    Error,
    GraphError,
    InvalidArgument,
    ParseError,
    count,
    count_by_root_preference,
    count_completions,
    feasible_spots,
    flip,
    flip_vertex,
    formula,
    formula_names,
    is_parking_function,
    load_graph,
    minleafdist,
    parse_graph,
    path,
    spider,
    star,
    suite_names,
    tree,
    witness,
)


def run_suite(name, max_n=0, max_m=0, seed=1, timing=True):
    """Run a verification suite and return its report as a dict.

    Zero for max_n or max_m picks the suite's default.
    """
    from ._core import run_suite_json

    return json.loads(run_suite_json(name, max_n, max_m, seed, timing))


__all__ = [
    "BudgetExceeded",
    "DiGraph",
    "Error",
    "GraphError",
    "InvalidArgument",
    "ParseError",
    "count",
    "count_by_root_preference",
    "count_completions",
    "feasible_spots",
    "flip",
    "flip_vertex",
    "formula",
    "formula_names",
    "is_parking_function",
    "load_graph",
    "minleafdist",
    "parse_graph",
    "path",
    "run_suite",
    "spider",
    "star",
    "suite_names",
    "tree",
    "witness",
]
