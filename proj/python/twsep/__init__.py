"""Tree decompositions of width < (7915/139) a from balanced separations of order <= a."""

import json

from ._twsep import (  # noqa: F401
    Decomposition,
    Graph,
    OracleFailure,
    TwsepError,
    build_w_sequence,
    construct,
    construct_theorem2,
    disjoint_paths,
    export_dot,
    find_min_feasible_a,
    min_balanced_separation,
    parse_gr,
    parse_td,
    separation_number,
    treewidth_exact,
    validate_decomposition,
    write_gr,
    write_td,
)
from ._twsep import run_suite_json as _run_suite_json


def run_suite(config):
    """Run a generator corpus described by a dict; returns the report as a dict."""
    return json.loads(_run_suite_json(json.dumps(config)))
