"""Exact independent-set counting on chainsaw graph families.

The package builds paths, cycles, chainsaw graphs C(n, a, b) and broken
chainsaws P(n, a, b); counts their independent sets with three mutually
cross-checking engines (brute-force enumeration, memoized elimination,
binomial closed forms); and evaluates the Lucas sequences and Dickson
polynomials those counts realize.
"""

from .counting import (
    ComputationAbandoned,
    OracleCapExceeded,
    brute_force_strata,
    closed_form_count,
    count_brute_force,
    count_via_elimination,
    cycle_coefficient,
    cycle_coefficients,
    family_graph,
    independence_polynomial,
    path_coefficient,
    path_coefficients,
    stratified_closed_form,
)
from .graphs import (
    BLADE,
    CHAIN,
    ChainsawParams,
    Graph,
    export_graph,
    graph_from_json,
    make_broken_chainsaw,
    make_chainsaw,
    make_cycle,
    make_path,
)
from .sequences import (
    SequenceSpec,
    binom,
    dickson_D_sum,
    dickson_E_sum,
    evaluate,
    lucas_U,
    lucas_V,
)
from .verify import InjectedGraph, run_verification

__version__ = "0.1.0"

__all__ = [
    "BLADE",
    "CHAIN",
    "ChainsawParams",
    "ComputationAbandoned",
    "Graph",
    "InjectedGraph",
    "OracleCapExceeded",
    "SequenceSpec",
    "binom",
    "brute_force_strata",
    "closed_form_count",
    "count_brute_force",
    "count_via_elimination",
    "cycle_coefficient",
    "cycle_coefficients",
    "dickson_D_sum",
    "dickson_E_sum",
    "evaluate",
    "export_graph",
    "family_graph",
    "graph_from_json",
    "independence_polynomial",
    "lucas_U",
    "lucas_V",
    "make_broken_chainsaw",
    "make_chainsaw",
    "make_cycle",
    "make_path",
    "path_coefficient",
    "path_coefficients",
    "run_verification",
    "stratified_closed_form",
    "__version__",
]
