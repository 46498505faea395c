"""Cross-checking sweep over the chainsaw families and sequence engines.

``run_verification`` walks every (n, a, b) with 1 <= n <= n_max and
1 <= b <= a <= a_max and records one check row per identity instance:
left value, right value, pass flag, all values as decimal strings so a
failure is reproducible from the report alone. The sweep covers:

* chainsaw and broken counts: elimination == stratified closed form ==
  Lucas value == Dickson summation;
* stratified counts: brute force == closed form whenever the instance is
  small enough for the oracle;
* plain path/cycle counts against the Fibonacci/Lucas specializations;
* path/cycle polynomial coefficients against their binomial forms;
* sequence engine agreement (recurrence vs summation vs matrix) on the
  swept parameter grid;
* optionally, one externally injected graph checked against the closed
  form its declared parameters predict (the negative-control hook).

Report assembly is sequential and sorted by construction, so identical
invocations serialize to identical bytes.
"""

from __future__ import annotations

from dataclasses import dataclass

from .counting import (
    brute_force_strata,
    closed_form_count,
    count_via_elimination,
    cycle_coefficients,
    family_graph,
    independence_polynomial,
    path_coefficients,
    stratified_closed_form,
)
from .graphs import ChainsawParams, Graph, make_cycle, make_path
from .sequences import SequenceSpec, dickson_D_sum, dickson_E_sum, evaluate


@dataclass(frozen=True)
class InjectedGraph:
    """An externally supplied graph plus the family parameters it claims."""

    graph: Graph
    family: str
    params: ChainsawParams


def _strata_str(table: dict[int, int]) -> str:
    return "{" + ", ".join(f"{t}: {c}" for t, c in sorted(table.items())) + "}"


class _Report:
    def __init__(self) -> None:
        self.checks: list[dict] = []

    def add(self, identity: str, params: dict, left, right) -> None:
        self.checks.append(
            {
                "identity": identity,
                "params": params,
                "left": left if isinstance(left, str) else str(left),
                "right": right if isinstance(right, str) else str(right),
                "pass": left == right,
            }
        )

    def finish(self, parameters: dict) -> dict:
        by_identity: dict[str, dict[str, int]] = {}
        failed = 0
        for check in self.checks:
            slot = by_identity.setdefault(check["identity"], {"checks": 0, "failed": 0})
            slot["checks"] += 1
            if not check["pass"]:
                slot["failed"] += 1
                failed += 1
        return {
            "parameters": parameters,
            "checks": self.checks,
            "summary": {
                "total": len(self.checks),
                "failed": failed,
                "by_identity": by_identity,
                "all_pass": failed == 0,
            },
        }


def _sweep_tuple(report: _Report, params: ChainsawParams, family: str, brute_cap: int) -> None:
    n, a, b = params.n, params.a, params.b
    tag = {"n": n, "a": a, "b": b}
    graph = family_graph(params, family)
    elim = count_via_elimination(graph)
    closed = closed_form_count(params, family, method="strata")
    if family == "chainsaw":
        lucas = evaluate(SequenceSpec("V", n, a, -b, "matrix"))
        dickson = dickson_D_sum(n, a, -b)
        label = "chainsaw count"
        lucas_name = "V(n, a, -b)"
        dickson_name = "D(n, a, -b)"
    else:
        lucas = evaluate(SequenceSpec("U", n + 2, a, -b, "matrix"))
        dickson = dickson_E_sum(n + 1, a, -b)
        label = "broken count"
        lucas_name = "U(n+2, a, -b)"
        dickson_name = "E(n+1, a, -b)"
    report.add(f"{label}: elimination == stratified closed form", tag, elim, closed)
    report.add(f"{label}: closed form == {lucas_name}", tag, closed, lucas)
    report.add(f"{label}: {lucas_name} == {dickson_name} summation", tag, lucas, dickson)
    if graph.order <= brute_cap:
        brute = brute_force_strata(graph)
        closed_strata = stratified_closed_form(params, family)
        report.add(
            f"{family} strata: brute force == closed form",
            tag,
            _strata_str(brute),
            _strata_str(closed_strata),
        )


def _sweep_sequences(report: _Report, params: ChainsawParams) -> None:
    n, a, b = params.n, params.a, params.b
    tag = {"n": n, "a": a, "b": b}
    for kind, idx in (("V", n), ("U", n + 2)):
        rec = evaluate(SequenceSpec(kind, idx, a, -b, "recurrence"))
        mat = evaluate(SequenceSpec(kind, idx, a, -b, "matrix"))
        report.add(f"lucas {kind}: recurrence == matrix", tag, rec, mat)
    for kind, idx in (("D", n), ("E", n + 1)):
        rec = evaluate(SequenceSpec(kind, idx, a, -b, "recurrence"))
        summ = evaluate(SequenceSpec(kind, idx, a, -b, "summation"))
        mat = evaluate(SequenceSpec(kind, idx, a, -b, "matrix"))
        report.add(f"dickson {kind}: summation == recurrence", tag, summ, rec)
        report.add(f"dickson {kind}: recurrence == matrix", tag, rec, mat)


def _sweep_path_cycle(report: _Report, n: int) -> None:
    tag = {"n": n}
    report.add(
        "path count == U(n+2, 1, -1)",
        tag,
        count_via_elimination(make_path(n)),
        evaluate(SequenceSpec("U", n + 2, 1, -1, "matrix")),
    )
    report.add(
        "cycle count == V(n, 1, -1)",
        tag,
        count_via_elimination(make_cycle(n)),
        evaluate(SequenceSpec("V", n, 1, -1, "matrix")),
    )
    report.add(
        "path coefficients == C(n-t+1, t)",
        tag,
        independence_polynomial(make_path(n)),
        path_coefficients(n),
    )
    report.add(
        "cycle coefficients == C(n-t, t) + C(n-t-1, t-1)",
        tag,
        independence_polynomial(make_cycle(n)),
        cycle_coefficients(n),
    )


def run_verification(
    n_max: int = 8,
    a_max: int = 4,
    brute_cap: int = 24,
    inject: InjectedGraph | None = None,
) -> dict:
    """Run the full identity sweep; returns the report as a plain dict."""
    if n_max < 1 or a_max < 1:
        raise ValueError(f"sweep bounds must be at least 1, got n_max={n_max}, a_max={a_max}")
    report = _Report()
    for n in range(1, n_max + 1):
        _sweep_path_cycle(report, n)
    for n in range(1, n_max + 1):
        for a in range(1, a_max + 1):
            for b in range(1, a + 1):
                params = ChainsawParams(n, a, b)
                for family in ("chainsaw", "broken"):
                    _sweep_tuple(report, params, family, brute_cap)
                _sweep_sequences(report, params)
    if inject is not None:
        p = inject.params
        report.add(
            "injected graph count == declared closed form",
            {"family": inject.family, "n": p.n, "a": p.a, "b": p.b},
            count_via_elimination(inject.graph),
            closed_form_count(p, inject.family, method="strata"),
        )
    return report.finish({"n_max": n_max, "a_max": a_max, "brute_cap": brute_cap})
