"""Self-verification suite run by the ``verify`` command.

Checks, on one given graph, the structural guarantees the analyses rely on:
that both pairwise decomposition relations are genuine equivalence relations,
that a circularly connected graph reaches every vertex from every vertex with
at least one arrival sign, and (when a degree spec is present and feasible)
that the direct and reduction routes to the factor decomposition agree for
both signs and do not depend on the factor chosen.

A failing check here means an implementation bug or a genuinely broken
invariant, never bad input; inapplicable checks are reported as skipped.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import islice

from .circular import circular_components
from .core import SIGNS, BidirectedGraph, Sign
from .factor import (
    DegreeSpec,
    b_flexible_components,
    b_kl_decomposition,
    build_gm,
    iter_b_factors,
)
from .errors import ConsistencyError, NotFactorizableError
from .kl import kl_decomposition
from .reach import TargetSearch, ditrail_exists


@dataclass(frozen=True)
class CheckOutcome:
    name: str
    status: str  # "pass" | "fail" | "skipped"
    detail: str


def _pairwise_relation(g: BidirectedGraph, sign: Sign) -> list[list[bool]]:
    n = len(g.vertices)
    structure = circular_components(g)
    rel = [[False] * n for _ in range(n)]
    for i in range(n):
        rel[i][i] = True
    for j in range(n):
        target = g.vertices[j]
        search = TargetSearch(g, target, sign)
        for i in range(j):
            source = g.vertices[i]
            connected = structure.component_of[source] == structure.component_of[target]
            r = connected and not search.exists_from(source, sign)
            rel[i][j] = rel[j][i] = r
    return rel


def _check_equivalence(g: BidirectedGraph, sign: Sign) -> CheckOutcome:
    name = f"kl-equivalence-{'minus' if sign is Sign.MINUS else 'plus'}"
    n = len(g.vertices)
    rel = _pairwise_relation(g, sign)
    for i in range(n):
        for j in range(n):
            if rel[i][j] != rel[j][i]:
                return CheckOutcome(name, "fail", f"not symmetric at ({i},{j})")
    for i in range(n):
        for j in range(n):
            if not rel[i][j]:
                continue
            for k in range(n):
                if rel[j][k] and not rel[i][k]:
                    return CheckOutcome(
                        name,
                        "fail",
                        "not transitive at "
                        f"({g.vertices[i]}, {g.vertices[j]}, {g.vertices[k]})",
                    )
    partition = kl_decomposition(g, sign)
    for i in range(n):
        for j in range(n):
            same = partition.class_of[g.vertices[i]] == partition.class_of[g.vertices[j]]
            if same != rel[i][j]:
                return CheckOutcome(
                    name,
                    "fail",
                    f"classes disagree with pairwise relation at ({i},{j})",
                )
    return CheckOutcome(name, "pass", f"{len(partition.classes)} classes")


def _check_reachability(g: BidirectedGraph) -> CheckOutcome:
    name = "circular-reachability"
    structure = circular_components(g)
    if len(structure.components) > 1:
        return CheckOutcome(
            name, "skipped", "graph is not circularly connected"
        )
    for source in g.vertices:
        for target in g.vertices:
            for alpha in SIGNS:
                if not any(
                    ditrail_exists(g, source, target, alpha, beta) for beta in SIGNS
                ):
                    return CheckOutcome(
                        name,
                        "fail",
                        f"no ditrail from {source} to {target} departing {alpha}",
                    )
    return CheckOutcome(name, "pass", "every pair reachable with both departures")


def _check_factor_layer(g: BidirectedGraph, b: DegreeSpec) -> list[CheckOutcome]:
    try:
        b_flexible_components(g, b)
    except NotFactorizableError:
        return [
            CheckOutcome(
                "factor-decompositions",
                "skipped",
                "graph has no factor for the given degree spec",
            )
        ]
    outcomes: list[CheckOutcome] = []
    factors = list(islice(iter_b_factors(g, b), 3))
    for sign in SIGNS:
        tag = "minus" if sign is Sign.MINUS else "plus"
        try:
            direct = b_kl_decomposition(g, b, sign, method="direct")
        except ConsistencyError as exc:
            outcomes.append(
                CheckOutcome(f"factor-reduction-agreement-{tag}", "fail", str(exc))
            )
            continue
        reduction = b_kl_decomposition(g, b, sign, method="reduction")
        if direct.classes != reduction.classes:
            outcomes.append(
                CheckOutcome(
                    f"factor-reduction-agreement-{tag}",
                    "fail",
                    f"direct {direct.classes} != reduction {reduction.classes}",
                )
            )
            continue
        witness_partitions = {
            kl_decomposition(build_gm(g, m), sign).classes for m in factors
        }
        if len(witness_partitions) > 1:
            outcomes.append(
                CheckOutcome(
                    f"factor-reduction-agreement-{tag}",
                    "fail",
                    "reduction result depends on the chosen factor",
                )
            )
            continue
        outcomes.append(
            CheckOutcome(
                f"factor-reduction-agreement-{tag}",
                "pass",
                f"{len(direct.classes)} classes, {len(factors)} factor(s) checked",
            )
        )
    return outcomes


def run_verification(
    g: BidirectedGraph, b: DegreeSpec | None = None
) -> list[CheckOutcome]:
    outcomes = [
        _check_equivalence(g, Sign.MINUS),
        _check_equivalence(g, Sign.PLUS),
        _check_reachability(g),
    ]
    if b is not None:
        outcomes.extend(_check_factor_layer(g, b))
    return outcomes


def all_passed(outcomes: list[CheckOutcome]) -> bool:
    return all(outcome.status != "fail" for outcome in outcomes)
