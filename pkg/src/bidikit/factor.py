"""Degree-constrained subgraphs (b-factors) and the structure they induce.

All operations here read only the underlying plain multigraph: edge signs are
ignored.  A b-factor is an edge set meeting the demand ``b(v)`` exactly at
every vertex, with loops counting twice.  Edges classify as forbidden (in no
factor), essential (in every factor) or flexible (in some but not all);
connected components of the flexible edges are the flexible components, and
of all allowed edges the factor components.

The two Kotzig-Lovasz style relations live here as well: for the minus side,
``u ~ v`` when identical, or flexibly connected with no ``(b - chi_u -
chi_v)``-factor; the plus side uses addition.  Either relation can be
computed directly, or by reduction: pick any b-factor ``M``, sign its edges
``-`` at both ends and all other edges ``+``, and take the bidirected
decomposition of the result.  Both routes must agree, and the result must not
depend on which factor was picked; the verification suite checks both.

The factor search is exact backtracking over edges in id order (include
before exclude, so the first witness is deterministic) with residual-demand,
capacity and parity pruning.  Fine at desk scale; the module boundary would
admit a matching-based solver later.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Iterator, Literal, Mapping

from ._partition import groups_of, quotient_of_group
from .core import MINUS, PLUS, BidirectedGraph, Sign, build_graph
from .errors import (
    ConflictError,
    NegativeRestrictionError,
    NotFactorizableError,
    SpecMismatchError,
    UnknownIdError,
)
from .kl import KLPartition, kl_decomposition


@dataclass(frozen=True)
class DegreeSpec:
    """Total map from vertex ids to integer degree demands.

    Values may go negative through :meth:`minus_chi`; such a spec is simply
    infeasible (no graph has a factor for it), which the search reports as
    "not found" rather than an error.
    """

    values: Mapping[str, int]

    def __getitem__(self, vertex_id: str) -> int:
        try:
            return self.values[vertex_id]
        except KeyError:
            raise UnknownIdError(f"degree spec has no entry for {vertex_id!r}") from None

    def __contains__(self, vertex_id: str) -> bool:
        return vertex_id in self.values

    @property
    def is_feasible(self) -> bool:
        return all(x >= 0 for x in self.values.values())

    def plus_chi(self, vertex_id: str) -> DegreeSpec:
        """Increment the demand at one vertex by 1."""
        self[vertex_id]
        return DegreeSpec(
            {v: x + (1 if v == vertex_id else 0) for v, x in self.values.items()}
        )

    def minus_chi(self, vertex_id: str) -> DegreeSpec:
        """Decrement the demand at one vertex by 1 (may become infeasible)."""
        self[vertex_id]
        return DegreeSpec(
            {v: x - (1 if v == vertex_id else 0) for v, x in self.values.items()}
        )

    @classmethod
    def uniform(cls, vertices: Iterable[str], value: int) -> DegreeSpec:
        return cls({v: value for v in vertices})


def _as_spec(b: DegreeSpec | Mapping[str, int]) -> DegreeSpec:
    return b if isinstance(b, DegreeSpec) else DegreeSpec(dict(b))


@dataclass(frozen=True)
class FactorResult:
    found: bool
    edges: frozenset[str] | None = None


class EdgeStatus(enum.Enum):
    FORBIDDEN = "forbidden"
    ESSENTIAL = "essential"
    FLEXIBLE = "flexible"


def iter_b_factors(
    g: BidirectedGraph,
    b: DegreeSpec | Mapping[str, int],
    forced: Iterable[str] = (),
    forbidden: Iterable[str] = (),
) -> Iterator[frozenset[str]]:
    """Yield every factor containing ``forced`` and avoiding ``forbidden``,
    in deterministic order (edges decided in id order, include first)."""
    spec = _as_spec(b)
    if set(spec.values) != set(g.vertices):
        raise SpecMismatchError("degree spec must cover exactly the vertex set")
    forced_ids = frozenset(forced)
    forbidden_ids = frozenset(forbidden)
    for eid in forced_ids | forbidden_ids:
        g.edge_index(eid)
    overlap = forced_ids & forbidden_ids
    if overlap:
        raise ConflictError(f"edges both forced and forbidden: {sorted(overlap)}")

    n = len(g.vertices)
    ends = [(g.vertex_index(e.u), g.vertex_index(e.v)) for e in g.edges]
    residual = [spec[vid] for vid in g.vertices]
    for eid in forced_ids:
        ui, vi = ends[g.edge_index(eid)]
        residual[ui] -= 1
        residual[vi] -= 1
    if any(x < 0 for x in residual) or sum(residual) % 2:
        return

    cand = [
        i
        for i, e in enumerate(g.edges)
        if e.id not in forced_ids and e.id not in forbidden_ids
    ]
    capacity = [0] * n
    for i in cand:
        ui, vi = ends[i]
        capacity[ui] += 1
        capacity[vi] += 1
    if any(residual[v] > capacity[v] for v in range(n)):
        return

    chosen: list[str] = []

    def backtrack(k: int) -> Iterator[frozenset[str]]:
        if k == len(cand):
            yield forced_ids | frozenset(chosen)
            return
        i = cand[k]
        ui, vi = ends[i]
        # include the edge
        if (residual[ui] >= 2 if ui == vi else residual[ui] >= 1 and residual[vi] >= 1):
            residual[ui] -= 1
            residual[vi] -= 1
            capacity[ui] -= 1
            capacity[vi] -= 1
            if residual[ui] <= capacity[ui] and residual[vi] <= capacity[vi]:
                chosen.append(g.edges[i].id)
                yield from backtrack(k + 1)
                chosen.pop()
            residual[ui] += 1
            residual[vi] += 1
            capacity[ui] += 1
            capacity[vi] += 1
        # exclude the edge
        capacity[ui] -= 1
        capacity[vi] -= 1
        if residual[ui] <= capacity[ui] and residual[vi] <= capacity[vi]:
            yield from backtrack(k + 1)
        capacity[ui] += 1
        capacity[vi] += 1

    yield from backtrack(0)


def find_b_factor(
    g: BidirectedGraph,
    b: DegreeSpec | Mapping[str, int],
    forced: Iterable[str] = (),
    forbidden: Iterable[str] = (),
) -> FactorResult:
    """First factor under the deterministic search order, if any."""
    for factor in iter_b_factors(g, b, forced, forbidden):
        return FactorResult(found=True, edges=factor)
    return FactorResult(found=False)


def classify_edges(
    g: BidirectedGraph, b: DegreeSpec | Mapping[str, int]
) -> dict[str, EdgeStatus]:
    """Three-way status per edge; raises ``NOT_FACTORIZABLE`` if the graph
    has no factor at all."""
    base = find_b_factor(g, b)
    if not base.found:
        raise NotFactorizableError("graph has no factor for the given degree spec")
    assert base.edges is not None
    status: dict[str, EdgeStatus] = {}
    for e in g.edges:
        if e.id in base.edges:
            without = find_b_factor(g, b, forbidden=(e.id,))
            status[e.id] = EdgeStatus.FLEXIBLE if without.found else EdgeStatus.ESSENTIAL
        else:
            with_e = find_b_factor(g, b, forced=(e.id,))
            status[e.id] = EdgeStatus.FLEXIBLE if with_e.found else EdgeStatus.FORBIDDEN
    return status


def _components_by_status(
    g: BidirectedGraph,
    status: dict[str, EdgeStatus],
    keep: frozenset[EdgeStatus],
) -> tuple[tuple[tuple[str, ...], ...], dict[str, int]]:
    pairs = [
        (g.vertex_index(e.u), g.vertex_index(e.v))
        for e in g.edges
        if status[e.id] in keep
    ]
    groups = groups_of(len(g.vertices), pairs)
    comps = tuple(tuple(g.vertices[i] for i in group) for group in groups)
    comp_of = {vid: ci for ci, comp in enumerate(comps) for vid in comp}
    return comps, comp_of


def b_flexible_components(
    g: BidirectedGraph, b: DegreeSpec | Mapping[str, int]
) -> tuple[tuple[str, ...], ...]:
    """Connected components of the flexible edges (singletons for vertices on
    none).  Edges joining distinct components are forbidden or essential."""
    status = classify_edges(g, b)
    comps, comp_of = _components_by_status(
        g, status, frozenset({EdgeStatus.FLEXIBLE})
    )
    for e in g.edges:
        if comp_of[e.u] != comp_of[e.v] and status[e.id] is EdgeStatus.FLEXIBLE:
            raise AssertionError("flexible edge crosses component boundary")
    return comps


def b_factor_components(
    g: BidirectedGraph, b: DegreeSpec | Mapping[str, int]
) -> tuple[tuple[str, ...], ...]:
    """Connected components of the allowed (flexible or essential) edges."""
    status = classify_edges(g, b)
    comps, _comp_of = _components_by_status(
        g, status, frozenset({EdgeStatus.FLEXIBLE, EdgeStatus.ESSENTIAL})
    )
    return comps


def build_gm(g: BidirectedGraph, matching: Iterable[str]) -> BidirectedGraph:
    """Sign the graph by membership in ``matching``: matched edges get ``-``
    at both ends, all other edges ``+`` at both ends."""
    chosen = frozenset(matching)
    for eid in chosen:
        g.edge_index(eid)
    return build_graph(
        g.vertices,
        [
            (e.id, e.u, e.v, MINUS, MINUS) if e.id in chosen else (e.id, e.u, e.v, PLUS, PLUS)
            for e in g.edges
        ],
    )


def _adjusted_spec(spec: DegreeSpec, u: str, v: str, sign: Sign) -> DegreeSpec:
    if sign is MINUS:
        return spec.minus_chi(u).minus_chi(v)
    return spec.plus_chi(u).plus_chi(v)


def _related_given_components(
    g: BidirectedGraph,
    spec: DegreeSpec,
    comp_of: Mapping[str, int],
    u: str,
    v: str,
    sign: Sign,
) -> bool:
    if u == v:
        return True
    if comp_of[u] != comp_of[v]:
        return False
    adjusted = _adjusted_spec(spec, u, v, sign)
    if not adjusted.is_feasible:
        return True
    return not find_b_factor(g, adjusted).found


def b_same_class(
    g: BidirectedGraph,
    b: DegreeSpec | Mapping[str, int],
    u: str,
    v: str,
    sign: Sign | str,
) -> bool:
    """Pairwise test: identical, or flexibly connected with no factor for the
    demand adjusted at both vertices (minus side subtracts, plus side adds).
    An adjusted demand that goes negative is immediately infeasible."""
    sign = Sign.parse(sign)
    spec = _as_spec(b)
    g.vertex_index(u)
    g.vertex_index(v)
    comps = b_flexible_components(g, spec)
    comp_of = {vid: ci for ci, comp in enumerate(comps) for vid in comp}
    return _related_given_components(g, spec, comp_of, u, v, sign)


def b_kl_decomposition(
    g: BidirectedGraph,
    b: DegreeSpec | Mapping[str, int],
    sign: Sign | str,
    method: Literal["direct", "reduction"] = "direct",
) -> KLPartition:
    """Quotient of the vertex set by the relation for ``sign``.

    ``direct`` evaluates the relation pairwise inside each flexible
    component; ``reduction`` finds any factor, signs the graph by membership
    and decomposes the resulting bidirected graph.  The two methods agree,
    independent of the chosen factor.
    """
    sign = Sign.parse(sign)
    spec = _as_spec(b)
    if method == "reduction":
        result = find_b_factor(g, spec)
        if not result.found:
            raise NotFactorizableError("graph has no factor for the given degree spec")
        assert result.edges is not None
        return kl_decomposition(build_gm(g, result.edges), sign)
    if method != "direct":
        raise ValueError(f"unknown method {method!r}; expected 'direct' or 'reduction'")

    comps = b_flexible_components(g, spec)
    comp_of = {vid: ci for ci, comp in enumerate(comps) for vid in comp}
    all_classes: list[tuple[str, ...]] = []
    for comp in comps:
        if len(comp) == 1:
            all_classes.append(comp)
            continue
        members = [g.vertex_index(vid) for vid in comp]

        def related(i: int, j: int) -> bool:
            return _related_given_components(
                g, spec, comp_of, g.vertices[i], g.vertices[j], sign
            )

        for group in quotient_of_group(members, related):
            all_classes.append(tuple(g.vertices[i] for i in group))
    all_classes.sort(key=lambda cls: g.vertex_index(cls[0]))
    class_of = {vid: ci for ci, cls in enumerate(all_classes) for vid in cls}
    return KLPartition(sign=sign, classes=tuple(all_classes), class_of=class_of)


def restrict_b(
    g: BidirectedGraph,
    b: DegreeSpec | Mapping[str, int],
    subset: Iterable[str],
) -> DegreeSpec:
    """Degree spec induced on a vertex subset: each demand drops by the
    number of essential edges leaving the subset at that vertex.

    For a factorizable graph the result is never negative (a vertex has at
    most ``b(v)`` essential edges); the ``NEGATIVE_RESTRICTION`` error is
    kept as a guard.
    """
    spec = _as_spec(b)
    wanted = set(subset)
    for vid in wanted:
        g.vertex_index(vid)
    status = classify_edges(g, spec)
    restricted: dict[str, int] = {}
    for vid in g.vertices:
        if vid not in wanted:
            continue
        crossing = sum(
            1
            for e in g.edges
            if status[e.id] is EdgeStatus.ESSENTIAL
            and not e.is_loop
            and ((e.u == vid and e.v not in wanted) or (e.v == vid and e.u not in wanted))
        )
        value = spec[vid] - crossing
        if value < 0:
            raise NegativeRestrictionError(
                f"restricted demand at {vid!r} would be {value}"
            )
        restricted[vid] = value
    return DegreeSpec(restricted)
