"""Bidirected graphs, walks, and walk classification.

A bidirected graph assigns a sign (``+`` or ``-``) to each end of each edge.
Digraphs are the special case in which the two ends of every edge carry
distinct signs (the tail is ``-`` and the head ``+`` under the encoding used
by :func:`from_digraph`, so a directed walk is a ``(-,+)``-ditrail).

Graphs are immutable once built: every analysis in this package takes the
graph as read-only input, which makes concurrent queries safe.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .errors import (
    DanglingEndpointError,
    DuplicateIdError,
    EndpointMismatchError,
    IllegalSignsError,
    UnknownIdError,
)


class Sign(enum.Enum):
    """Sign carried by one end of an edge."""

    PLUS = "+"
    MINUS = "-"

    @property
    def opposite(self) -> Sign:
        return MINUS if self is PLUS else PLUS

    @classmethod
    def parse(cls, value: "Sign | str") -> Sign:
        """Coerce ``+``/``-`` (ASCII or U+2212) or a Sign into a Sign."""
        if isinstance(value, Sign):
            return value
        if value == "+":
            return PLUS
        if value in ("-", "−"):
            return MINUS
        raise IllegalSignsError(f"invalid sign {value!r}; expected '+' or '-'")

    def __str__(self) -> str:
        return self.value


PLUS = Sign.PLUS
MINUS = Sign.MINUS

SIGNS = (PLUS, MINUS)


@dataclass(frozen=True)
class Edge:
    """An identified edge with a sign at each end.

    Parallel edges are distinct as long as their ids differ.  For a loop
    (``u == v``) the two stored signs form the sign multiset of the loop;
    ``(+,+)``, ``(-,-)`` and ``(+,-)`` are all legal.
    """

    id: str
    u: str
    v: str
    su: Sign
    sv: Sign

    @property
    def is_loop(self) -> bool:
        return self.u == self.v

    @property
    def is_digraphic(self) -> bool:
        return self.su is not self.sv


# Incidence entry: (edge index, other-end vertex index, departure sign bit,
# arrival sign bit, flipped).  Sign bits: 0 for +, 1 for -.
_IncEntry = tuple[int, int, int, int, bool]

_BIT = {PLUS: 0, MINUS: 1}
_SIGN_OF_BIT = (PLUS, MINUS)


def sign_bit(sign: Sign) -> int:
    return _BIT[sign]


def bit_sign(bit: int) -> Sign:
    return _SIGN_OF_BIT[bit]


class BidirectedGraph:
    """Immutable multigraph with signed edge ends.

    Construct through :func:`build_graph`, :func:`from_digraph` or
    :func:`induced_subgraph`; the constructor assumes already-validated data.
    """

    __slots__ = ("vertices", "edges", "_vidx", "_eidx", "_inc")

    def __init__(self, vertices: tuple[str, ...], edges: tuple[Edge, ...]):
        self.vertices = vertices
        self.edges = edges
        self._vidx = {vid: i for i, vid in enumerate(vertices)}
        self._eidx = {e.id: i for i, e in enumerate(edges)}
        inc: list[list[_IncEntry]] = [[] for _ in vertices]
        for ei, e in enumerate(edges):
            ui, vi = self._vidx[e.u], self._vidx[e.v]
            bu, bv = _BIT[e.su], _BIT[e.sv]
            inc[ui].append((ei, vi, bu, bv, False))
            if not e.is_loop:
                inc[vi].append((ei, ui, bv, bu, True))
            elif e.su is not e.sv:
                # A loop with distinct signs has two traversal orientations;
                # an equal-signed loop has only one up to symmetry.
                inc[ui].append((ei, vi, bv, bu, True))
        self._inc = [tuple(entries) for entries in inc]

    # -- lookups ---------------------------------------------------------

    def vertex_index(self, vertex_id: str) -> int:
        try:
            return self._vidx[vertex_id]
        except KeyError:
            raise UnknownIdError(f"unknown vertex id {vertex_id!r}") from None

    def edge_index(self, edge_id: str) -> int:
        try:
            return self._eidx[edge_id]
        except KeyError:
            raise UnknownIdError(f"unknown edge id {edge_id!r}") from None

    def edge(self, edge_id: str) -> Edge:
        return self.edges[self.edge_index(edge_id)]

    def has_vertex(self, vertex_id: str) -> bool:
        return vertex_id in self._vidx

    def has_edge(self, edge_id: str) -> bool:
        return edge_id in self._eidx

    @property
    def is_digraphic(self) -> bool:
        return all(e.is_digraphic for e in self.edges)

    def incident_edges(self, vertex_id: str) -> tuple[Edge, ...]:
        self.vertex_index(vertex_id)
        return tuple(e for e in self.edges if vertex_id in (e.u, e.v))

    # -- comparison and display ------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BidirectedGraph):
            return NotImplemented
        return self.vertices == other.vertices and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.vertices, self.edges))

    def __repr__(self) -> str:
        return f"BidirectedGraph({len(self.vertices)} vertices, {len(self.edges)} edges)"


def build_graph(
    vertices: Iterable[str],
    edges: Iterable[tuple[str, str, str, "Sign | str", "Sign | str"] | Edge],
) -> BidirectedGraph:
    """Validate and build an immutable bidirected graph.

    ``edges`` entries are ``(id, u, v, sign_at_u, sign_at_v)`` tuples or
    :class:`Edge` records.  Raises ``DUPLICATE_ID``, ``DANGLING_ENDPOINT`` or
    ``ILLEGAL_SIGNS`` on invalid input.
    """
    vtuple = tuple(vertices)
    seen_v: set[str] = set()
    for vid in vtuple:
        if vid in seen_v:
            raise DuplicateIdError(f"duplicate vertex id {vid!r}")
        seen_v.add(vid)
    etuple: list[Edge] = []
    seen_e: set[str] = set()
    for item in edges:
        if isinstance(item, Edge):
            eid, u, v, su, sv = item.id, item.u, item.v, item.su, item.sv
        else:
            eid, u, v, su, sv = item
        if eid in seen_e:
            raise DuplicateIdError(f"duplicate edge id {eid!r}")
        seen_e.add(eid)
        for end in (u, v):
            if end not in seen_v:
                raise DanglingEndpointError(
                    f"edge {eid!r} references missing vertex {end!r}"
                )
        etuple.append(Edge(eid, u, v, Sign.parse(su), Sign.parse(sv)))
    return BidirectedGraph(vtuple, tuple(etuple))


def from_digraph(
    vertices: Iterable[str],
    arcs: Iterable[tuple[str, str] | Sequence[str]],
    ids: Sequence[str] | None = None,
) -> BidirectedGraph:
    """Encode a digraph: each arc ``(u, v)`` becomes an edge signed ``-`` at
    the tail and ``+`` at the head, so directed walks are ``(-,+)``-ditrails.

    Edge ids default to ``a0, a1, ...`` in arc order.
    """
    arc_list = [(u, v) for u, v in arcs]
    if ids is None:
        ids = [f"a{i}" for i in range(len(arc_list))]
    elif len(ids) != len(arc_list):
        raise DuplicateIdError("ids must match the number of arcs")
    return build_graph(
        vertices,
        [(ids[i], u, v, MINUS, PLUS) for i, (u, v) in enumerate(arc_list)],
    )


def induced_subgraph(g: BidirectedGraph, vertex_ids: Iterable[str]) -> BidirectedGraph:
    """The subgraph induced by ``vertex_ids``: those vertices plus every edge
    with both ends among them.  Vertex and edge order follow ``g``."""
    wanted = set(vertex_ids)
    for vid in wanted:
        g.vertex_index(vid)
    vtuple = tuple(vid for vid in g.vertices if vid in wanted)
    etuple = tuple(e for e in g.edges if e.u in wanted and e.v in wanted)
    return BidirectedGraph(vtuple, etuple)


@dataclass(frozen=True)
class Walk:
    """Alternating vertex/edge sequence.

    ``flips[i]`` records the traversal orientation of ``edges[i]``: ``False``
    means the edge is walked from its stored ``u`` end to its ``v`` end.  For
    non-loop edges the flag is forced by the surrounding vertices; for a loop
    occurrence it chooses which stored sign is the departure sign and which
    the arrival sign.
    """

    vertices: tuple[str, ...]
    edges: tuple[str, ...]
    flips: tuple[bool, ...]

    def __post_init__(self) -> None:
        if len(self.vertices) < 1:
            raise ValueError("a walk has at least one vertex term")
        if len(self.vertices) != len(self.edges) + 1:
            raise ValueError("walk needs exactly one more vertex than edges")
        if len(self.flips) != len(self.edges):
            raise ValueError("walk needs one orientation flag per edge")

    @property
    def is_closed(self) -> bool:
        return self.vertices[0] == self.vertices[-1]


def trivial_walk(vertex_id: str) -> Walk:
    return Walk((vertex_id,), (), ())


def walk_from_sequence(
    g: BidirectedGraph,
    sequence: Sequence[str],
    loop_flips: Mapping[int, bool] | None = None,
) -> Walk:
    """Build a walk from an alternating ``[v, e, v, ..., v]`` id sequence.

    Orientation flags for non-loop edges are inferred from the neighbouring
    vertices; loop occurrences use ``loop_flips`` (keyed by step index,
    default ``False``).
    """
    if len(sequence) % 2 == 0:
        raise ValueError("alternating sequence must have odd length")
    verts = tuple(sequence[0::2])
    eids = tuple(sequence[1::2])
    for vid in verts:
        g.vertex_index(vid)
    flips: list[bool] = []
    for i, eid in enumerate(eids):
        e = g.edge(eid)
        if e.is_loop:
            flips.append(bool(loop_flips.get(i, False)) if loop_flips else False)
        elif verts[i] == e.u:
            flips.append(False)
        else:
            flips.append(True)
    return Walk(verts, eids, tuple(flips))


@dataclass(frozen=True)
class WalkClassification:
    """Outcome of :func:`classify_walk`.

    ``ditrail_types`` holds every ``(start sign, end sign)`` pair the walk
    matches: a singleton for a ditrail with at least one edge, both
    mixed-sign pairs for a single vertex, empty when not a ditrail.
    """

    is_walk: bool
    is_trail: bool
    is_ditrail: bool
    is_dipath: bool
    ditrail_types: frozenset[tuple[Sign, Sign]]
    is_closed: bool
    is_cyclic: bool


def _resolved_steps(
    g: BidirectedGraph, walk: Walk
) -> list[tuple[Sign, Sign]] | None:
    """Per-step (departure sign, arrival sign), or None if not a walk."""
    steps: list[tuple[Sign, Sign]] = []
    for i, eid in enumerate(walk.edges):
        e = g.edge(eid)
        if walk.flips[i]:
            src, dst, dep, arr = e.v, e.u, e.sv, e.su
        else:
            src, dst, dep, arr = e.u, e.v, e.su, e.sv
        if walk.vertices[i] != src or walk.vertices[i + 1] != dst:
            return None
        steps.append((dep, arr))
    return steps


def classify_walk(g: BidirectedGraph, walk: Walk) -> WalkClassification:
    """Classify ``walk`` against ``g``.

    Structural failures are reported, not raised; only ids absent from the
    graph raise ``UNKNOWN_ID``.  A single-vertex walk is a ditrail of both
    mixed-sign types.
    """
    for vid in walk.vertices:
        g.vertex_index(vid)
    steps = _resolved_steps(g, walk)
    is_walk = steps is not None
    is_trail = is_walk and len(set(walk.edges)) == len(walk.edges)
    is_ditrail = is_trail and all(
        steps[i][1] is not steps[i + 1][0] for i in range(len(steps) - 1)
    )
    if not is_ditrail:
        types: frozenset[tuple[Sign, Sign]] = frozenset()
    elif not steps:
        types = frozenset({(PLUS, MINUS), (MINUS, PLUS)})
    else:
        types = frozenset({(steps[0][0], steps[-1][1])})
    is_dipath = is_ditrail and len(set(walk.vertices)) == len(walk.vertices)
    is_closed = is_walk and walk.is_closed
    is_cyclic = (
        is_ditrail
        and is_closed
        and bool(steps)
        and steps[-1][1] is steps[0][0].opposite
    )
    return WalkClassification(
        is_walk=is_walk,
        is_trail=is_trail,
        is_ditrail=is_ditrail,
        is_dipath=is_dipath,
        ditrail_types=types,
        is_closed=is_closed,
        is_cyclic=is_cyclic,
    )


def reverse_walk(walk: Walk) -> Walk:
    """Reverse a walk; an ``(a, b)``-ditrail reverses to a ``(b, a)``-ditrail."""
    return Walk(
        tuple(reversed(walk.vertices)),
        tuple(reversed(walk.edges)),
        tuple(not f for f in reversed(walk.flips)),
    )


def concat_walks(first: Walk, second: Walk) -> Walk:
    """Concatenate two walks sharing an endpoint (written once).

    The result is a plain walk; re-classify it, since concatenation of
    ditrails need not be a ditrail.
    """
    if first.vertices[-1] != second.vertices[0]:
        raise EndpointMismatchError(
            f"cannot concatenate: {first.vertices[-1]!r} != {second.vertices[0]!r}"
        )
    return Walk(
        first.vertices + second.vertices[1:],
        first.edges + second.edges,
        first.flips + second.flips,
    )
