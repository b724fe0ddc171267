"""Circular edges, circular connectivity, and circular components.

An edge is *circular* if some cyclic ditrail (a closed ditrail whose start
and end signs are opposite) contains it.  Two vertices are circularly
connected if a path of circular edges joins them; the maximal circularly
connected subgraphs -- the circular components -- partition the vertex set.
On digraphic graphs this coincides exactly with strong connectivity and
strong components.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from ._partition import groups_of
from .core import BidirectedGraph
from .reach import TargetSearch


@dataclass(frozen=True)
class CircularStructure:
    """Circular edge set plus the induced vertex partition.

    Components are the connected components of the subgraph spanned by the
    circular edges; a vertex incident to no circular edge forms its own
    singleton component.  Components are ordered by their smallest vertex
    (graph vertex order), members ascending.
    """

    circular_edges: frozenset[str]
    components: tuple[tuple[str, ...], ...]
    component_of: Mapping[str, int]


def is_circular(g: BidirectedGraph, edge_id: str) -> bool:
    """Whether some cyclic ditrail contains the edge.

    A cyclic ditrail through edge ``e = (u, v)`` with signs ``a`` at ``u`` and
    ``b`` at ``v`` can be rotated to start with ``e``; what remains is a
    ``(-b, -a)``-ditrail from ``v`` back to ``u`` that avoids ``e``.  Loops
    are tried in both traversal orientations.
    """
    e = g.edge(edge_id)
    queries = {(e.v, e.u, e.sv.opposite, e.su.opposite)}
    if e.is_loop:
        queries.add((e.u, e.v, e.su.opposite, e.sv.opposite))
    return any(
        TargetSearch(g, t, beta, avoid=(edge_id,)).exists_from(s, alpha)
        for s, t, alpha, beta in queries
    )


def circular_edges(g: BidirectedGraph) -> frozenset[str]:
    return frozenset(e.id for e in g.edges if is_circular(g, e.id))


def circularly_connected(g: BidirectedGraph, u: str, v: str) -> bool:
    """Whether a path using only circular edges joins ``u`` and ``v`` (every
    vertex is circularly connected to itself via the empty path)."""
    ui, vi = g.vertex_index(u), g.vertex_index(v)
    if ui == vi:
        return True
    structure = circular_components(g)
    return structure.component_of[u] == structure.component_of[v]


def circular_components(g: BidirectedGraph) -> CircularStructure:
    """Partition the vertex set by circular connectivity."""
    circ = circular_edges(g)
    pairs = [
        (g.vertex_index(e.u), g.vertex_index(e.v)) for e in g.edges if e.id in circ
    ]
    groups = groups_of(len(g.vertices), pairs)
    components = tuple(tuple(g.vertices[i] for i in group) for group in groups)
    component_of = {
        vid: ci for ci, comp in enumerate(components) for vid in comp
    }
    return CircularStructure(
        circular_edges=circ, components=components, component_of=component_of
    )
