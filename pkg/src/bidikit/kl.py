"""The Kotzig-Lovasz decomposition of a bidirected graph.

For a sign ``a``, two vertices are related when they are identical, or when
they are circularly connected and no ``(a, a)``-ditrail joins them.  This
relation is an equivalence relation; its classes refine the circular
components and are trivial (one class per component) on digraphic graphs.
The quotient construction nevertheless re-checks transitivity and treats any
violation as an internal bug.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from ._partition import quotient_of_group
from .circular import CircularStructure, circular_components, circularly_connected
from .core import BidirectedGraph, Sign
from .errors import BadComponentError
from .reach import TargetSearch, ditrail_exists


@dataclass(frozen=True)
class KLPartition:
    """Equivalence classes for one sign.

    Classes are ordered by their smallest vertex (graph vertex order),
    members ascending; each class lies inside a single circular component.
    """

    sign: Sign
    classes: tuple[tuple[str, ...], ...]
    class_of: Mapping[str, int]


def same_class(g: BidirectedGraph, u: str, v: str, sign: Sign | str) -> bool:
    """Pairwise test of the relation for one sign."""
    sign = Sign.parse(sign)
    if g.vertex_index(u) == g.vertex_index(v):
        return True
    return circularly_connected(g, u, v) and not ditrail_exists(g, u, v, sign, sign)


def _decompose(
    g: BidirectedGraph, sign: Sign, structure: CircularStructure
) -> KLPartition:
    all_classes: list[tuple[str, ...]] = []
    for comp in structure.components:
        if len(comp) == 1:
            all_classes.append(comp)
            continue
        # One search context per target vertex: the failure memo is shared by
        # every source queried against it.
        searches = {v: TargetSearch(g, v, sign) for v in comp}
        members = [g.vertex_index(v) for v in comp]

        def related(i: int, j: int) -> bool:
            a, b = g.vertices[i], g.vertices[j]
            return not searches[b].exists_from(a, sign)

        for group in quotient_of_group(members, related):
            all_classes.append(tuple(g.vertices[i] for i in group))
    all_classes.sort(key=lambda cls: g.vertex_index(cls[0]))
    class_of = {vid: ci for ci, cls in enumerate(all_classes) for vid in cls}
    return KLPartition(sign=sign, classes=tuple(all_classes), class_of=class_of)


def kl_decomposition(g: BidirectedGraph, sign: Sign | str) -> KLPartition:
    """Quotient of the vertex set by the relation for ``sign``.

    Vertices in different circular components are never related, so the work
    is one reachability query per vertex pair within each component.
    """
    sign = Sign.parse(sign)
    return _decompose(g, sign, circular_components(g))


def component_restriction(
    g: BidirectedGraph, component_index: int, sign: Sign | str
) -> tuple[tuple[str, ...], ...]:
    """The classes lying inside one circular component.

    These always partition the component's vertex set.  Raises
    ``BAD_COMPONENT`` for an index outside the component list of
    :func:`bidikit.circular.circular_components`.
    """
    sign = Sign.parse(sign)
    structure = circular_components(g)
    if not 0 <= component_index < len(structure.components):
        raise BadComponentError(
            f"component index {component_index} out of range "
            f"(graph has {len(structure.components)} components)"
        )
    wanted = set(structure.components[component_index])
    partition = _decompose(g, sign, structure)
    return tuple(cls for cls in partition.classes if cls[0] in wanted)
