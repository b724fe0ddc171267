"""Existence of sign-typed ditrails between vertex pairs.

A ditrail is an edge-distinct walk whose signs alternate at every internal
vertex; an ``(a, b)``-ditrail additionally departs its first vertex with sign
``a`` and arrives at its last vertex with sign ``b``.  A single vertex counts
as an ``(a, b)``-ditrail whenever ``a != b``.

The exact engine is a depth-first search over ``(vertex, required departure
sign, used-edge bitset)`` states with memoized failure states; future
feasibility depends only on that state, so the memo is exact.  States from
which no alternating *walk* (edge reuse permitted) can reach the target are
pruned up front: every ditrail is such a walk, so the pruning is sound.
Worst-case cost is exponential; the engine is meant for desk-scale graphs.

:func:`enumerate_ditrails` is a deliberately naive exhaustive search kept as
ground truth for tests; it must stay independent of the memoized engine.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

from .core import SIGNS, BidirectedGraph, Sign, Walk, sign_bit, trivial_walk


def _avoid_mask(g: BidirectedGraph, avoid: Iterable[str] | None) -> int:
    mask = 0
    if avoid:
        for eid in avoid:
            mask |= 1 << g.edge_index(eid)
    return mask


class TargetSearch:
    """Reusable exact-search context for one (target, arrival sign, avoid set).

    Failure memo entries do not depend on the start vertex, so a single
    context can answer queries from many sources; that is the shared
    memoization behind :func:`reach_profile` and the decomposition modules.
    Contexts must not be shared across graphs or avoid sets.
    """

    def __init__(
        self,
        g: BidirectedGraph,
        target: str,
        beta: Sign | str,
        avoid: Iterable[str] | None = None,
    ):
        self._g = g
        self._target = g.vertex_index(target)
        self._beta = sign_bit(Sign.parse(beta))
        self._avoid = _avoid_mask(g, avoid)
        self._failed: set[tuple[int, int, int]] = set()
        self._live = self._live_states()

    def _live_states(self) -> list[bool]:
        """States (vertex, required sign) from which the accepting arrival is
        reachable when edge reuse is ignored (backward closure)."""
        n = len(self._g.vertices)
        rev: list[list[int]] = [[] for _ in range(2 * n)]
        live = [False] * (2 * n)
        queue: list[int] = []
        for w in range(n):
            for r in (0, 1):
                sid = 2 * w + r
                for ei, to, dep, arr, _f in self._g._inc[w]:
                    if dep != r or (self._avoid >> ei) & 1:
                        continue
                    if to == self._target and arr == self._beta and not live[sid]:
                        live[sid] = True
                        queue.append(sid)
                    rev[2 * to + (1 - arr)].append(sid)
        while queue:
            sid = queue.pop()
            for prev in rev[sid]:
                if not live[prev]:
                    live[prev] = True
                    queue.append(prev)
        return live

    def exists_from(self, source: str, alpha: Sign | str) -> bool:
        alpha = Sign.parse(alpha)
        start = self._g.vertex_index(source)
        if start == self._target and sign_bit(alpha) != self._beta:
            return True
        return self._dfs(start, sign_bit(alpha), 0)

    def _dfs(self, w: int, required: int, used: int) -> bool:
        if not self._live[2 * w + required]:
            return False
        key = (w, required, used)
        if key in self._failed:
            return False
        blocked = used | self._avoid
        for ei, to, dep, arr, _f in self._g._inc[w]:
            if dep != required or (blocked >> ei) & 1:
                continue
            if to == self._target and arr == self._beta:
                return True
            if self._dfs(to, 1 - arr, used | (1 << ei)):
                return True
        self._failed.add(key)
        return False


def ditrail_exists(
    g: BidirectedGraph,
    source: str,
    target: str,
    alpha: Sign | str,
    beta: Sign | str,
    avoid: Iterable[str] | None = None,
) -> bool:
    """True iff ``g`` minus ``avoid`` has an (alpha, beta)-ditrail from
    ``source`` to ``target`` (including the single-vertex case)."""
    return TargetSearch(g, target, beta, avoid).exists_from(source, alpha)


@dataclass(frozen=True)
class ReachProfile:
    """The four ditrail-existence answers for one ordered vertex pair."""

    source: str
    target: str
    exists: Mapping[tuple[Sign, Sign], bool]

    def __getitem__(self, key: tuple[Sign, Sign]) -> bool:
        return self.exists[key]


def reach_profile(g: BidirectedGraph, source: str, target: str) -> ReachProfile:
    """All four sign-typed answers for (source, target), sharing one failure
    memo per arrival sign.  Several types may coexist."""
    g.vertex_index(source)
    g.vertex_index(target)
    exists: dict[tuple[Sign, Sign], bool] = {}
    for beta in SIGNS:
        search = TargetSearch(g, target, beta)
        for alpha in SIGNS:
            exists[(alpha, beta)] = search.exists_from(source, alpha)
    return ReachProfile(source, target, exists)


def diwalk_exists(
    g: BidirectedGraph,
    source: str,
    target: str,
    alpha: Sign | str,
    beta: Sign | str,
) -> bool:
    """Relaxation of :func:`ditrail_exists` that permits edge reuse.

    Reachability over (vertex, required sign) states by forward search; never
    false when a ditrail exists, but may be true when none does.  Used only
    as a pruner, never as an answer.
    """
    alpha, beta = Sign.parse(alpha), Sign.parse(beta)
    start = g.vertex_index(source)
    goal = g.vertex_index(target)
    bb = sign_bit(beta)
    if start == goal and alpha is not beta:
        return True
    seen = [False] * (2 * len(g.vertices))
    stack = [2 * start + sign_bit(alpha)]
    seen[stack[0]] = True
    while stack:
        sid = stack.pop()
        w, r = divmod(sid, 2)
        for _ei, to, dep, arr, _f in g._inc[w]:
            if dep != r:
                continue
            if to == goal and arr == bb:
                return True
            nxt = 2 * to + (1 - arr)
            if not seen[nxt]:
                seen[nxt] = True
                stack.append(nxt)
    return False


def _iter_ditrails(
    g: BidirectedGraph, source: str, target: str, alpha: Sign, beta: Sign
) -> Iterator[Walk]:
    """Exhaustive depth-first enumeration in edge-id order; no memoization,
    no pruning -- this is the ground-truth oracle."""
    start = g.vertex_index(source)
    goal = g.vertex_index(target)
    bb = sign_bit(beta)
    if start == goal and alpha is not beta:
        yield trivial_walk(source)
    verts: list[str] = [source]
    eids: list[str] = []
    flips: list[bool] = []

    def rec(w: int, required: int, used: int) -> Iterator[Walk]:
        for ei, to, dep, arr, flip in g._inc[w]:
            if dep != required or (used >> ei) & 1:
                continue
            verts.append(g.vertices[to])
            eids.append(g.edges[ei].id)
            flips.append(flip)
            if to == goal and arr == bb:
                yield Walk(tuple(verts), tuple(eids), tuple(flips))
            yield from rec(to, 1 - arr, used | (1 << ei))
            verts.pop()
            eids.pop()
            flips.pop()

    yield from rec(start, sign_bit(alpha), 0)


def enumerate_ditrails(
    g: BidirectedGraph,
    source: str,
    target: str,
    alpha: Sign | str,
    beta: Sign | str,
    limit: int,
) -> list[Walk]:
    """Up to ``limit`` (alpha, beta)-ditrails from source to target, in
    deterministic depth-first order.  Intended for small graphs (<= ~14
    edges); the list is empty iff :func:`ditrail_exists` is false."""
    alpha, beta = Sign.parse(alpha), Sign.parse(beta)
    out: list[Walk] = []
    if limit <= 0:
        return out
    for walk in _iter_ditrails(g, source, target, alpha, beta):
        out.append(walk)
        if len(out) >= limit:
            break
    return out
