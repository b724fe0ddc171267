"""Small partition utilities shared by the decomposition modules."""

from __future__ import annotations

from typing import Callable, Iterable, Sequence

from .errors import ConsistencyError


class UnionFind:
    def __init__(self, size: int):
        self._parent = list(range(size))

    def find(self, x: int) -> int:
        root = x
        while self._parent[root] != root:
            root = self._parent[root]
        while self._parent[x] != root:
            self._parent[x], x = root, self._parent[x]
        return root

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self._parent[max(ra, rb)] = min(ra, rb)


def groups_of(n: int, pairs: Iterable[tuple[int, int]]) -> list[list[int]]:
    """Partition ``range(n)`` by the joined pairs; groups are sorted by their
    smallest member, members ascending."""
    uf = UnionFind(n)
    for a, b in pairs:
        uf.union(a, b)
    by_root: dict[int, list[int]] = {}
    for i in range(n):
        by_root.setdefault(uf.find(i), []).append(i)
    return [sorted(members) for _root, members in sorted(by_root.items())]


def quotient_of_group(
    members: Sequence[int], related: Callable[[int, int], bool]
) -> list[list[int]]:
    """Quotient ``members`` by a relation expected to be an equivalence.

    ``related`` is consulted once per unordered pair.  After the union phase
    every intra-class pair is re-checked against the recorded answers;
    a violation means the relation was not transitive and raises
    :class:`ConsistencyError` (that always indicates an implementation bug,
    never bad input).
    """
    idx = {m: k for k, m in enumerate(members)}
    uf = UnionFind(len(members))
    rel: dict[tuple[int, int], bool] = {}
    for a in range(len(members)):
        for b in range(a + 1, len(members)):
            r = related(members[a], members[b])
            rel[(a, b)] = r
            if r:
                uf.union(a, b)
    classes: dict[int, list[int]] = {}
    for k, m in enumerate(members):
        classes.setdefault(uf.find(k), []).append(m)
    for group in classes.values():
        for i, a in enumerate(group):
            for b in group[i + 1 :]:
                if not rel[(idx[a], idx[b])]:
                    raise ConsistencyError(
                        "relation is not transitive: "
                        f"members {a} and {b} fell in one class but are unrelated"
                    )
    return [sorted(group) for _root, group in sorted(classes.items())]
