"""Graphviz DOT export.

Each bidirected edge renders as one undirected edge labelled ``su/sv``;
circular edges are solid, the rest dashed.  When a decomposition partition is
supplied, vertices are filled with one colour per class.  Output is
byte-for-byte deterministic for a given input.
"""

from __future__ import annotations

from .circular import circular_edges
from .core import BidirectedGraph
from .errors import PartitionMismatchError
from .kl import KLPartition

_PALETTE = (
    "#a6cee3",
    "#b2df8a",
    "#fb9a99",
    "#fdbf6f",
    "#cab2d6",
    "#ffff99",
    "#1f78b4",
    "#33a02c",
    "#e31a1c",
    "#ff7f00",
    "#6a3d9a",
    "#b15928",
)


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_dot(g: BidirectedGraph, partition: KLPartition | None = None) -> str:
    if partition is not None and set(partition.class_of) != set(g.vertices):
        raise PartitionMismatchError("partition does not cover this graph's vertices")
    circ = circular_edges(g)
    lines = ["graph G {"]
    for vid in g.vertices:
        if partition is None:
            lines.append(f"  {_quote(vid)};")
        else:
            color = _PALETTE[partition.class_of[vid] % len(_PALETTE)]
            lines.append(
                f'  {_quote(vid)} [style=filled, fillcolor="{color}"];'
            )
    for e in g.edges:
        style = "solid" if e.id in circ else "dashed"
        lines.append(
            f"  {_quote(e.u)} -- {_quote(e.v)} "
            f'[label="{e.su.value}/{e.sv.value}", style={style}];'
        )
    lines.append("}")
    return "\n".join(lines) + "\n"
