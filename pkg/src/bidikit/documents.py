"""The JSON graph-document interchange format.

One document describes one graph, in one of three kinds:

``bidirected``
    ``vertices`` plus ``edges`` of ``{id, u, v, su, sv}`` with signs ``+`` or
    ``-`` (the Unicode minus U+2212 is accepted on input).
``digraph``
    ``vertices`` plus ``arcs`` of ``[tail, head]`` pairs; arcs become edges
    signed ``-`` at the tail and ``+`` at the head, with ids ``a0, a1, ...``.
``signed+factor``
    a plain graph (``edges`` without signs) plus a designated edge set
    ``matching``; the graph is signed by membership (matched edges ``-`` at
    both ends, the rest ``+``).

Any kind may carry ``b``, a total map from vertex ids to nonnegative integer
degree demands.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Mapping

from .core import BidirectedGraph, build_graph, from_digraph
from .errors import ParseError, ValidationError
from .factor import DegreeSpec, build_gm

KINDS = ("bidirected", "digraph", "signed+factor")

_SIGN_VALUES = {"+": "+", "-": "-", "−": "-"}


@dataclass(frozen=True)
class EdgeRecord:
    id: str
    u: str
    v: str
    su: str | None = None
    sv: str | None = None


@dataclass(frozen=True)
class GraphDocument:
    kind: str = "bidirected"
    vertices: tuple[str, ...] = ()
    edges: tuple[EdgeRecord, ...] = ()
    arcs: tuple[tuple[str, str], ...] = ()
    matching: tuple[str, ...] | None = None
    b: dict[str, int] | None = field(default=None, hash=False)


def _expect_str(value: Any, where: str) -> str:
    if not isinstance(value, str) or not value:
        raise ValidationError(f"{where}: expected a nonempty string")
    return value


def _expect_sign(value: Any, where: str) -> str:
    if not isinstance(value, str) or value not in _SIGN_VALUES:
        raise ValidationError(f"{where}: sign must be '+' or '-'")
    return _SIGN_VALUES[value]


def document_from_mapping(obj: Any) -> GraphDocument:
    """Validate a decoded JSON object into a :class:`GraphDocument`.

    Raises ``VALIDATION_ERROR`` with a field path on the first problem.
    """
    if not isinstance(obj, Mapping):
        raise ValidationError("document root must be a JSON object")
    kind = obj.get("kind", "bidirected")
    if kind not in KINDS:
        raise ValidationError(f"kind: must be one of {', '.join(KINDS)}")

    raw_vertices = obj.get("vertices")
    if not isinstance(raw_vertices, list):
        raise ValidationError("vertices: required list of vertex ids")
    vertices: list[str] = []
    seen_v: set[str] = set()
    for i, item in enumerate(raw_vertices):
        vid = _expect_str(item, f"vertices[{i}]")
        if vid in seen_v:
            raise ValidationError(f"vertices[{i}]: duplicate vertex id {vid!r}")
        seen_v.add(vid)
        vertices.append(vid)

    edges: list[EdgeRecord] = []
    arcs: list[tuple[str, str]] = []
    matching: tuple[str, ...] | None = None

    if kind == "digraph":
        if "edges" in obj:
            raise ValidationError("edges: not allowed for kind 'digraph' (use arcs)")
        raw_arcs = obj.get("arcs")
        if not isinstance(raw_arcs, list):
            raise ValidationError("arcs: required list of [tail, head] pairs")
        for i, pair in enumerate(raw_arcs):
            if not isinstance(pair, (list, tuple)) or len(pair) != 2:
                raise ValidationError(f"arcs[{i}]: expected a [tail, head] pair")
            tail = _expect_str(pair[0], f"arcs[{i}][0]")
            head = _expect_str(pair[1], f"arcs[{i}][1]")
            for endpoint, slot in ((tail, 0), (head, 1)):
                if endpoint not in seen_v:
                    raise ValidationError(
                        f"arcs[{i}][{slot}]: unknown vertex {endpoint!r}"
                    )
            arcs.append((tail, head))
    else:
        if "arcs" in obj:
            raise ValidationError(f"arcs: not allowed for kind {kind!r}")
        raw_edges = obj.get("edges")
        if not isinstance(raw_edges, list):
            raise ValidationError("edges: required list of edge records")
        seen_e: set[str] = set()
        signed = kind == "bidirected"
        for i, rec in enumerate(raw_edges):
            where = f"edges[{i}]"
            if not isinstance(rec, Mapping):
                raise ValidationError(f"{where}: expected an object")
            eid = _expect_str(rec.get("id"), f"{where}.id")
            if eid in seen_e:
                raise ValidationError(f"{where}.id: duplicate edge id {eid!r}")
            seen_e.add(eid)
            u = _expect_str(rec.get("u"), f"{where}.u")
            v = _expect_str(rec.get("v"), f"{where}.v")
            for endpoint, name in ((u, "u"), (v, "v")):
                if endpoint not in seen_v:
                    raise ValidationError(
                        f"{where}.{name}: unknown vertex {endpoint!r}"
                    )
            if signed:
                su = _expect_sign(rec.get("su"), f"{where}.su")
                sv = _expect_sign(rec.get("sv"), f"{where}.sv")
                edges.append(EdgeRecord(eid, u, v, su, sv))
            else:
                for name in ("su", "sv"):
                    if rec.get(name) is not None:
                        raise ValidationError(
                            f"{where}.{name}: signs are derived from the matching "
                            "for kind 'signed+factor'"
                        )
                edges.append(EdgeRecord(eid, u, v))

        if kind == "signed+factor":
            raw_matching = obj.get("matching")
            if not isinstance(raw_matching, list):
                raise ValidationError("matching: required list of edge ids")
            chosen: list[str] = []
            for i, item in enumerate(raw_matching):
                eid = _expect_str(item, f"matching[{i}]")
                if eid not in seen_e:
                    raise ValidationError(f"matching[{i}]: unknown edge {eid!r}")
                if eid in chosen:
                    raise ValidationError(f"matching[{i}]: duplicate edge {eid!r}")
                chosen.append(eid)
            matching = tuple(chosen)
        elif "matching" in obj:
            raise ValidationError(f"matching: not allowed for kind {kind!r}")

    b: dict[str, int] | None = None
    if obj.get("b") is not None:
        raw_b = obj["b"]
        if not isinstance(raw_b, Mapping):
            raise ValidationError("b: expected an object mapping vertex ids to integers")
        b = {}
        for key, value in raw_b.items():
            if key not in seen_v:
                raise ValidationError(f"b.{key}: unknown vertex {key!r}")
            if not isinstance(value, int) or isinstance(value, bool) or value < 0:
                raise ValidationError(f"b.{key}: expected a nonnegative integer")
            b[key] = value
        missing = [vid for vid in vertices if vid not in b]
        if missing:
            raise ValidationError(f"b: missing entries for {missing}")
        b = {vid: b[vid] for vid in vertices}

    return GraphDocument(
        kind=kind,
        vertices=tuple(vertices),
        edges=tuple(edges),
        arcs=tuple(arcs),
        matching=matching,
        b=b,
    )


def parse_graph_file(data: bytes | str) -> GraphDocument:
    """Parse and validate a UTF-8 JSON graph document."""
    try:
        obj = json.loads(data)
    except json.JSONDecodeError as exc:
        raise ParseError(
            f"invalid JSON: {exc.msg} (line {exc.lineno}, column {exc.colno})"
        ) from None
    return document_from_mapping(obj)


def document_to_mapping(doc: GraphDocument) -> dict[str, Any]:
    """Canonical JSON-ready mapping; round-trips through
    :func:`document_from_mapping`."""
    out: dict[str, Any] = {"kind": doc.kind, "vertices": list(doc.vertices)}
    if doc.kind == "digraph":
        out["arcs"] = [list(arc) for arc in doc.arcs]
    else:
        records = []
        for e in doc.edges:
            rec: dict[str, Any] = {"id": e.id, "u": e.u, "v": e.v}
            if doc.kind == "bidirected":
                rec["su"] = e.su
                rec["sv"] = e.sv
            records.append(rec)
        out["edges"] = records
        if doc.kind == "signed+factor":
            out["matching"] = list(doc.matching or ())
    if doc.b is not None:
        out["b"] = dict(doc.b)
    return out


def serialize_document(doc: GraphDocument) -> str:
    return json.dumps(document_to_mapping(doc), indent=2, sort_keys=True) + "\n"


def to_graph(doc: GraphDocument) -> BidirectedGraph:
    """Materialize the bidirected graph a document describes."""
    if doc.kind == "digraph":
        return from_digraph(doc.vertices, doc.arcs)
    if doc.kind == "signed+factor":
        plain = build_graph(
            doc.vertices, [(e.id, e.u, e.v, "+", "+") for e in doc.edges]
        )
        return build_gm(plain, doc.matching or ())
    return build_graph(
        doc.vertices, [(e.id, e.u, e.v, e.su, e.sv) for e in doc.edges]
    )


def degree_spec(doc: GraphDocument) -> DegreeSpec | None:
    return DegreeSpec(dict(doc.b)) if doc.b is not None else None
