"""Graph interchange: the JSON document schema and DOT drawings.

A document is a JSON object with ``kind`` either "bipartite" (fields n1,
n2, edges as [left, right] pairs, optional pairing) or "lgraph" (fields n,
edges as [i, j] with i <= j, where i = j is a loop).  Writing is canonical:
fixed key order, sorted edge lists, two-space indent, trailing newline, so
reading and rewriting a canonical document is byte-exact.
"""

from __future__ import annotations

import json
from typing import Any

from .core import BipartiteGraph, LGraph, MirrorPairing

__all__ = [
    "DocumentError",
    "bipartite_document",
    "lgraph_document",
    "document_to_bipartite",
    "document_to_lgraph",
    "read_document",
    "write_document",
    "render_json",
    "bipartite_dot",
    "lgraph_dot",
]


class DocumentError(ValueError):
    """Malformed graph document; the message says which field is wrong."""


def bipartite_document(
    g: BipartiteGraph, pairing: MirrorPairing | None = None
) -> dict[str, Any]:
    doc: dict[str, Any] = {
        "kind": "bipartite",
        "n1": g.n1,
        "n2": g.n2,
        "edges": [[i, j] for i, j in sorted(g.edges())],
    }
    if pairing is not None:
        doc["pairing"] = list(pairing)
    return doc


def lgraph_document(h: LGraph) -> dict[str, Any]:
    return {
        "kind": "lgraph",
        "n": h.n,
        "edges": [[i, j] for i, j in sorted(h.edges())],
    }


def _expect_count(doc: dict[str, Any], field: str) -> int:
    v = doc.get(field)
    if not isinstance(v, int) or isinstance(v, bool) or v < 0:
        raise DocumentError(f"field '{field}' must be a non-negative integer")
    return v


def _expect_edges(doc: dict[str, Any]) -> list[tuple[int, int]]:
    raw = doc.get("edges")
    if not isinstance(raw, list):
        raise DocumentError("field 'edges' must be a list")
    out = []
    seen = set()
    for pos, e in enumerate(raw):
        if (
            not isinstance(e, list)
            or len(e) != 2
            or not all(isinstance(x, int) and not isinstance(x, bool) for x in e)
        ):
            raise DocumentError(f"edge at position {pos} must be a pair of integers")
        t = (e[0], e[1])
        if t in seen:
            raise DocumentError(f"duplicate edge at position {pos}: {e}")
        seen.add(t)
        out.append(t)
    return out


def document_to_bipartite(
    doc: dict[str, Any],
) -> tuple[BipartiteGraph, MirrorPairing | None]:
    if doc.get("kind") != "bipartite":
        raise DocumentError("expected a document of kind 'bipartite'")
    n1 = _expect_count(doc, "n1")
    n2 = _expect_count(doc, "n2")
    edges = _expect_edges(doc)
    for pos, (i, j) in enumerate(edges):
        if not (0 <= i < n1 and 0 <= j < n2):
            raise DocumentError(f"edge at position {pos} out of range: [{i}, {j}]")
    g = BipartiteGraph.from_edges(n1, n2, edges)
    pairing = None
    if "pairing" in doc:
        raw = doc["pairing"]
        if not isinstance(raw, list) or not all(
            isinstance(x, int) and not isinstance(x, bool) for x in raw
        ):
            raise DocumentError("field 'pairing' must be a list of integers")
        try:
            pairing = MirrorPairing(tuple(raw))
        except ValueError as exc:
            raise DocumentError(f"field 'pairing': {exc}") from exc
        if len(pairing) != n1 or n1 != n2:
            raise DocumentError("pairing length must equal n1 = n2")
    return g, pairing


def document_to_lgraph(doc: dict[str, Any]) -> LGraph:
    if doc.get("kind") != "lgraph":
        raise DocumentError("expected a document of kind 'lgraph'")
    n = _expect_count(doc, "n")
    edges = _expect_edges(doc)
    for pos, (i, j) in enumerate(edges):
        if not (0 <= i <= j < n):
            raise DocumentError(
                f"edge at position {pos} must satisfy 0 <= i <= j < n: [{i}, {j}]"
            )
    return LGraph.from_edges(n, edges)


def read_document(text: str) -> dict[str, Any]:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise DocumentError("document must be a JSON object")
    kind = doc.get("kind")
    if kind == "bipartite":
        document_to_bipartite(doc)
    elif kind == "lgraph":
        document_to_lgraph(doc)
    else:
        raise DocumentError("field 'kind' must be 'bipartite' or 'lgraph'")
    return doc


_KEY_ORDER = ("kind", "n", "n1", "n2", "edges", "pairing")


def _render(value: Any, level: int) -> str:
    """Two-space indented JSON with lists of plain ints kept on one line."""
    pad = "  " * level
    inner = "  " * (level + 1)
    if isinstance(value, dict):
        if not value:
            return "{}"
        parts = [
            f'{inner}{json.dumps(str(k))}: {_render(v, level + 1)}'
            for k, v in value.items()
        ]
        return "{\n" + ",\n".join(parts) + "\n" + pad + "}"
    if isinstance(value, (list, tuple)):
        items = list(value)
        if all(isinstance(x, int) and not isinstance(x, bool) for x in items):
            return "[" + ", ".join(str(x) for x in items) + "]"
        parts = [f"{inner}{_render(v, level + 1)}" for v in items]
        return "[\n" + ",\n".join(parts) + "\n" + pad + "]"
    return json.dumps(value)


def render_json(value: Any) -> str:
    return _render(value, 0) + "\n"


def write_document(doc: dict[str, Any]) -> str:
    """Canonical serialization: fixed key order, sorted edge list with one
    pair per line, two-space indent, trailing newline."""
    keys = [k for k in _KEY_ORDER if k in doc]
    keys += [k for k in doc if k not in _KEY_ORDER]
    ordered: dict[str, Any] = {}
    for key in keys:
        value = doc[key]
        if key == "edges":
            value = sorted([list(e) for e in value])
        ordered[key] = value
    return render_json(ordered)


def bipartite_dot(g: BipartiteGraph, pairing: MirrorPairing | None = None) -> str:
    """DOT drawing in the mirror layout: left vertices at x = 0, right at
    x = 1, with paired vertices at equal heights when a pairing is given."""
    heights = list(range(g.n2))
    if pairing is not None:
        for i, j in enumerate(pairing):
            heights[j] = i
    lines = ["graph bipartite {", "  node [shape=circle];"]
    for i in range(g.n1):
        lines.append(f'  a{i} [pos="0,{i}!"];')
    for j in range(g.n2):
        lines.append(f'  b{j} [pos="1,{heights[j]}!"];')
    for i, j in sorted(g.edges()):
        lines.append(f"  a{i} -- b{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def lgraph_dot(h: LGraph) -> str:
    lines = ["graph lgraph {", "  node [shape=circle];"]
    for v in range(h.n):
        lines.append(f"  v{v};")
    for i, j in sorted(h.edges()):
        lines.append(f"  v{i} -- v{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"
