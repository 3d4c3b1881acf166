"""Reading and writing graphs in the three supported text formats."""

from __future__ import annotations

import json
import re
from enum import Enum

from .errors import ParseError
from .graph import Graph, GraphLike


class GraphFormat(str, Enum):
    EDGE_LIST = "edge_list"
    JSON = "json"
    DOT_SUBSET = "dot_subset"


class _Builder:
    """Collects labelled edges and enforces simplicity with line-aware errors."""

    def __init__(self, declared: list[str] | None):
        self.closed = declared is not None
        self.order: dict[str, int] = {}
        for v in declared or []:
            if v in self.order:
                raise ParseError(f"vertex {v!r} declared twice")
            self.order[v] = len(self.order)
        self.edges: list[tuple[int, int]] = []
        self.where: dict[tuple[int, int], int | None] = {}

    def vertex(self, tok: str, line: int | None) -> int:
        if tok not in self.order:
            if self.closed:
                raise ParseError(f"unknown vertex {tok!r}", line)
            self.order[tok] = len(self.order)
        return self.order[tok]

    def edge(self, a: str, b: str, line: int | None) -> None:
        if a == b:
            raise ParseError(f"loop at vertex {a!r}", line)
        u, v = self.vertex(a, line), self.vertex(b, line)
        key = (min(u, v), max(u, v))
        if key in self.where:
            first = self.where[key]
            at = f" (first seen on line {first})" if first is not None else ""
            raise ParseError(f"duplicate edge {{{a}, {b}}}{at}", line)
        self.where[key] = line
        self.edges.append((u, v))

    def build(self) -> Graph:
        return Graph(list(self.order), self.edges)


def _parse_edge_list(text: str) -> Graph:
    pending: list[tuple[str, str, int]] = []
    declared: list[str] | None = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.lower().startswith("vertices:"):
            if declared is not None or pending:
                raise ParseError("the vertices header must come first and only once", lineno)
            declared = line.split(":", 1)[1].replace(",", " ").split()
            continue
        toks = line.split()
        if len(toks) != 2:
            raise ParseError(f"expected two vertex tokens, got {len(toks)}", lineno)
        pending.append((toks[0], toks[1], lineno))
    builder = _Builder(declared)
    for a, b, lineno in pending:
        builder.edge(a, b, lineno)
    return builder.build()


def _parse_json(text: str) -> Graph:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", exc.lineno) from None
    if not isinstance(data, dict) or "edges" not in data:
        raise ParseError('expected an object with an "edges" array')
    declared = data.get("vertices")
    if declared is not None and not isinstance(declared, list):
        raise ParseError('"vertices" must be an array')
    builder = _Builder([str(v) for v in declared] if declared is not None else None)
    for i, pair in enumerate(data["edges"]):
        if not isinstance(pair, list) or len(pair) != 2:
            raise ParseError(f"edge #{i} must be a two-element array")
        try:
            builder.edge(str(pair[0]), str(pair[1]), None)
        except ParseError as exc:
            raise ParseError(f"edge #{i}: {exc}") from None
    return builder.build()


_DOT_HEADER = re.compile(r"^\s*(strict\s+)?graph\s*([A-Za-z_][A-Za-z0-9_]*)?\s*\{", re.IGNORECASE)
_IDENT = re.compile(r"^[A-Za-z0-9_]+$")


def _parse_dot(text: str) -> Graph:
    # Strip // and # comments while keeping line numbers.
    lines = [re.sub(r"(//|#).*$", "", ln) for ln in text.splitlines()]
    body = "\n".join(lines)
    m = _DOT_HEADER.match(body)
    if not m:
        raise ParseError("expected 'graph {'", 1)
    close = body.rfind("}")
    if close < m.end():
        raise ParseError("missing closing '}'", len(lines))
    if body[close + 1 :].strip():
        raise ParseError("trailing text after '}'", len(lines))
    builder = _Builder(None)
    offset = m.end()
    for stmt in re.split(r"[;\n]", body[m.end() : close]):
        lineno = body.count("\n", 0, offset) + 1
        offset += len(stmt) + 1
        stmt = stmt.strip()
        if not stmt:
            continue
        if "->" in stmt:
            raise ParseError("directed edges are not supported", lineno)
        parts = [p.strip() for p in stmt.split("--")]
        for p in parts:
            if not _IDENT.match(p):
                raise ParseError(f"bad identifier {p!r}", lineno)
        if len(parts) == 1:
            builder.vertex(parts[0], lineno)
        for a, b in zip(parts, parts[1:]):
            builder.edge(a, b, lineno)
    return builder.build()


def parse_graph(text: str, fmt: GraphFormat | str = GraphFormat.EDGE_LIST) -> Graph:
    fmt = GraphFormat(fmt)
    if fmt is GraphFormat.EDGE_LIST:
        return _parse_edge_list(text)
    if fmt is GraphFormat.JSON:
        return _parse_json(text)
    return _parse_dot(text)


def guess_format(path: str) -> GraphFormat:
    low = path.lower()
    if low.endswith(".json"):
        return GraphFormat.JSON
    if low.endswith((".dot", ".gv")):
        return GraphFormat.DOT_SUBSET
    return GraphFormat.EDGE_LIST


def to_edge_list(g: GraphLike) -> str:
    lines = ["vertices: " + " ".join(g.label(v) for v in g.sorted_vertices())]
    for e in g.edge_ids:
        u, v = g.endpoints(e)
        lines.append(f"{g.label(u)} {g.label(v)}")
    return "\n".join(lines) + "\n"


def to_json(g: GraphLike) -> str:
    data = {
        "vertices": [g.label(v) for v in g.sorted_vertices()],
        "edges": [[g.label(u), g.label(v)] for u, v in map(g.endpoints, g.edge_ids)],
    }
    return json.dumps(data)
