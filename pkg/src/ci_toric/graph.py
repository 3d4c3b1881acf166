"""Simple undirected graphs with stable vertex and edge ids.

Edge ids double as variable indices of the toric ideal, so they never change
under induced subgraphs: a `SubgraphView` keeps the ids of its root `Graph`.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import PreconditionError


class _GraphBase:
    """Operations shared by `Graph` and `SubgraphView`."""

    root: "Graph"
    vertices: frozenset[int]
    edge_ids: tuple[int, ...]
    adj: dict[int, dict[int, int]]

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    @property
    def num_edges(self) -> int:
        return len(self.edge_ids)

    def endpoints(self, e: int) -> tuple[int, int]:
        return self.root.edges[e]

    def label(self, v: int) -> str:
        return self.root.labels[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def neighbors(self, v: int) -> list[int]:
        return sorted(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj.get(u, ())

    def edge_id(self, u: int, v: int) -> int:
        try:
            return self.adj[u][v]
        except KeyError:
            raise KeyError(f"no edge {{{self.label(u)}, {self.label(v)}}}") from None

    def sorted_vertices(self) -> list[int]:
        return sorted(self.vertices)

    def induced(self, ws: Iterable[int]) -> "SubgraphView":
        ws = frozenset(ws)
        if not ws <= self.vertices:
            raise PreconditionError("induced: vertex set not contained in the graph")
        return SubgraphView(self.root, ws)

    def delete_vertices(self, s: Iterable[int]) -> "SubgraphView":
        s = frozenset(s)
        if not s <= self.vertices:
            raise PreconditionError("delete_vertices: S is not a subset of V(G)")
        return SubgraphView(self.root, self.vertices - s)

    def is_connected(self) -> bool:
        return len(connected_components(self)) <= 1

    def to_graph(self) -> tuple["Graph", list[int]]:
        """Copy into a fresh dense `Graph`; also returns new-edge -> old-edge ids."""
        order = self.sorted_vertices()
        index = {v: i for i, v in enumerate(order)}
        edges = [(index[self.endpoints(e)[0]], index[self.endpoints(e)[1]]) for e in self.edge_ids]
        return Graph([self.label(v) for v in order], edges), list(self.edge_ids)

    def describe(self) -> str:
        es = ", ".join(f"{self.label(u)}-{self.label(v)}" for u, v in map(self.endpoints, self.edge_ids))
        return f"{type(self).__name__}(m={self.num_vertices}, n={self.num_edges}: {es})"

    __repr__ = describe


class Graph(_GraphBase):
    """Root graph: vertices 0..m-1, edge id = position in `edges`."""

    __slots__ = ("labels", "edges", "vertices", "edge_ids", "adj")

    def __init__(self, labels: Sequence[object] | int, edges: Iterable[tuple[int, int]]):
        if isinstance(labels, int):
            labels = [str(i) for i in range(labels)]
        self.labels: tuple[str, ...] = tuple(str(x) for x in labels)
        m = len(self.labels)
        adj: dict[int, dict[int, int]] = {v: {} for v in range(m)}
        norm: list[tuple[int, int]] = []
        for e, (u, v) in enumerate(edges):
            if not (0 <= u < m and 0 <= v < m):
                raise PreconditionError(f"edge {e} has an endpoint outside 0..{m - 1}")
            if u == v:
                raise PreconditionError(f"edge {e} is a loop at {self.labels[u]}")
            if v in adj[u]:
                raise PreconditionError(
                    f"edge {e} duplicates edge {adj[u][v]} ({self.labels[u]}, {self.labels[v]})"
                )
            adj[u][v] = e
            adj[v][u] = e
            norm.append((min(u, v), max(u, v)))
        self.edges: tuple[tuple[int, int], ...] = tuple(norm)
        self.vertices = frozenset(range(m))
        self.edge_ids = tuple(range(len(norm)))
        self.adj = adj

    @property
    def root(self) -> "Graph":  # type: ignore[override]
        return self

    @classmethod
    def from_labeled_edges(
        cls, edges: Iterable[tuple[object, object]], vertices: Iterable[object] = ()
    ) -> "Graph":
        """Build from label pairs; vertex order = `vertices` then first appearance."""
        order: dict[str, int] = {}
        for v in vertices:
            order.setdefault(str(v), len(order))
        pairs = []
        for u, v in edges:
            u, v = str(u), str(v)
            order.setdefault(u, len(order))
            order.setdefault(v, len(order))
            pairs.append((order[u], order[v]))
        return cls(list(order), pairs)

    def vertex(self, label: object) -> int:
        try:
            return self.labels.index(str(label))
        except ValueError:
            raise KeyError(f"unknown vertex {label!r}") from None


class SubgraphView(_GraphBase):
    """Induced subgraph of a root graph on a retained vertex set."""

    __slots__ = ("root", "vertices", "edge_ids", "adj")

    def __init__(self, root: Graph, vertices: frozenset[int]):
        self.root = root
        self.vertices = vertices
        self.adj = {v: {u: e for u, e in root.adj[v].items() if u in vertices} for v in vertices}
        self.edge_ids = tuple(e for e, (u, v) in enumerate(root.edges) if u in vertices and v in vertices)


GraphLike = _GraphBase


# ---------------------------------------------------------------------------
# Components and bipartiteness


@dataclass(frozen=True)
class BipartiteInfo:
    count_components: int
    b: int
    components: tuple[frozenset[int], ...]
    colorings: tuple[dict[int, int] | None, ...]


def _bfs_color(g: GraphLike, start: int, removed: frozenset[int], seen: dict[int, int]) -> tuple[list[int], bool]:
    seen[start] = 0
    comp = [start]
    ok = True
    queue = deque([start])
    while queue:
        x = queue.popleft()
        cx = seen[x]
        for y in g.adj[x]:
            if y in removed:
                continue
            if y not in seen:
                seen[y] = 1 - cx
                comp.append(y)
                queue.append(y)
            elif seen[y] == cx:
                ok = False
    return comp, ok


def bipartite_components(g: GraphLike) -> BipartiteInfo:
    """Components ordered by smallest vertex id, with 2-colorings where they exist."""
    seen: dict[int, int] = {}
    comps, colorings = [], []
    b = 0
    for v in g.sorted_vertices():
        if v in seen:
            continue
        comp, ok = _bfs_color(g, v, frozenset(), seen)
        comps.append(frozenset(comp))
        if ok:
            b += 1
            colorings.append({x: seen[x] for x in comp})
        else:
            colorings.append(None)
    return BipartiteInfo(len(comps), b, tuple(comps), tuple(colorings))


def count_bipartite(g: GraphLike, removed: Iterable[int] = ()) -> int:
    """b(G minus `removed`) without materializing the subgraph."""
    removed = frozenset(removed)
    seen: dict[int, int] = {}
    b = 0
    for v in g.vertices:
        if v in seen or v in removed:
            continue
        _, ok = _bfs_color(g, v, removed, seen)
        b += ok
    return b


def is_bipartite(g: GraphLike) -> bool:
    info = bipartite_components(g)
    return info.b == info.count_components


def connected_components(g: GraphLike) -> list[frozenset[int]]:
    return list(bipartite_components(g).components)


def nontrivial_components(g: GraphLike) -> list[SubgraphView]:
    """Components with at least one edge, as views."""
    return [g.induced(c) for c in connected_components(g) if len(c) > 1]


def strip_isolated(g: GraphLike) -> SubgraphView:
    return g.induced(v for v in g.vertices if g.degree(v) > 0)


def height(g: GraphLike) -> int:
    """n - m + b(G), with isolated vertices stripped first."""
    h = strip_isolated(g)
    return h.num_edges - h.num_vertices + count_bipartite(h)


def delete_vertices(g: GraphLike, s: Iterable[int]) -> SubgraphView:
    return g.delete_vertices(s)


def incidence_matrix(g: GraphLike) -> list[list[int]]:
    """Rows follow sorted vertex ids, columns follow `g.edge_ids`."""
    order = g.sorted_vertices()
    row = {v: i for i, v in enumerate(order)}
    a = [[0] * g.num_edges for _ in order]
    for j, e in enumerate(g.edge_ids):
        u, v = g.endpoints(e)
        a[row[u]][j] = 1
        a[row[v]][j] = 1
    return a


# ---------------------------------------------------------------------------
# Contraction of a degree-2 vertex


def contract_deg2(g: GraphLike, v: int) -> Graph:
    """Merge v and its two neighbors u1, u2 into one vertex.

    Surviving edges keep their relative order. When u1 and u2 share a
    neighbor z, the two edges to z collapse onto the one with the smaller id.
    The merged vertex sits at the position of min(u1, u2).
    """
    if v not in g.vertices:
        raise PreconditionError(f"contract_deg2: {v} is not a vertex")
    if g.degree(v) != 2:
        raise PreconditionError(f"contract_deg2: vertex {g.label(v)} has degree {g.degree(v)}, need 2")
    u1, u2 = g.neighbors(v)
    if g.has_edge(u1, u2):
        raise PreconditionError(
            f"contract_deg2: vertex {g.label(v)} lies in triangle "
            f"{{{g.label(v)}, {g.label(u1)}, {g.label(u2)}}}"
        )
    keep = [x for x in g.sorted_vertices() if x not in (v, u2)]
    index = {x: i for i, x in enumerate(keep)}
    index[u2] = index[u1]
    labels = [g.label(x) for x in keep]
    labels[index[u1]] = f"{g.label(u1)}+{g.label(u2)}"
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for e in g.edge_ids:
        a, b = g.endpoints(e)
        if v in (a, b):
            continue
        pair = (min(index[a], index[b]), max(index[a], index[b]))
        if pair in seen:
            continue
        seen.add(pair)
        edges.append(pair)
    return Graph(labels, edges)


# ---------------------------------------------------------------------------
# Blocks (2-connected components) and cut vertices


def blocks(g: GraphLike) -> tuple[list[frozenset[int]], set[int]]:
    """Biconnected components (as vertex sets) and articulation points.

    Iterative Hopcroft-Tarjan; isolated vertices yield no block.
    """
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    result: list[frozenset[int]] = []
    cut: set[int] = set()
    counter = 0
    for root in g.sorted_vertices():
        if root in disc:
            continue
        disc[root] = low[root] = counter
        counter += 1
        root_children = 0
        edge_stack: list[tuple[int, int]] = []
        stack: list[tuple[int, int, Iterator[int]]] = [(root, -1, iter(sorted(g.adj[root])))]
        while stack:
            x, parent, it = stack[-1]
            advanced = False
            for y in it:
                if y == parent:
                    continue
                if y not in disc:
                    disc[y] = low[y] = counter
                    counter += 1
                    edge_stack.append((x, y))
                    stack.append((y, x, iter(sorted(g.adj[y]))))
                    if x == root:
                        root_children += 1
                    advanced = True
                    break
                if disc[y] < disc[x]:
                    edge_stack.append((x, y))
                    low[x] = min(low[x], disc[y])
            if advanced:
                continue
            stack.pop()
            if parent >= 0:
                low[parent] = min(low[parent], low[x])
                if low[x] >= disc[parent]:
                    if parent != root:
                        cut.add(parent)
                    comp: set[int] = set()
                    while edge_stack:
                        a, b = edge_stack.pop()
                        comp.update((a, b))
                        if (a, b) == (parent, x):
                            break
                    result.append(frozenset(comp))
        if root_children > 1:
            cut.add(root)
    return result, cut


def is_two_connected(g: GraphLike) -> bool:
    """One block and more than two vertices."""
    if g.num_vertices <= 2 or not g.is_connected():
        return False
    bl, _ = blocks(g)
    return len(bl) == 1
