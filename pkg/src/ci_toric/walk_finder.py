"""Shortest even closed walks with a prescribed vertex set.

The search runs breadth-first over states (vertex, parity, visited subset)
inside the induced subgraph [W]. Among all shortest walks the one returned
is lexicographically smallest as a vertex sequence starting at min(W), which
is also its canonical form.

`nondegenerate_at=v` restricts to walks whose reduced binomial still uses an
edge at v. The decider needs this: a walk that retraces itself through v
(for instance a spanning-tree traversal) has a binomial that either vanishes
or lives in the ideal of the graph without v.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .errors import PreconditionError, ResourceLimitError
from .graph import GraphLike
from .walks import EvenClosedWalk, binomial_of_walk

State = tuple[int, int, int, int]  # (vertex index, parity, visited mask, signed use of tracked edge)


class _Search:
    def __init__(self, g: GraphLike, ws: Iterable[int], cap: int, nondegenerate_at: int | None):
        ws = sorted(set(ws))
        if not set(ws) <= g.vertices:
            raise PreconditionError("W is not a subset of V(G)")
        if len(ws) < 2:
            raise PreconditionError("W needs at least two vertices")
        if len(ws) > cap:
            raise ResourceLimitError("even walk search |W|", len(ws), cap)
        self.g = g
        self.order = ws
        idx = {v: i for i, v in enumerate(ws)}
        self.nbrs = [sorted(idx[u] for u in g.adj[v] if u in idx) for v in ws]
        self.full = (1 << len(ws)) - 1
        self.tracked: tuple[int, int] | None = None  # index pair of the tracked edge at v
        if nondegenerate_at is not None:
            if nondegenerate_at not in idx:
                raise PreconditionError("nondegenerate_at must lie in W")
            t = idx[nondegenerate_at]
            if len(self.nbrs[t]) > 2:
                raise PreconditionError("nondegenerate_at needs degree <= 2 inside [W]")
            if not self.nbrs[t]:
                self.tracked = (t, -1)
            else:
                self.tracked = (t, self.nbrs[t][0])
        self.start: State = (0, 0, 1, 0)

    def successors(self, s: State) -> Iterator[State]:
        x, par, mask, d = s
        for y in self.nbrs[x]:
            nd = d
            if self.tracked is not None and {x, y} == set(self.tracked):
                nd = d + (1 if par == 0 else -1)
            yield (y, 1 - par, mask | (1 << y), nd)

    def is_goal(self, s: State) -> bool:
        x, par, mask, d = s
        return x == 0 and par == 0 and mask == self.full and (self.tracked is None or d != 0)

    def layers(self) -> list[list[State]] | None:
        """BFS layers up to the first layer containing a goal, or None."""
        seen = {self.start}
        layers = [[self.start]]
        while layers[-1]:
            nxt: list[State] = []
            found = False
            for s in layers[-1]:
                for t in self.successors(s):
                    if t not in seen:
                        seen.add(t)
                        nxt.append(t)
                        if self.is_goal(t):
                            found = True
            layers.append(nxt)
            if found:
                return layers
        return None

    def good_sets(self, layers: list[list[State]]) -> list[set[State]]:
        """States lying on some shortest start->goal path, per depth."""
        L = len(layers) - 1
        good: list[set[State]] = [set() for _ in layers]
        good[L] = {s for s in layers[L] if self.is_goal(s)}
        for t in range(L - 1, -1, -1):
            good[t] = {s for s in layers[t] if any(u in good[t + 1] for u in self.successors(s))}
        return good

    def to_walk(self, states: list[State]) -> EvenClosedWalk:
        return EvenClosedWalk.from_vertices(self.g, [self.order[s[0]] for s in states])


def _pair_walk(g: GraphLike, ws: Iterable[int], nondegenerate_at: int | None) -> EvenClosedWalk | None:
    """|W| = 2: the only candidate is an edge traversed four times, whose
    binomial vanishes."""
    a, b = sorted(set(ws))
    if not g.has_edge(a, b) or nondegenerate_at is not None:
        return None
    return EvenClosedWalk.from_vertices(g, (a, b, a, b, a))


def shortest_even_walk_exact_vertices(
    g: GraphLike,
    ws: Iterable[int],
    cap: int = 20,
    nondegenerate_at: int | None = None,
) -> EvenClosedWalk | None:
    """Shortest even closed walk w inside [W] with V(w) = W, or None."""
    search = _Search(g, ws, cap, nondegenerate_at)
    if len(search.order) == 2:
        return _pair_walk(g, search.order, nondegenerate_at)
    layers = search.layers()
    if layers is None:
        return None
    good = search.good_sets(layers)
    path = [search.start]
    for t in range(1, len(layers)):
        path.append(min(u for u in search.successors(path[-1]) if u in good[t]))
    return search.to_walk(path)


def iter_shortest_even_walks(
    g: GraphLike,
    ws: Iterable[int],
    cap: int = 20,
    nondegenerate_at: int | None = None,
    limit: int = 64,
) -> Iterator[EvenClosedWalk]:
    """All shortest walks of the same kind, in canonical lexicographic order,
    without repeating a walk that is a rotation or reversal of an earlier one."""
    search = _Search(g, ws, cap, nondegenerate_at)
    if len(search.order) == 2:
        w = _pair_walk(g, search.order, nondegenerate_at)
        if w is not None:
            yield w
        return
    layers = search.layers()
    if layers is None:
        return
    good = search.good_sets(layers)
    L = len(layers) - 1
    emitted: set[tuple[int, ...]] = set()
    stack: list[list[State]] = [[search.start]]
    while stack and len(emitted) < limit:
        path = stack.pop()
        t = len(path)
        if t == L + 1:
            w = search.to_walk(path).canonical()
            if w.vertices not in emitted:
                emitted.add(w.vertices)
                yield w
            continue
        nxt = sorted({u for u in search.successors(path[-1]) if u in good[t]}, reverse=True)
        for u in nxt:
            stack.append(path + [u])


def walk_oracle(
    g: GraphLike,
    ws: Iterable[int],
    max_len: int = 12,
    nondegenerate_at: int | None = None,
) -> EvenClosedWalk | None:
    """Exhaustive reference: enumerate closed walks in [W] by increasing even
    length and return the smallest canonical one covering exactly W."""
    ws = frozenset(ws)
    nbrs = {v: sorted(u for u in g.adj[v] if u in ws) for v in ws}
    at_v = None
    if nondegenerate_at is not None:
        at_v = {g.edge_id(nondegenerate_at, u) for u in nbrs[nondegenerate_at]}
    starts = sorted(ws)
    for length in range(2, max_len + 1, 2):
        best: tuple[int, ...] | None = None
        for s in starts:
            for seq in _closed_walks(nbrs, s, length, ws):
                if length < 4:
                    continue
                w = EvenClosedWalk.from_vertices(g, seq)
                if at_v is not None and not (binomial_of_walk(w).support & at_v):
                    continue
                c = w.canonical().vertices
                if best is None or c < best:
                    best = c
        if best is not None:
            return EvenClosedWalk.from_vertices(g, best)
    return None


def _closed_walks(nbrs: dict[int, list[int]], s: int, length: int, ws: frozenset[int]) -> Iterator[list[int]]:
    # Depth-first; prunes only when the unvisited vertices cannot all fit.
    seq = [s]
    visits: dict[int, int] = {s: 1}

    def rec() -> Iterator[list[int]]:
        left = length - (len(seq) - 1)
        if left == 0:
            if seq[-1] == s and len(visits) == len(ws):
                yield list(seq)
            return
        if len(ws) - len(visits) > left - 1:
            return
        for y in nbrs[seq[-1]]:
            seq.append(y)
            visits[y] = visits.get(y, 0) + 1
            yield from rec()
            visits[y] -= 1
            if not visits[y]:
                del visits[y]
            seq.pop()

    yield from rec()

