"""Recognizers for the structured families of complete-intersection graphs.

A graph is written [C; R] when its vertices split into a set C covered by
vertex-disjoint odd chordless cycles and a remainder R inducing a bipartite
graph. When C is connected and R is 2-connected, the complete intersections
are exactly: bipartite ring graphs, and 1- or 2-clique-sums of a bipartite
ring graph with one of a short list of small odd-cycle gadgets. This module
recognizes each gadget under every relabeling and assembles the tag.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations
from typing import Iterator, Sequence

from .budget import Budget
from .decider import decide, prefilter
from .errors import ResourceLimitError
from .graph import GraphLike, blocks, connected_components, is_bipartite, is_two_connected
from .walks import EvenClosedWalk

Cycle = tuple[int, ...]


# ---------------------------------------------------------------------------
# Chordless cycles


def chordless_cycles(g: GraphLike, odd_only: bool = False, cap: int = 100_000) -> list[Cycle]:
    """Every chordless cycle once, as a vertex sequence starting at its
    smallest vertex, sorted by length and then by sorted vertex set."""
    out: list[Cycle] = []
    adj = {v: set(g.adj[v]) for v in g.vertices}

    # `inner` holds the path minus its two ends; a new vertex may touch
    # neither it nor, unless closing the cycle, the start.
    def extend(path: list[int], inner: set[int]) -> None:
        s, last = path[0], path[-1]
        for x in sorted(adj[last]):
            if x <= s or x in path or adj[x] & inner:
                continue
            if s in adj[x]:
                if len(path) >= 2 and path[1] < x and (not odd_only or len(path) % 2 == 0):
                    out.append(tuple(path + [x]))
                    if len(out) > cap:
                        raise ResourceLimitError("chordless cycles", len(out), cap)
                continue
            path.append(x)
            inner.add(last)
            extend(path, inner)
            inner.discard(last)
            path.pop()

    for s in sorted(g.vertices):
        for p1 in sorted(adj[s]):
            if p1 > s:
                extend([s, p1], set())
    out.sort(key=lambda c: (len(c), sorted(c)))
    return out


def odd_chordless_cycles(g: GraphLike, cap: int = 100_000) -> list[Cycle]:
    return chordless_cycles(g, odd_only=True, cap=cap)


# ---------------------------------------------------------------------------
# [C; R] partitions


@dataclass(frozen=True)
class CRPartition:
    cycles: tuple[Cycle, ...]
    rest: frozenset[int]

    @property
    def cycle_vertices(self) -> frozenset[int]:
        return frozenset(v for c in self.cycles for v in c)

    def to_json(self, g: GraphLike) -> dict:
        return {
            "cycles": [[g.label(v) for v in c] for c in self.cycles],
            "R": [g.label(v) for v in sorted(self.rest)],
        }


def iter_cr_partitions(g: GraphLike, budget: Budget | None = None) -> Iterator[CRPartition]:
    """Partitions in lexicographic order of the chosen cycle indices."""
    budget = budget or Budget()
    odd = odd_chordless_cycles(g, budget.cycles)
    sets = [frozenset(c) for c in odd]
    everything = frozenset(g.vertices)
    visited = 0

    def rec(start: int, chosen: list[int], used: frozenset[int]) -> Iterator[CRPartition]:
        nonlocal visited
        visited += 1
        if visited > budget.partitions:
            raise ResourceLimitError("[C; R] partition search nodes", visited, budget.partitions)
        rest = everything - used
        if is_bipartite(g.induced(rest)):
            yield CRPartition(tuple(odd[i] for i in chosen), rest)
            return
        for i in range(start, len(odd)):
            if not sets[i] & used:
                chosen.append(i)
                yield from rec(i + 1, chosen, used | sets[i])
                chosen.pop()

    yield from rec(0, [], frozenset())


def partition_CR(g: GraphLike, budget: Budget | None = None) -> CRPartition | None:
    return next(iter_cr_partitions(g, budget), None)


# ---------------------------------------------------------------------------
# Cycle labelings


def _cycle_order(g: GraphLike, vs: frozenset[int]) -> Cycle | None:
    """The cyclic order of [vs] when it is a single chordless cycle."""
    h = g.induced(vs)
    if len(vs) < 3 or any(h.degree(v) != 2 for v in vs) or not h.is_connected():
        return None
    start = min(vs)
    order = [start]
    prev, cur = None, start
    while True:
        nxt = [u for u in sorted(h.adj[cur]) if u != prev]
        prev, cur = cur, nxt[0]
        if cur == start:
            return tuple(order)
        order.append(cur)


def _relabelings(cycle: Cycle) -> Iterator[Cycle]:
    """All 2r labelings of a cycle: each rotation in both directions."""
    r = len(cycle)
    for d in (cycle, tuple(reversed(cycle))):
        for i in range(r):
            yield d[i:] + d[:i]


# ---------------------------------------------------------------------------
# Odd partial bands


@dataclass(frozen=True)
class OddPartialBandLabeling:
    a: Cycle
    b: Cycle
    cross: tuple[tuple[int, int], ...]  # (j, k), 1-based, sorted

    def to_json(self, g: GraphLike) -> dict:
        return {
            "a": [g.label(v) for v in self.a],
            "b": [g.label(v) for v in self.b],
            "cross": [[j, k] for j, k in self.cross],
        }


def _opb_labeling(g: GraphLike, c1: Cycle, c2: Cycle) -> OddPartialBandLabeling | None:
    cross_edges = [
        g.endpoints(e) for e in g.edge_ids if (g.endpoints(e)[0] in c1) != (g.endpoints(e)[1] in c1)
    ]
    if not cross_edges:
        return None
    for a in _relabelings(c1):
        ia = {v: i + 1 for i, v in enumerate(a)}
        for b in _relabelings(c2):
            ib = {v: i + 1 for i, v in enumerate(b)}
            pairs = sorted((ia[u], ib[v]) if u in ia else (ia[v], ib[u]) for u, v in cross_edges)
            if all(j % 2 == k % 2 for j, k in pairs) and all(
                pairs[i][1] <= pairs[i + 1][1] for i in range(len(pairs) - 1)
            ):
                return OddPartialBandLabeling(a, b, tuple(pairs))
    return None


def two_cycle_covers(g: GraphLike, cap: int = 100_000) -> Iterator[tuple[Cycle, Cycle]]:
    """Pairs of disjoint odd chordless cycles covering V(G) whose edges are
    the two cycles plus edges between them."""
    m = g.num_vertices
    odd = [c for c in odd_chordless_cycles(g, cap) if len(c) <= m - 3]
    for c1, c2 in combinations(odd, 2):
        if len(c1) + len(c2) != m or set(c1) & set(c2):
            continue
        yield c1, c2


def is_odd_partial_band(g: GraphLike, cap: int = 100_000) -> OddPartialBandLabeling | None:
    """A labeling witnessing that G is an odd partial band, or None."""
    if g.num_vertices < 6 or not g.is_connected():
        return None
    for c1, c2 in two_cycle_covers(g, cap):
        lab = _opb_labeling(g, c1, c2)
        if lab is not None:
            return lab
    return None


def _arc(cycle: Cycle, i: int, steps: int, step: int) -> list[int]:
    """Vertices met walking `steps` edges from 1-based position i."""
    r = len(cycle)
    return [cycle[(i - 1 + step * t) % r] for t in range(steps + 1)]


def odd_partial_band_generators(g: GraphLike, lab: OddPartialBandLabeling) -> list[EvenClosedWalk]:
    """One walk per cross edge: two consecutive cross edges with the arcs
    between them, and a last walk wrapping around both cycles."""
    a, b, cr = lab.a, lab.b, lab.cross
    r1, r2 = len(a), len(b)
    walks = []
    for (j1, k1), (j2, k2) in zip(cr, cr[1:]):
        seq = _arc(a, j1, j2 - j1, 1) + _arc(b, k2, k2 - k1, -1)
        walks.append(EvenClosedWalk.from_vertices(g, seq))
    (j1, k1), (js, ks) = cr[0], cr[-1]
    seq = _arc(a, js, r1 - js + j1, 1) + _arc(b, k1, r2 - ks + k1, -1)
    walks.append(EvenClosedWalk.from_vertices(g, seq))
    return walks


# ---------------------------------------------------------------------------
# CI-odd-partial-wheels


@dataclass(frozen=True)
class WheelLabeling:
    center: int
    z: Cycle
    spokes: tuple[int, ...]  # 1-based positions s_1 = 1 < s_2 < ...

    def to_json(self, g: GraphLike) -> dict:
        return {"center": g.label(self.center), "z": [g.label(v) for v in self.z], "spokes": list(self.spokes)}


def _wheel_spokes_ok(sp: Sequence[int]) -> bool:
    if not sp or sp[0] != 1:
        return False
    if len(sp) >= 2 and not (sp[1] == 2 or sp[1] % 2 == 1):
        return False
    return all(x % 2 == 1 for x in sp[2:])


def is_ci_odd_partial_wheel(g: GraphLike) -> WheelLabeling | None:
    """G = odd chordless cycle + one vertex x with a CI spoke pattern."""
    vs = frozenset(g.vertices)
    for x in sorted(vs):
        cyc = _cycle_order(g, vs - {x})
        if cyc is None or len(cyc) % 2 == 0 or g.degree(x) == 0:
            continue
        nx_ = set(g.adj[x])
        for z in _relabelings(cyc):
            if z[0] not in nx_:
                continue
            sp = tuple(i + 1 for i, v in enumerate(z) if v in nx_)
            if _wheel_spokes_ok(sp):
                return WheelLabeling(x, z, sp)
    return None


# ---------------------------------------------------------------------------
# CI-double-wheels


@dataclass(frozen=True)
class DoubleWheelLabeling:
    b1: int
    b2: int
    a: Cycle
    j: tuple[int, ...]
    k: tuple[int, ...]

    def to_json(self, g: GraphLike) -> dict:
        return {
            "b1": g.label(self.b1),
            "b2": g.label(self.b2),
            "a": [g.label(v) for v in self.a],
            "j": list(self.j),
            "k": list(self.k),
        }


def is_ci_double_wheel(g: GraphLike) -> DoubleWheelLabeling | None:
    """G = odd chordless cycle + an edge b1 b2 whose spokes are odd and
    non-interlacing: every b1 position <= every b2 position."""
    vs = frozenset(g.vertices)
    for e in g.edge_ids:
        u, v = g.endpoints(e)
        cyc = _cycle_order(g, vs - {u, v})
        if cyc is None or len(cyc) % 2 == 0:
            continue
        for b1, b2 in ((u, v), (v, u)):
            n1 = set(g.adj[b1]) - {b2}
            n2 = set(g.adj[b2]) - {b1}
            if not n1 or not n2:
                continue
            for a in _relabelings(cyc):
                j = tuple(i + 1 for i, w in enumerate(a) if w in n1)
                k = tuple(i + 1 for i, w in enumerate(a) if w in n2)
                if max(j) <= min(k) and all(x % 2 == 1 for x in j + k):
                    return DoubleWheelLabeling(b1, b2, a, j, k)
    return None


# ---------------------------------------------------------------------------
# CI-vertex-bands


@dataclass(frozen=True)
class VertexBandLabeling:
    c: int
    a: Cycle
    b: Cycle
    i: tuple[int, ...]  # positions of b-neighbors of a_1, starting with 1
    generators: tuple[EvenClosedWalk, ...]

    def to_json(self, g: GraphLike) -> dict:
        return {
            "c": g.label(self.c),
            "a": [g.label(v) for v in self.a],
            "b": [g.label(v) for v in self.b],
            "i": list(self.i),
            "generators": [w.labels(g) for w in self.generators],
        }


def is_ci_vertex_band(g: GraphLike) -> VertexBandLabeling | None:
    """G = odd partial band whose cross edges all leave one vertex a_1, plus a
    vertex c adjacent exactly to the two cycle neighbors of a_1."""
    vs = frozenset(g.vertices)
    for c in sorted(vs):
        if g.degree(c) != 2:
            continue
        p, q = sorted(g.adj[c])
        h = g.induced(vs - {c})
        if not h.is_connected():
            continue
        for c1, c2 in two_cycle_covers(h):
            for ca, cb in ((c1, c2), (c2, c1)):
                cross = [h.endpoints(e) for e in h.edge_ids if (h.endpoints(e)[0] in ca) != (h.endpoints(e)[1] in ca)]
                hubs = {x for x, y in cross if x in ca} | {y for x, y in cross if y in ca}
                if len(hubs) != 1:
                    continue
                (a1,) = hubs
                if {p, q} != set(h.adj[a1]) & set(ca):
                    continue
                targets = {x if x in cb else y for x, y in cross}
                lab = _vertex_band_labels(g, c, ca, cb, a1, p, targets)
                if lab is not None:
                    return lab
    return None


def _vertex_band_labels(
    g: GraphLike, c: int, ca: Cycle, cb: Cycle, a1: int, p: int, targets: set[int]
) -> VertexBandLabeling | None:
    a = next(x for x in _relabelings(ca) if x[0] == a1 and x[1] == p)
    for b in _relabelings(cb):
        if b[0] not in targets:
            continue
        idx = tuple(i + 1 for i, v in enumerate(b) if v in targets)
        if all(x % 2 == 1 for x in idx):
            opb = OddPartialBandLabeling(a, b, tuple((1, k) for k in idx))
            gens = odd_partial_band_generators(g, opb)
            gens.append(EvenClosedWalk.from_vertices(g, (c, a[-1], a[0], a[1])))
            return VertexBandLabeling(c, a, b, idx, tuple(gens))
    return None


# ---------------------------------------------------------------------------
# Clique-sum decomposition


@dataclass
class SumNode:
    """kind: "leaf", "1-sum" (shared = cut vertex) or "2-sum" (shared = edge)."""

    vertices: frozenset[int]
    kind: str = "leaf"
    shared: tuple[int, ...] = ()
    children: list["SumNode"] = field(default_factory=list)

    def leaves(self) -> list[frozenset[int]]:
        if self.kind == "leaf":
            return [self.vertices]
        return [x for c in self.children for x in c.leaves()]

    def to_json(self, g: GraphLike) -> dict:
        out: dict = {"kind": self.kind, "vertices": [g.label(v) for v in sorted(self.vertices)]}
        if self.kind != "leaf":
            out["shared"] = [g.label(v) for v in self.shared]
            out["children"] = [c.to_json(g) for c in self.children]
        return out


def decompose_clique_sums(g: GraphLike) -> SumNode:
    """Split at cut vertices first, then at edges {u, v} with G - {u, v}
    disconnected; both endpoints go to every piece."""
    return _decompose(g, frozenset(g.vertices))


def _decompose(g: GraphLike, vs: frozenset[int]) -> SumNode:
    h = g.induced(vs)
    if len(vs) <= 2:
        return SumNode(vs)
    _, cuts = blocks(h)
    if cuts:
        c = min(cuts)
        pieces = connected_components(h.induced(vs - {c}))
        return SumNode(vs, "1-sum", (c,), [_decompose(g, p | {c}) for p in sorted(pieces, key=min)])
    for e in sorted(h.edge_ids, key=h.endpoints):
        u, v = h.endpoints(e)
        pieces = connected_components(h.induced(vs - {u, v}))
        if len(pieces) >= 2:
            return SumNode(vs, "2-sum", (u, v), [_decompose(g, p | {u, v}) for p in sorted(pieces, key=min)])
    return SumNode(vs)


# ---------------------------------------------------------------------------
# Theta graphs


@dataclass(frozen=True)
class ThetaWitness:
    x: int
    y: int
    parity: str  # "even" or "odd"
    paths: tuple[tuple[int, ...], ...]

    def to_json(self, g: GraphLike) -> dict:
        return {
            "base": [g.label(self.x), g.label(self.y)],
            "parity": self.parity,
            "paths": [[g.label(v) for v in p] for p in self.paths],
        }


def _chordless_paths(g: GraphLike, x: int, y: int, cap: int) -> list[tuple[int, ...]]:
    """Induced x-y paths of length >= 2."""
    out: list[tuple[int, ...]] = []
    path = [x]
    on = {x}

    def rec(u: int) -> None:
        for w in sorted(g.adj[u]):
            if w in on or any(z in on for z in g.adj[w] if z != u):
                continue
            if w == y:
                if len(path) >= 2:
                    out.append(tuple(path) + (y,))
                    if len(out) > cap:
                        raise ResourceLimitError("x-y paths for a theta search", len(out), cap)
                continue
            path.append(w)
            on.add(w)
            rec(w)
            on.discard(w)
            path.pop()

    rec(x)
    out.sort(key=lambda p: (len(p), p))
    return out


def _three_separated(g: GraphLike, paths: list[tuple[int, ...]]) -> tuple[tuple[int, ...], ...] | None:
    """Three paths with disjoint interiors and no edge between interiors,
    so that their union is an induced theta."""
    inner = [frozenset(p[1:-1]) for p in paths]
    reach = [frozenset(z for v in s for z in g.adj[v]) | s for s in inner]

    def apart(i: int, j: int) -> bool:
        return not inner[i] & reach[j]

    for i in range(len(paths)):
        for j in range(i + 1, len(paths)):
            if not apart(i, j):
                continue
            for k in range(j + 1, len(paths)):
                if apart(i, k) and apart(j, k):
                    return paths[i], paths[j], paths[k]
    return None


def detect_forbidden_theta(g: GraphLike, path_cap: int = 20_000) -> ThetaWitness | None:
    """An induced theta graph that rules out a complete intersection: three
    chordless x-y paths of length >= 2 with no edges between their
    interiors, all even, or all odd (the bases are then non-adjacent, since
    an x-y edge would be a chord)."""
    for x, y in combinations(g.sorted_vertices(), 2):
        if g.degree(x) < 3 or g.degree(y) < 3 or g.has_edge(x, y):
            continue
        paths = _chordless_paths(g, x, y, path_cap)
        for parity, rem in (("even", 0), ("odd", 1)):
            hit = _three_separated(g, [p for p in paths if (len(p) - 1) % 2 == rem])
            if hit is not None:
                return ThetaWitness(x, y, parity, hit)
    return None


# ---------------------------------------------------------------------------
# Odd-cycle packing and normality


def is_normal_edge_algebra(g: GraphLike, cap: int = 100_000) -> tuple[bool, tuple[Cycle, Cycle] | None]:
    """Normal iff every two vertex-disjoint odd cycles are joined by an edge.
    A violating pair of odd cycles contains a violating pair of chordless
    ones, so chordless cycles suffice."""
    odd = odd_chordless_cycles(g, cap)
    sets = [frozenset(c) for c in odd]
    for i, j in combinations(range(len(odd)), 2):
        if sets[i] & sets[j]:
            continue
        if not any(set(g.adj[v]) & sets[j] for v in sets[i]):
            return False, (odd[i], odd[j])
    return True, None


def three_disjoint_odd_cycles(g: GraphLike, cap: int = 100_000) -> tuple[Cycle, Cycle, Cycle] | None:
    odd = odd_chordless_cycles(g, cap)
    sets = [frozenset(c) for c in odd]
    for i, j in combinations(range(len(odd)), 2):
        if sets[i] & sets[j]:
            continue
        both = sets[i] | sets[j]
        for k in range(j + 1, len(odd)):
            if not sets[k] & both:
                return odd[i], odd[j], odd[k]
    return None


def max_disjoint_odd_cycles_leq2(g: GraphLike, cap: int = 100_000) -> bool:
    return three_disjoint_odd_cycles(g, cap) is None


# ---------------------------------------------------------------------------
# Classification


class StructureTag(str, Enum):
    BIPARTITE_RING = "BipartiteRingGraph"
    ONE_SUM_WHEEL = "OneSum_CIOddPartialWheel"
    ONE_SUM_OPB_EDGE = "OneSum_OddPartialBand_Edge"
    ONE_SUM_VERTEX_BAND = "OneSum_CIVertexBand"
    TWO_SUM_DOUBLE_WHEEL = "TwoSum_CIDoubleWheel"
    TWO_SUM_OPB = "TwoSum_OddPartialBand"
    UNCLASSIFIED = "Unclassified"


@dataclass
class StructureClass:
    tag: StructureTag
    attachment: dict = field(default_factory=dict)
    partition: CRPartition | None = None
    reason: str = ""
    witness: dict | None = None
    detail: dict | None = None  # labeling of the gadget

    def to_json(self, g: GraphLike) -> dict:
        out: dict = {"class": self.tag.value, "attachment": self.attachment}
        if self.partition is not None:
            out["partition"] = self.partition.to_json(g)
        if self.reason:
            out["reason"] = self.reason
        if self.witness is not None:
            out["witness"] = self.witness
        if self.detail is not None:
            out["labeling"] = self.detail
        return out


def _r_shape_ok(g: GraphLike, rest: frozenset[int]) -> bool:
    # K1 and K2 count as 2-connected here; both are bipartite ring graphs.
    h = g.induced(rest)
    return h.is_connected() if len(rest) <= 2 else is_two_connected(h)


def _classify_partition(g: GraphLike, p: CRPartition, budget: Budget) -> StructureClass | str:
    """The tag for this partition, or a reason string when none applies."""
    cv, rest = p.cycle_vertices, p.rest
    if cv and not g.induced(cv).is_connected():
        return "C is not connected"
    if not rest:
        return "R is empty"
    if not _r_shape_ok(g, rest):
        return "R is not 2-connected"
    if not decide(g.induced(rest)).is_ci:
        return "R is not a bipartite ring graph"
    if not cv:
        return StructureClass(StructureTag.BIPARTITE_RING, {}, p)
    u_set = sorted({u for u in rest if set(g.adj[u]) & cv})
    lab = g.label
    if len(p.cycles) == 1:
        kind = "cycle"
        opb = None
    else:
        opb = is_odd_partial_band(g.induced(cv), budget.cycles)
        if opb is None:
            return "C is two odd cycles but not an odd partial band"
        kind = "opb"
    if len(u_set) == 1:
        (u,) = u_set
        x = g.induced(cv | {u})
        att = {"vertex": lab(u)}
        if kind == "cycle":
            w = is_ci_odd_partial_wheel(x)
            if w is not None:
                return StructureClass(StructureTag.ONE_SUM_WHEEL, att, p, detail=w.to_json(g))
            return "C + attachment vertex is not a CI-odd-partial-wheel"
        if x.degree(u) == 1:
            (c,) = set(x.adj[u])
            return StructureClass(
                StructureTag.ONE_SUM_OPB_EDGE, {**att, "edge": [lab(u), lab(c)]}, p, detail=opb.to_json(g)
            )
        vb = is_ci_vertex_band(x)
        if vb is not None and vb.c == u:
            return StructureClass(StructureTag.ONE_SUM_VERTEX_BAND, att, p, detail=vb.to_json(g))
        return "C + attachment vertex is not a CI-vertex-band"
    if len(u_set) == 2 and g.has_edge(*u_set):
        u1, u2 = u_set
        x = g.induced(cv | {u1, u2})
        if kind == "cycle":
            dw = is_ci_double_wheel(x)
            if dw is not None:
                return StructureClass(
                    StructureTag.TWO_SUM_DOUBLE_WHEEL, {"edge": [lab(u1), lab(u2)]}, p, detail=dw.to_json(g)
                )
            return "C + attachment edge is not a CI-double-wheel"
        n1, n2 = set(g.adj[u1]) & cv, set(g.adj[u2]) & cv
        if len(n1) == 1 and len(n2) == 1:
            (pp,), (qq,) = n1, n2
            if pp != qq and g.has_edge(pp, qq):
                return StructureClass(
                    StructureTag.TWO_SUM_OPB,
                    {"edge": [lab(min(pp, qq)), lab(max(pp, qq))], "square": [lab(pp), lab(u1), lab(u2), lab(qq)]},
                    p,
                    detail=opb.to_json(g),
                )
        return "C + attachment edge is not a 2-clique-sum of C and a 4-cycle"
    return f"C meets R in {len(u_set)} vertices, not one vertex or one edge"


def classify_ultimo(g: GraphLike, budget: Budget | None = None) -> StructureClass:
    """Family tag of a connected graph, trying [C; R] partitions in order."""
    budget = budget or Budget()
    if not g.is_connected():
        return StructureClass(StructureTag.UNCLASSIFIED, reason="graph is not connected")
    first: tuple[CRPartition, str] | None = None
    for p in iter_cr_partitions(g, budget):
        res = _classify_partition(g, p, budget)
        if isinstance(res, StructureClass):
            return res
        if first is None:
            first = (p, res)
    out = StructureClass(StructureTag.UNCLASSIFIED)
    if first is None:
        out.reason = "no [C; R] partition"
    else:
        out.partition, out.reason = first
    out.witness = explain_not_ci(g)
    return out


def explain_not_ci(g: GraphLike, path_cap: int = 20_000) -> dict | None:
    """A forbidden pattern from the necessary conditions, if one is present."""
    if not g.is_connected():
        return None
    f = prefilter(g)
    if f is not None:
        return f.to_json()
    three = three_disjoint_odd_cycles(g)
    if three is not None:
        return {"three_disjoint_odd_cycles": [[g.label(v) for v in c] for c in three]}
    try:
        th = detect_forbidden_theta(g, path_cap)
    except ResourceLimitError:
        return None
    if th is not None:
        return {"theta": th.to_json(g)}
    return None
