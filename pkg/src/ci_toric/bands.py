"""Odd bands and even Moebius bands: the 3-regular complete intersections.

A chain has rails a_1..a_r, b_1..b_r (paths) and rungs {a_i, b_i}. Closing it
with {a_1, a_r}, {b_1, b_r} for odd r gives an odd band; closing with
{a_1, b_r}, {a_r, b_1} for even r gives an even Moebius band (K4 is r = 2).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .graph import GraphLike, count_bipartite, is_bipartite
from .walks import EvenClosedWalk


class BandKind(str, Enum):
    ODD_BAND = "OddBand"
    EVEN_MOEBIUS_BAND = "EvenMoebiusBand"


@dataclass(frozen=True)
class BandLabeling:
    kind: BandKind
    a: tuple[int, ...]
    b: tuple[int, ...]

    @property
    def r(self) -> int:
        return len(self.a)

    def rungs(self) -> list[tuple[int, int]]:
        return list(zip(self.a, self.b))

    def closing(self) -> list[tuple[int, int]]:
        a, b = self.a, self.b
        if self.kind is BandKind.ODD_BAND:
            return [(a[0], a[-1]), (b[0], b[-1])]
        return [(a[0], b[-1]), (a[-1], b[0])]

    def edge_set(self) -> set[frozenset[int]]:
        a, b = self.a, self.b
        es = {frozenset(p) for p in self.rungs()}
        for rail in (a, b):
            es |= {frozenset(p) for p in zip(rail, rail[1:])}
        es |= {frozenset(p) for p in self.closing()}
        return es


def expected_kind(r: int, crossed: bool) -> BandKind | None:
    """Closing pattern plus parity; the other two combinations are bipartite."""
    if not crossed and r % 2 == 1 and r >= 3:
        return BandKind.ODD_BAND
    if crossed and r % 2 == 0 and r >= 2:
        return BandKind.EVEN_MOEBIUS_BAND
    return None


def _is_k4(h: GraphLike) -> bool:
    return h.num_vertices == 4 and h.num_edges == 6


def recognize_band(h: GraphLike) -> BandLabeling | None:
    """Labeling of a connected graph as an odd band / even Moebius band, or None."""
    vs = h.sorted_vertices()
    if not vs or any(h.degree(v) != 3 for v in vs) or is_bipartite(h):
        return None
    if len(vs) == 4:
        if not _is_k4(h):
            return None
        a1, a2, b1, b2 = vs[0], vs[1], vs[2], vs[3]
        # Rails a1-a2, b1-b2; closing {a1, b2}, {a2, b1}.
        return BandLabeling(BandKind.EVEN_MOEBIUS_BAND, (a1, a2), (b1, b2))
    # Rungs are exactly the edges whose endpoints leave a bipartite remainder.
    partner: dict[int, int] = {}
    for e in h.edge_ids:
        u, v = h.endpoints(e)
        if count_bipartite(h, (u, v)) == 1:
            if u in partner or v in partner:
                return None
            partner[u], partner[v] = v, u
    if len(partner) != len(vs):
        return None
    a1 = vs[0]
    b1 = partner[a1]
    for a2 in sorted(set(h.adj[a1]) - {b1}):
        lab = _walk_ladder(h, partner, a1, a2)
        if lab is not None:
            return lab
    return None


def _walk_ladder(h: GraphLike, partner: dict[int, int], a1: int, a2: int) -> BandLabeling | None:
    a, b = [a1], [partner[a1]]
    nxt = a2
    while True:
        if nxt == a[0] or nxt == b[0]:
            break
        if nxt in a or nxt in b:
            return None
        a.append(nxt)
        b.append(partner[nxt])
        if not h.has_edge(b[-2], b[-1]):
            return None
        others = sorted(set(h.adj[nxt]) - {a[-2], partner[nxt]})
        if len(others) != 1:
            return None
        nxt = others[0]
    crossed = nxt == b[0]
    if len(a) + len(b) != h.num_vertices:
        return None
    kind = expected_kind(len(a), crossed)
    if kind is None:
        return None
    lab = BandLabeling(kind, tuple(a), tuple(b))
    actual = {frozenset(h.endpoints(e)) for e in h.edge_ids}
    return lab if lab.edge_set() == actual else None


def band_generators(h: GraphLike, lab: BandLabeling) -> list[EvenClosedWalk]:
    """The r quadric walks of the chain plus the closing square."""
    a, b, r = lab.a, lab.b, lab.r
    seqs = [(a[i], b[i], b[i + 1], a[i + 1]) for i in range(r - 1)]
    if lab.kind is BandKind.ODD_BAND:
        seqs.append((a[0], b[0], b[-1], a[-1]))
    else:
        seqs.append((a[0], b[0], a[-1], b[-1]))
    return [EvenClosedWalk.from_vertices(h, s) for s in seqs]
