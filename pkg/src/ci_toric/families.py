"""Deterministic constructions of named graphs and family members.

Builders return a `Graph` with readable labels (a1.., b1.., z1.., x, c, r0..).
The `random_*` builders draw parameters from a caller-supplied
`random.Random`, so a seed fixes the instance.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Sequence

from .errors import PreconditionError
from .graph import Graph

Edges = list[tuple[str, str]]


def _ring(names: Sequence[str]) -> Edges:
    return [(names[i], names[(i + 1) % len(names)]) for i in range(len(names))]


def _names(prefix: str, r: int) -> list[str]:
    return [f"{prefix}{i}" for i in range(1, r + 1)]


def _odd(r: int, what: str, least: int = 3) -> None:
    if r < least or r % 2 == 0:
        raise PreconditionError(f"{what} must be odd and >= {least}, got {r}")


# ---------------------------------------------------------------------------
# Basic graphs


def cycle(r: int, prefix: str = "v") -> Graph:
    if r < 3:
        raise PreconditionError(f"cycle length must be >= 3, got {r}")
    return Graph.from_labeled_edges(_ring(_names(prefix, r)))


def path(r: int, prefix: str = "v") -> Graph:
    """Path with r vertices."""
    vs = _names(prefix, r)
    return Graph.from_labeled_edges(list(zip(vs, vs[1:])), vs)


def complete(r: int) -> Graph:
    vs = _names("v", r)
    return Graph.from_labeled_edges([(vs[i], vs[j]) for i in range(r) for j in range(i + 1, r)], vs)


def complete_bipartite(p: int, q: int) -> Graph:
    xs, ys = _names("x", p), _names("y", q)
    return Graph.from_labeled_edges([(x, y) for x in xs for y in ys], xs + ys)


def band(r: int) -> Graph:
    """Odd band for odd r, even Moebius band for even r (K4 when r = 2)."""
    if r < 2:
        raise PreconditionError(f"band needs r >= 2, got {r}")
    a, b = _names("a", r), _names("b", r)
    es: Edges = list(zip(a, b)) + list(zip(a, a[1:])) + list(zip(b, b[1:]))
    if r % 2:
        es += [(a[0], a[-1]), (b[0], b[-1])]
    else:
        es += [(a[0], b[-1]), (a[-1], b[0])]
    return Graph.from_labeled_edges(es, [x for pair in zip(a, b) for x in pair])


def odd_band(r: int) -> Graph:
    _odd(r, "odd band r")
    return band(r)


def moebius_band(r: int) -> Graph:
    if r < 2 or r % 2:
        raise PreconditionError(f"Moebius band r must be even and >= 2, got {r}")
    return band(r)


def theta(lengths: Sequence[int], adjacent_bases: bool = False) -> Graph:
    """Base vertices x, y joined by paths of the given lengths (>= 2)."""
    es: Edges = []
    for i, ln in enumerate(lengths):
        if ln < 2:
            raise PreconditionError("theta paths need length >= 2")
        inner = [f"p{i + 1}_{t}" for t in range(1, ln)]
        seq = ["x"] + inner + ["y"]
        es += list(zip(seq, seq[1:]))
    if adjacent_bases:
        es.append(("x", "y"))
    return Graph.from_labeled_edges(es, ["x", "y"])


# ---------------------------------------------------------------------------
# Odd-cycle gadgets


def odd_partial_band(r1: int, r2: int, cross: Sequence[tuple[int, int]]) -> Graph:
    """Cycles a1..a_r1, b1..b_r2 and cross edges {a_j, b_k}, 1-based."""
    _odd(r1, "r1")
    _odd(r2, "r2")
    if not cross:
        raise PreconditionError("an odd partial band needs at least one cross edge")
    a, b = _names("a", r1), _names("b", r2)
    es = _ring(a) + _ring(b) + [(a[j - 1], b[k - 1]) for j, k in cross]
    return Graph.from_labeled_edges(es, a + b)


def partial_wheel(r: int, spokes: Sequence[int]) -> Graph:
    """Cycle z1..zr and a center x adjacent to z_s for s in `spokes`."""
    _odd(r, "wheel cycle length")
    z = _names("z", r)
    return Graph.from_labeled_edges(_ring(z) + [("x", z[s - 1]) for s in spokes], z + ["x"])


def double_wheel(r: int, j: Sequence[int], k: Sequence[int]) -> Graph:
    """Cycle a1..ar, edge b1 b2, b1 ~ a_j for j in `j`, b2 ~ a_k for k in `k`."""
    _odd(r, "double wheel cycle length")
    a = _names("a", r)
    es = _ring(a) + [("b1", "b2")] + [("b1", a[i - 1]) for i in j] + [("b2", a[i - 1]) for i in k]
    return Graph.from_labeled_edges(es, a + ["b1", "b2"])


def vertex_band(r: int, s: int, ks: Sequence[int]) -> Graph:
    """Cycles a1..ar, b1..bs; a1 ~ b_i for i in `ks`; c ~ a2, a_r."""
    _odd(r, "r")
    _odd(s, "s")
    a, b = _names("a", r), _names("b", s)
    es = _ring(a) + _ring(b) + [(a[0], b[i - 1]) for i in ks] + [("c", a[1]), ("c", a[-1])]
    return Graph.from_labeled_edges(es, a + b + ["c"])


# ---------------------------------------------------------------------------
# Clique sums


def one_sum(g1: Graph, v1: str, g2: Graph, v2: str) -> Graph:
    """Glue g2 onto g1 identifying v2 with v1. Other g2 labels get a "'"
    suffix when they clash with g1 labels."""
    return _glue(g1, g2, {v2: v1})


def two_sum(g1: Graph, e1: tuple[str, str], g2: Graph, e2: tuple[str, str]) -> Graph:
    """Glue along edges, identifying e2[0] with e1[0] and e2[1] with e1[1]."""
    if not g1.has_edge(g1.vertex(e1[0]), g1.vertex(e1[1])) or not g2.has_edge(g2.vertex(e2[0]), g2.vertex(e2[1])):
        raise PreconditionError("two_sum needs an edge on both sides")
    return _glue(g1, g2, {e2[0]: e1[0], e2[1]: e1[1]})


def _glue(g1: Graph, g2: Graph, ident: dict[str, str]) -> Graph:
    taken = set(g1.labels)
    ren: dict[str, str] = {}
    for lab in g2.labels:
        if lab in ident:
            ren[lab] = ident[lab]
            continue
        new = lab
        while new in taken:
            new += "'"
        taken.add(new)
        ren[lab] = new
    es = [(g1.labels[u], g1.labels[v]) for u, v in g1.edges]
    have = {frozenset(p) for p in es}
    for u, v in g2.edges:
        p = (ren[g2.labels[u]], ren[g2.labels[v]])
        if frozenset(p) not in have:
            have.add(frozenset(p))
            es.append(p)
    return Graph.from_labeled_edges(es, list(g1.labels) + [ren[x] for x in g2.labels])


# ---------------------------------------------------------------------------
# Named example graphs


def fig5() -> Graph:
    """Seven vertices, nine edges; not a complete intersection."""
    return Graph.from_labeled_edges(
        [("v1", "v2"), ("v2", "v3"), ("v1", "v3"), ("v3", "v4"), ("v4", "v5"),
         ("v5", "v6"), ("v4", "v6"), ("v6", "v7"), ("v3", "v7")],
        _names("v", 7),
    )  # fmt: skip


def three_triangles() -> Graph:
    """Triangles T1, T2, T3 with bridges t1a-t2a and t2a-t3a."""
    es: Edges = []
    for t in ("t1", "t2", "t3"):
        es += _ring([f"{t}a", f"{t}b", f"{t}c"])
    es += [("t1a", "t2a"), ("t2a", "t3a")]
    return Graph.from_labeled_edges(es)


def contraejemplo() -> Graph:
    """Triangle v1 v2 v3, square v4 v7 v6 v5, and v3 ~ v5, v7."""
    return Graph.from_labeled_edges(
        [("v1", "v2"), ("v1", "v3"), ("v2", "v3"), ("v4", "v7"), ("v7", "v6"),
         ("v6", "v5"), ("v5", "v4"), ("v3", "v5"), ("v3", "v7")],
        _names("v", 7),
    )  # fmt: skip


def fig4() -> Graph:
    """Bipartite, not a ring graph; v has degree 2 and contracting it gives
    a complete intersection."""
    return Graph.from_labeled_edges(
        [("v", "u1"), ("v", "u2"), ("u2", "d"), ("a", "u1"), ("u1", "b"),
         ("c", "d"), ("d", "e"), ("a", "c"), ("b", "e")],
        ["v", "u1", "u2", "a", "b", "c", "d", "e"],
    )  # fmt: skip


def fig_opb() -> Graph:
    return odd_partial_band(7, 5, [(1, 1), (3, 1), (6, 2), (6, 4), (7, 5)])


def fig_opw_left() -> Graph:
    return partial_wheel(7, [1, 3, 7])


def fig_opw_right() -> Graph:
    return partial_wheel(7, [1, 2, 3, 7])


def fig_doubwheel() -> Graph:
    return double_wheel(7, [1, 3], [3, 7])


def fig_vertexb() -> Graph:
    return vertex_band(5, 7, [1, 3, 7])


def clique_sum_g3() -> Graph:
    """Triangle and square sharing one vertex."""
    return one_sum(cycle(3, "t"), "t1", cycle(4, "s"), "s1")


def clique_sum_g4() -> Graph:
    """Triangle and square sharing one edge."""
    return two_sum(cycle(3, "t"), ("t1", "t2"), cycle(4, "s"), ("s1", "s2"))


# ---------------------------------------------------------------------------
# Random family members


def _odd_between(rng: random.Random, lo: int, hi: int) -> int:
    return rng.choice([x for x in range(lo, hi + 1) if x % 2])


def random_ring(rng: random.Random, pieces: int, max_len: int = 8) -> Graph:
    """2-connected bipartite ring graph: an even cycle, then even cycles
    glued along existing edges."""
    g = cycle(rng.choice(range(4, max_len + 1, 2)), "r0_")
    for i in range(1, pieces):
        e = rng.choice(g.edge_ids)
        u, v = (g.labels[x] for x in g.edges[e])
        c = cycle(rng.choice(range(4, max_len + 1, 2)), f"r{i}_")
        g = two_sum(g, (u, v), c, (f"r{i}_1", f"r{i}_2"))
    return g


def random_wheel_spokes(rng: random.Random, r: int) -> list[int]:
    odd = list(range(3, r + 1, 2))
    sp = [1]
    second = rng.choice([None, 2] + odd)
    if second is None:
        return sp
    sp.append(second)
    sp += sorted(x for x in odd if x > second and rng.random() < 0.5)
    return sp


def random_opb_cross(rng: random.Random, r1: int, r2: int) -> list[tuple[int, int]]:
    """Weakly increasing, parity-matched cross pairs; at least one."""
    s = rng.randint(1, 4)
    pairs: set[tuple[int, int]] = set()
    for _ in range(s):
        j = rng.randint(1, r1)
        k = rng.choice([x for x in range(1, r2 + 1) if x % 2 == j % 2])
        pairs.add((j, k))
    chain = sorted(pairs)
    # Keep a weakly increasing subsequence in k.
    out = []
    for j, k in chain:
        if not out or k >= out[-1][1]:
            out.append((j, k))
    return out


def random_double_wheel_spokes(rng: random.Random, r: int) -> tuple[list[int], list[int]]:
    odd = list(range(1, r + 1, 2))
    cut = rng.randrange(len(odd))
    left, right = odd[: cut + 1], odd[cut:]
    j = sorted(rng.sample(left, rng.randint(1, len(left))))
    rest = [x for x in right if x >= j[-1]]
    k = sorted(rng.sample(rest, rng.randint(1, len(rest))))
    return j, k


def random_vertex_band_targets(rng: random.Random, s: int) -> list[int]:
    return [1] + sorted(x for x in range(3, s + 1, 2) if rng.random() < 0.5)


@dataclass(frozen=True)
class FamilyInstance:
    graph: Graph
    tag: str
    params: dict


def _attach_vertex(rng: random.Random, ring: Graph) -> str:
    return ring.labels[rng.randrange(ring.num_vertices)]


def _attach_edge(rng: random.Random, ring: Graph) -> tuple[str, str]:
    u, v = ring.edges[rng.randrange(ring.num_edges)]
    return ring.labels[u], ring.labels[v]


def random_ring_instance(rng: random.Random) -> FamilyInstance:
    pieces = rng.randint(1, 4)
    return FamilyInstance(random_ring(rng, pieces), "BipartiteRingGraph", {"pieces": pieces})


def random_wheel_instance(rng: random.Random) -> FamilyInstance:
    r = _odd_between(rng, 3, 9)
    sp = random_wheel_spokes(rng, r)
    ring = random_ring(rng, rng.randint(1, 3))
    at = _attach_vertex(rng, ring)
    g = one_sum(ring, at, partial_wheel(r, sp), "x")
    return FamilyInstance(g, "OneSum_CIOddPartialWheel", {"r": r, "spokes": sp, "x": at})


def random_opb_edge_instance(rng: random.Random) -> FamilyInstance:
    r1, r2 = _odd_between(rng, 3, 7), _odd_between(rng, 3, 7)
    cross = random_opb_cross(rng, r1, r2)
    opb = odd_partial_band(r1, r2, cross)
    end = opb.labels[rng.randrange(opb.num_vertices)]
    x = one_sum(opb, end, Graph.from_labeled_edges([("p", "u")]), "p")
    ring = random_ring(rng, rng.randint(1, 3))
    at = _attach_vertex(rng, ring)
    g = one_sum(ring, at, x, "u")
    return FamilyInstance(g, "OneSum_OddPartialBand_Edge", {"r1": r1, "r2": r2, "cross": cross, "end": end, "u": at})


def random_vertex_band_instance(rng: random.Random) -> FamilyInstance:
    r, s = _odd_between(rng, 3, 7), _odd_between(rng, 3, 7)
    ks = random_vertex_band_targets(rng, s)
    ring = random_ring(rng, rng.randint(1, 3))
    at = _attach_vertex(rng, ring)
    g = one_sum(ring, at, vertex_band(r, s, ks), "c")
    return FamilyInstance(g, "OneSum_CIVertexBand", {"r": r, "s": s, "i": ks, "c": at})


def random_double_wheel_instance(rng: random.Random) -> FamilyInstance:
    r = _odd_between(rng, 3, 9)
    j, k = random_double_wheel_spokes(rng, r)
    ring = random_ring(rng, rng.randint(1, 3))
    at = _attach_edge(rng, ring)
    g = two_sum(ring, at, double_wheel(r, j, k), ("b1", "b2"))
    return FamilyInstance(g, "TwoSum_CIDoubleWheel", {"r": r, "j": j, "k": k, "b": list(at)})


def random_opb_square_instance(rng: random.Random) -> FamilyInstance:
    r1, r2 = _odd_between(rng, 3, 7), _odd_between(rng, 3, 7)
    cross = random_opb_cross(rng, r1, r2)
    opb = odd_partial_band(r1, r2, cross)
    p, q = (opb.labels[x] for x in opb.edges[rng.randrange(opb.num_edges)])
    square = Graph.from_labeled_edges([("p", "u1"), ("u1", "u2"), ("u2", "q"), ("q", "p")])
    x = two_sum(opb, (p, q), square, ("p", "q"))
    ring = random_ring(rng, rng.randint(1, 3))
    at = _attach_edge(rng, ring)
    g = two_sum(ring, at, x, ("u1", "u2"))
    return FamilyInstance(
        g, "TwoSum_OddPartialBand", {"r1": r1, "r2": r2, "cross": cross, "edge": [p, q], "u": list(at)}
    )


RANDOM_FAMILIES: dict[str, Callable[[random.Random], FamilyInstance]] = {
    "a": random_ring_instance,
    "b.1": random_wheel_instance,
    "b.2": random_opb_edge_instance,
    "b.3": random_vertex_band_instance,
    "c.1": random_double_wheel_instance,
    "c.2": random_opb_square_instance,
}


# ---------------------------------------------------------------------------
# Name-based access for the command line


def _ints(params: dict, key: str, default: list[int] | None = None) -> list[int]:
    v = params.get(key)
    if v is None:
        if default is None:
            raise PreconditionError(f"missing parameter {key}")
        return default
    if isinstance(v, list):
        return [int(x) for x in v]
    return [int(x) for x in str(v).replace(";", ",").split(",") if x]


def _int(params: dict, key: str, default: int | None = None) -> int:
    v = params.get(key, default)
    if v is None:
        raise PreconditionError(f"missing parameter {key}")
    return int(v)


def _pairs(params: dict, key: str) -> list[tuple[int, int]]:
    flat = _ints(params, key)
    if len(flat) % 2:
        raise PreconditionError(f"{key} needs an even number of integers (j,k pairs)")
    return list(zip(flat[::2], flat[1::2]))


def build_family(name: str, params: dict, seed: int | None = None) -> Graph:
    """Build a named family member; `random-*` names use the seed."""
    fixed: dict[str, Callable[[], Graph]] = {
        "fig5": fig5,
        "fig1": three_triangles,
        "fig2": lambda: moebius_band(4),
        "fig4": fig4,
        "contraejemplo": contraejemplo,
        "opb-figure": fig_opb,
        "doubwheel-figure": fig_doubwheel,
        "vertexb-figure": fig_vertexb,
        "k23": lambda: complete_bipartite(2, 3),
    }
    if name in fixed:
        return fixed[name]()
    if name == "cycle":
        return cycle(_int(params, "r"))
    if name == "complete":
        return complete(_int(params, "r"))
    if name == "bipartite":
        return complete_bipartite(_int(params, "p"), _int(params, "q"))
    if name == "band":
        return odd_band(_int(params, "r"))
    if name == "moebius":
        return moebius_band(_int(params, "r"))
    if name == "opb":
        return odd_partial_band(_int(params, "r1"), _int(params, "r2"), _pairs(params, "cross"))
    if name == "wheel":
        return partial_wheel(_int(params, "r"), _ints(params, "spokes"))
    if name == "double-wheel":
        return double_wheel(_int(params, "r"), _ints(params, "j"), _ints(params, "k"))
    if name == "vertex-band":
        return vertex_band(_int(params, "r"), _int(params, "s"), _ints(params, "i"))
    if name == "theta":
        return theta(_ints(params, "lengths"), bool(_int(params, "adjacent", 0)))
    if name.startswith("random-"):
        key = name[len("random-") :]
        if key not in RANDOM_FAMILIES:
            raise PreconditionError(f"unknown random family {key!r}; choose from {sorted(RANDOM_FAMILIES)}")
        return RANDOM_FAMILIES[key](random.Random(seed)).graph
    raise PreconditionError(f"unknown family {name!r}")


FAMILY_NAMES = (
    "fig5 fig1 fig2 fig4 contraejemplo opb-figure doubwheel-figure vertexb-figure k23 "
    "cycle complete bipartite band moebius opb wheel double-wheel vertex-band theta"
).split() + [f"random-{k}" for k in RANDOM_FAMILIES]
