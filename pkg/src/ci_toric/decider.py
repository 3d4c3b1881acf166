"""Decide whether P_G is a complete intersection, with a certificate.

The graph is peeled one vertex of degree <= 2 at a time. A vertex whose
removal keeps the number of bipartite components contributes one generator:
the binomial of a shortest even closed walk on a vertex set W determined by
the vertex. What remains must be a disjoint union of odd bands and even
Moebius bands, which contribute their own quadrics. The collected binomials
are then checked exactly with the dominating / determinantal-divisor
criterion.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations
from typing import Iterator

from .bands import band_generators, recognize_band
from .budget import Budget
from .errors import ResourceLimitError
from .graph import (
    Graph,
    GraphLike,
    SubgraphView,
    count_bipartite,
    height,
    is_bipartite,
    nontrivial_components,
)
from .matrix import Certificate, MixedWitness, verify_fs
from .walk_finder import iter_shortest_even_walks, shortest_even_walk_exact_vertices
from .walks import Binomial, EvenClosedWalk, binomial_of_walk


class Verdict(str, Enum):
    CI = "CI"
    NOT_CI = "NotCI"


class FailureKind(str, Enum):
    NO_EVEN_WALK_FOR_W = "NoEvenWalkForW"
    RESIDUE_NOT_BAND = "ResidueNotBand"
    CERTIFICATE_FAILED = "CertificateFailed"
    BOUND_VIOLATED = "BoundViolated"


@dataclass(frozen=True)
class Failure:
    kind: FailureKind
    detail: dict

    def to_json(self) -> dict:
        return {"kind": self.kind.value, **self.detail}


@dataclass(frozen=True)
class Generator:
    walk: EvenClosedWalk
    binomial: Binomial


@dataclass(frozen=True)
class TraceStep:
    vertex: int
    degree: int
    case: int
    ws: tuple[int, ...] = ()
    walk: EvenClosedWalk | None = None


@dataclass
class CIReport:
    """Verdict plus everything needed to check or explain it.

    For NotCI verdicts `generators` still lists what was collected before the
    failure, which is what a failed certificate refers to.
    """

    graph: GraphLike
    verdict: Verdict
    height: int
    generators: list[Generator] = field(default_factory=list)
    failure: Failure | None = None
    trace: list[TraceStep] = field(default_factory=list)
    certificate: Certificate | None = None
    bounds: list["EdgeBounds"] = field(default_factory=list)

    @property
    def is_ci(self) -> bool:
        return self.verdict is Verdict.CI

    @property
    def generated_by_quadrics(self) -> bool:
        """Equality in the refined edge bound of every component (CI only)."""
        return self.is_ci and all(b.refined_equality for b in self.bounds)

    def to_json(self) -> dict:
        g = self.graph
        out: dict = {
            "verdict": self.verdict.value,
            "height": self.height,
            "generators": [
                {**gen.binomial.canonical_sign().to_json(), "walk": gen.walk.labels(g)} for gen in self.generators
            ],
            "trace": [_trace_json(g, t) for t in self.trace],
        }
        if self.failure is not None:
            out["failure"] = self.failure.to_json()
        if self.certificate is not None:
            out["certificate"] = self.certificate.to_json()
        out["bounds"] = [b.to_json() for b in self.bounds]
        out["generated_by_quadrics"] = self.generated_by_quadrics
        return out


def _trace_json(g: GraphLike, t: TraceStep) -> dict:
    out: dict = {"vertex": g.label(t.vertex), "degree": t.degree, "case": t.case}
    if t.ws:
        out["W"] = [g.label(v) for v in t.ws]
    if t.walk is not None:
        out["walk"] = t.walk.labels(g)
    return out


@dataclass(frozen=True)
class DecideOptions:
    budget: Budget = field(default_factory=Budget)
    retry_walks: bool = False
    prefilter: bool = True
    order_seed: int | None = None  # randomize the elimination order


# ---------------------------------------------------------------------------
# Necessary conditions


@dataclass(frozen=True)
class EdgeBounds:
    """Edge-count bounds for a connected graph.

    Plain: 2n + 4 <= 3m (bipartite), 2n <= 3m (otherwise).
    Refined: 2n + 4 <= 4m - S (bipartite), 2n <= 3m - S (otherwise), where
    S sums b(G minus v) over all vertices v. Complete intersections satisfy
    both; equality in the refined bound holds exactly when the ideal is
    generated by quadrics.
    """

    bipartite: bool
    lhs: int
    rhs: int
    refined_rhs: int

    @property
    def holds(self) -> bool:
        return self.lhs <= self.rhs

    @property
    def refined_holds(self) -> bool:
        return self.lhs <= self.refined_rhs

    @property
    def refined_equality(self) -> bool:
        return self.lhs == self.refined_rhs

    def to_json(self) -> dict:
        return {
            "bipartite": self.bipartite,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "refined_rhs": self.refined_rhs,
            "refined_equality": self.refined_equality,
        }


def edge_bounds(g: GraphLike) -> EdgeBounds:
    n, m = g.num_edges, g.num_vertices
    bip = is_bipartite(g)
    s = sum(count_bipartite(g, (v,)) for v in g.vertices)
    if bip:
        return EdgeBounds(True, 2 * n + 4, 3 * m, 4 * m - s)
    return EdgeBounds(False, 2 * n, 3 * m, 3 * m - s)


def find_k23(g: GraphLike) -> tuple[int, int, tuple[int, int, int]] | None:
    """Two vertices with three common neighbors, i.e. a K(2,3) subgraph."""
    vs = g.sorted_vertices()
    for x, y in combinations(vs, 2):
        common = sorted(set(g.adj[x]) & set(g.adj[y]))
        if len(common) >= 3:
            return x, y, (common[0], common[1], common[2])
    return None


def prefilter(g: GraphLike) -> Failure | None:
    """Cheap necessary conditions for a connected graph."""
    if g.num_vertices <= 1:
        return None
    bd = edge_bounds(g)
    if not bd.holds:
        return Failure(FailureKind.BOUND_VIOLATED, {"bound": bd.to_json()})
    k = find_k23(g)
    if k is not None:
        x, y, zs = k
        return Failure(
            FailureKind.BOUND_VIOLATED,
            {"k23": {"pair": [g.label(x), g.label(y)], "common": [g.label(z) for z in zs]}},
        )
    return None


# ---------------------------------------------------------------------------
# Elimination


@dataclass
class _Step:
    graph: SubgraphView  # H before removing the vertex
    trace: TraceStep
    walk: EvenClosedWalk | None = None


class _Stop(Exception):
    def __init__(self, failure: Failure):
        self.failure = failure


def _pick_vertex(h: GraphLike, rng: random.Random | None) -> int | None:
    low = [v for v in h.vertices if h.degree(v) <= 2]
    if not low:
        return None
    if rng is not None:
        return rng.choice(sorted(low))
    return min(low, key=lambda v: (h.degree(v), v))


def w_set(h: GraphLike, v: int) -> tuple[int, ...]:
    """{v} together with N(v) and every u with b(H - {u, v}) > b(H - u)."""
    ws = {v, *h.adj[v]}
    for u in h.vertices:
        if u not in ws and count_bipartite(h, (u, v)) > count_bipartite(h, (u,)):
            ws.add(u)
    return tuple(sorted(ws))


def _eliminate(comp: SubgraphView, opts: DecideOptions, rng: random.Random | None) -> tuple[list[_Step], list[SubgraphView]]:
    steps: list[_Step] = []
    h: SubgraphView = comp
    while True:
        v = _pick_vertex(h, rng)
        if v is None:
            break
        d = h.degree(v)
        nxt = h.delete_vertices((v,))
        if d <= 1:
            steps.append(_Step(h, TraceStep(v, d, 1)))
        elif count_bipartite(nxt) == count_bipartite(h) + 1:
            steps.append(_Step(h, TraceStep(v, d, 2)))
        else:
            ws = w_set(h, v)
            w = shortest_even_walk_exact_vertices(h, ws, cap=opts.budget.walk, nondegenerate_at=v)
            steps.append(_Step(h, TraceStep(v, d, 3, ws, w), w))
            if w is None:
                raise _Stop(
                    Failure(
                        FailureKind.NO_EVEN_WALK_FOR_W,
                        {"vertex": h.label(v), "W": [h.label(u) for u in ws]},
                    )
                )
        h = nxt
    residue = nontrivial_components(h)
    return steps, residue


def _band_walks(residue: list[SubgraphView]) -> list[EvenClosedWalk]:
    walks: list[EvenClosedWalk] = []
    for part in residue:
        lab = recognize_band(part)
        if lab is None:
            raise _Stop(
                Failure(
                    FailureKind.RESIDUE_NOT_BAND,
                    {"component": [part.label(v) for v in part.sorted_vertices()]},
                )
            )
        walks.extend(band_generators(part, lab))
    return walks


def _cert_failure(cert: Certificate, rows: list[int], where: GraphLike) -> Failure:
    detail: dict = {"reason": "MixedWitness" if not cert.dominating else "DeltaNotOne", **cert.to_json()}
    if cert.witness is not None:
        detail["mixed_witness"] = {
            "rows": [rows[i] for i in cert.witness.rows],
            "cols": list(cert.witness.cols),
        }
    detail["subgraph"] = [where.label(v) for v in where.sorted_vertices()]
    return Failure(FailureKind.CERTIFICATE_FAILED, detail)


def _decide_component(
    comp: SubgraphView, opts: DecideOptions, rng: random.Random | None, offset: int
) -> tuple[list[EvenClosedWalk], list[TraceStep], Failure | None]:
    """Walks in discovery order (elimination walks, then band walks)."""
    steps: list[_Step] = []
    try:
        steps, residue = _eliminate(comp, opts, rng)
        band = _band_walks(residue)
    except _Stop as stop:
        walks = [s.walk for s in steps if s.walk is not None]
        return walks, [s.trace for s in steps], stop.failure
    elim = [s for s in steps if s.walk is not None]
    walks = [s.walk for s in elim] + band  # type: ignore[misc]
    trace = [s.trace for s in steps]
    if not opts.retry_walks:
        return walks, trace, None
    # Re-check bottom-up; when a step fails, try its other shortest walks.
    chosen: list[EvenClosedWalk] = list(band)
    for idx in range(len(elim) - 1, -1, -1):
        step = elim[idx]
        first_fail: Certificate | None = None
        picked = None
        cands: Iterator[EvenClosedWalk] = iter_shortest_even_walks(
            step.graph,
            step.trace.ws,
            cap=opts.budget.walk,
            nondegenerate_at=step.trace.vertex,
            limit=opts.budget.retry_walks,
        )
        for cand in _prepend(step.walk, cands):
            gens = [binomial_of_walk(w) for w in [cand] + chosen]
            cert = verify_fs(step.graph, gens, opts.budget.dominating)
            if cert.ok:
                picked = cand
                break
            if first_fail is None:
                first_fail = cert
        if picked is None:
            assert first_fail is not None
            walks = [s.walk for s in elim[: idx + 1]] + chosen  # type: ignore[misc]
            rows = [offset + idx] + [offset + j for j in range(idx + 1, len(walks))]
            return walks, trace, _cert_failure(first_fail, rows, step.graph)
        chosen.insert(0, picked)
        step.trace = TraceStep(step.trace.vertex, step.trace.degree, 3, step.trace.ws, picked)
    trace = [s.trace for s in steps]
    return chosen, trace, None


def _prepend(first: EvenClosedWalk | None, rest: Iterator[EvenClosedWalk]) -> Iterator[EvenClosedWalk]:
    seen = set()
    if first is not None:
        seen.add(first.canonical().vertices)
        yield first
    for w in rest:
        if w.vertices not in seen:
            seen.add(w.vertices)
            yield w


def decide(g: GraphLike, opts: DecideOptions | None = None) -> CIReport:
    """Run the elimination on every component and certify the result."""
    opts = opts or DecideOptions()
    rng = random.Random(opts.order_seed) if opts.order_seed is not None else None
    comps = nontrivial_components(g)
    report = CIReport(graph=g, verdict=Verdict.CI, height=height(g))
    report.bounds = [edge_bounds(c) for c in comps]
    walks: list[EvenClosedWalk] = []
    for comp in comps:
        if opts.prefilter:
            f = prefilter(comp)
            if f is not None:
                report.verdict, report.failure = Verdict.NOT_CI, f
                return report
        ws, trace, failure = _decide_component(comp, opts, rng, len(walks))
        walks.extend(ws)
        report.trace.extend(trace)
        if failure is not None:
            report.generators = [Generator(w, binomial_of_walk(w)) for w in walks]
            report.verdict, report.failure = Verdict.NOT_CI, failure
            return report
    report.generators = [Generator(w, binomial_of_walk(w)) for w in walks]
    gens = [x.binomial for x in report.generators]
    if any(b.is_zero for b in gens):
        raise AssertionError("elimination produced a zero binomial")
    cert = verify_fs(g, gens, opts.budget.dominating)
    report.certificate = cert
    if not cert.ok:
        report.verdict = Verdict.NOT_CI
        report.failure = _cert_failure(cert, list(range(len(gens))), g)
    return report


def is_ci(g: GraphLike, opts: DecideOptions | None = None) -> bool:
    return decide(g, opts).is_ci


# ---------------------------------------------------------------------------
# Diagnostics


@dataclass(frozen=True)
class Degree2Violation:
    h1: frozenset[int]
    h2: frozenset[int]
    meet: frozenset[int]


def degree2_diagnostics(g: GraphLike, v: int, max_size: int = 10, max_pairs: int = 200_000) -> Degree2Violation | None:
    """Look for induced H1, H2 through v with deg 2 at v and b(Hi - v) = b(Hi)
    whose intersection H violates b(H - v) = b(H); any hit rules out CI."""
    if g.degree(v) != 2:
        raise ValueError(f"vertex {g.label(v)} has degree {g.degree(v)}, need 2")
    base = {v, *g.adj[v]}
    others = sorted(g.vertices - base)
    good: list[frozenset[int]] = []
    for k in range(0, max(0, min(len(others), max_size - len(base))) + 1):
        for extra in combinations(others, k):
            s = frozenset(base | set(extra))
            h = g.induced(s)
            if count_bipartite(h, (v,)) == count_bipartite(h):
                good.append(s)
    pairs = 0
    for h1, h2 in combinations(good, 2):
        pairs += 1
        if pairs > max_pairs:
            raise ResourceLimitError("degree-2 diagnostic pairs", pairs, max_pairs)
        meet = h1 & h2
        h = g.induced(meet)
        if count_bipartite(h, (v,)) != count_bipartite(h):
            return Degree2Violation(h1, h2, meet)
    return None


__all__ = [
    "CIReport",
    "DecideOptions",
    "EdgeBounds",
    "Failure",
    "FailureKind",
    "Generator",
    "Graph",
    "MixedWitness",
    "TraceStep",
    "Verdict",
    "decide",
    "degree2_diagnostics",
    "edge_bounds",
    "find_k23",
    "is_ci",
    "prefilter",
    "w_set",
]
