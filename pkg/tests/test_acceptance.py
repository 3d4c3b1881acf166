"""Acceptance criteria 1-8. Each test records one PASS/FAIL line, printed in
the terminal summary, then asserts.

Run directly with ``python tests/test_acceptance.py`` for the same output.
"""

from __future__ import annotations

import random
import time
from itertools import combinations

import networkx as nx
import pytest
from networkx.generators.atlas import graph_atlas_g
from oracles import (
    band_kind_bruteforce,
    cubic_graphs,
    double_wheel_ok,
    from_nx,
    has_mixed_square,
    minor_gcd,
    opb_ok,
    wheel_ok,
)

import acceptance_log
from ci_toric import (
    Binomial,
    Graph,
    bipartite_components,
    contract_deg2,
    decide,
    delete_vertices,
    determinantal_divisor,
    is_dominating,
    oracle_verdict,
    recognize_band,
)
from ci_toric.decider import FailureKind
from ci_toric.families import (
    RANDOM_FAMILIES,
    complete,
    complete_bipartite,
    contraejemplo,
    fig5,
    moebius_band,
    odd_band,
    three_triangles,
)
from ci_toric.structure import classify_ultimo, is_normal_edge_algebra


def record(num: int, title: str, ok: bool, detail: str = "") -> None:
    line = f"criterion {num} {'PASS' if ok else 'FAIL'}: {title}"
    if detail:
        line += f" ({detail})"
    acceptance_log.LINES.append(line)
    print(line)


# ---------------------------------------------------------------------------
# 1


def test_criterion_1_fig5_end_to_end():
    t0 = time.perf_counter()
    g = fig5()
    rep = decide(g)
    elapsed = time.perf_counter() - t0
    gens = {x.binomial.canonical_sign() for x in rep.generators}
    expected = {
        Binomial.from_exponents({3: 1, 7: 1}, {6: 1, 8: 1}).canonical_sign(),
        Binomial.from_exponents({0: 1, 3: 2, 5: 1}, {1: 1, 2: 1, 4: 1, 6: 1}).canonical_sign(),
    }
    rows = {tuple(r) for r in rep.certificate.matrix} if rep.certificate else set()
    want_rows = {(0, 0, 0, 1, 0, 0, -1, 1, -1), (1, -1, -1, 2, -1, 1, -1, 0, 0)}
    canon_rows = {r if next(x for x in r if x) > 0 else tuple(-x for x in r) for r in rows}
    cert = rep.certificate
    checks = {
        "verdict": not rep.is_ci,
        "generators": gens == expected,
        "rows": canon_rows == want_rows,
        "delta": cert is not None and cert.delta_r == 1,
        "witness": cert is not None and cert.witness is not None and set(cert.witness.cols) == {3, 6},
        "failure": rep.failure is not None and rep.failure.kind is FailureKind.CERTIFICATE_FAILED,
        "time": elapsed < 1.0,
    }
    bad = [k for k, v in checks.items() if not v]
    record(1, "fig5 end-to-end", not bad, f"{elapsed:.3f}s" + (f", failed: {bad}" if bad else ""))
    assert not bad


# ---------------------------------------------------------------------------
# 2


def test_criterion_2_bands():
    cases = [("K4", complete(4), 2), ("prism", odd_band(3), 3), ("Moebius r=4", moebius_band(4), 4)]
    bad = []
    for name, g, count in cases:
        t0 = time.perf_counter()
        rep = decide(g)
        elapsed = time.perf_counter() - t0
        quad = all(x.binomial.degree == 2 for x in rep.generators)
        if not (rep.is_ci and len(rep.generators) == count and quad and elapsed < 1.0):
            bad.append(name)
    mb = decide(moebius_band(4))
    bd = mb.bounds[0]
    if not (bd.lhs == 24 and bd.refined_rhs == 24 and mb.generated_by_quadrics):
        bad.append("Moebius quadrics flag")
    record(2, "band graphs", not bad, f"failed: {bad}" if bad else "K4, prism, Moebius r=4")
    assert not bad


# ---------------------------------------------------------------------------
# 3


def test_criterion_3_forbidden_structures():
    bad = []
    t0 = time.perf_counter()
    k23 = decide(complete_bipartite(2, 3))
    f = k23.failure
    if k23.is_ci or f is None or f.kind is not FailureKind.BOUND_VIOLATED or f.detail["bound"]["lhs"] != 16 or f.detail["bound"]["rhs"] != 15:
        bad.append("K(2,3)")
    tt = three_triangles()
    if decide(tt).is_ci or is_normal_edge_algebra(tt)[0]:
        bad.append("three triangles")
    ce = contraejemplo()
    rep = decide(ce)
    if rep.is_ci or rep.failure is None or "k23" not in rep.failure.detail:
        bad.append("contraejemplo")
    elapsed = time.perf_counter() - t0
    if elapsed >= 3.0:
        bad.append("time")
    record(3, "forbidden structures", not bad, f"failed: {bad}" if bad else f"{elapsed:.3f}s total")
    assert not bad


# ---------------------------------------------------------------------------
# 4 and 5 share one corpus


def _random_connected(rng: random.Random, count: int) -> list[Graph]:
    out = []
    while len(out) < count:
        m = rng.randint(6, 10)
        h = nx.gnm_random_graph(7, m, seed=rng.randrange(2**31))
        if nx.is_connected(h):
            out.append(from_nx(h))
    return out


@pytest.fixture(scope="module")
def corpus():
    atlas = [from_nx(h) for h in graph_atlas_g()[1:] if h.number_of_nodes() <= 6 and nx.is_connected(h)]
    return atlas + _random_connected(random.Random(20261015), 500)


@pytest.fixture(scope="module")
def verdicts(corpus):
    return [decide(g).is_ci for g in corpus]


def _oracle_escalating(g: Graph, claim: bool) -> bool:
    """Oracle verdict; a disagreement is rechecked with twice the bound."""
    d = max(g.num_edges, 2)
    v = oracle_verdict(g, d).is_ci
    if v != claim:
        v = oracle_verdict(g, 2 * d).is_ci
    return v


def test_criterion_4_oracle_equivalence(corpus, verdicts):
    t0 = time.perf_counter()
    bad = [i for i, (g, v) in enumerate(zip(corpus, verdicts)) if _oracle_escalating(g, v) != v]
    elapsed = time.perf_counter() - t0
    ci = sum(verdicts)
    ok = not bad and elapsed <= 600
    record(
        4,
        "decide agrees with the fiber oracle",
        ok,
        f"{len(corpus)} graphs, {ci} CI, {len(bad)} disagreements, {elapsed:.1f}s",
    )
    assert ok, [corpus[i].edges for i in bad[:5]]


def test_criterion_5_hereditarity(corpus, verdicts):
    violations = []
    checked = 0
    for g, v in zip(corpus, verdicts):
        if not v:
            continue
        for x in g.vertices:
            checked += 1
            if not decide(delete_vertices(g, {x})).is_ci:
                violations.append(("delete", g.edges, x))
            if g.degree(x) == 2 and not g.has_edge(*g.neighbors(x)):
                checked += 1
                if not decide(contract_deg2(g, x)).is_ci:
                    violations.append(("contract", g.edges, x))
    record(5, "hereditarity", not violations, f"{checked} checks, {len(violations)} violations")
    assert not violations, violations[:5]


# ---------------------------------------------------------------------------
# 6


def _with_edge(g: Graph, u: str, v: str) -> Graph:
    es = [(g.labels[a], g.labels[b]) for a, b in g.edges] + [(u, v)]
    return Graph.from_labeled_edges(es, list(g.labels))


def _ring_chord(rng: random.Random, g: Graph):
    col = bipartite_components(g).colorings[0]
    pairs = [
        (u, v) for u, v in combinations(g.sorted_vertices(), 2) if col[u] == col[v] and not g.has_edge(u, v)
    ]
    u, v = rng.choice(pairs)
    return g.labels[u], g.labels[v]


def _break_attachment(rng: random.Random, g: Graph, gadget: set[str], keep: set[str]):
    """An edge from a gadget vertex to a ring vertex outside the attachment."""
    inside = sorted(x for x in gadget if x in g.labels)
    outside = sorted(x for x in g.labels if x not in gadget and x not in keep)
    return rng.choice(inside), rng.choice(outside)


def _cycle_labels(r1: int, r2: int) -> set[str]:
    return {f"a{i}" for i in range(1, r1 + 1)} | {f"b{i}" for i in range(1, r2 + 1)}


def mutate(rng: random.Random, key: str, inst) -> tuple[Graph, str]:
    g, p = inst.graph, inst.params
    if key == "a":
        u, v = _ring_chord(rng, g)
        return _with_edge(g, u, v), "same-colour chord"
    if key == "b.1":
        r, sp = p["r"], set(p["spokes"])
        bad = [t for t in range(1, r + 1) if t not in sp and not wheel_ok(r, sp | {t})]
        if bad:
            t = rng.choice(bad)
            return _with_edge(g, p["x"], f"z{t}"), f"spoke z{t}"
        u, v = _break_attachment(rng, g, {f"z{i}" for i in range(1, r + 1)}, {p["x"]})
        return _with_edge(g, u, v), "second attachment"
    if key in ("b.2", "c.2"):
        r1, r2, cross = p["r1"], p["r2"], {tuple(c) for c in p["cross"]}
        bad = [
            (j, k)
            for j in range(1, r1 + 1)
            for k in range(1, r2 + 1)
            if (j, k) not in cross and not opb_ok(r1, r2, cross | {(j, k)})
        ]
        if bad:
            j, k = rng.choice(bad)
            return _with_edge(g, f"a{j}", f"b{k}"), f"cross a{j} b{k}"
        keep = set(p["u"]) if key == "c.2" else {p["u"]}
        u, v = _break_attachment(rng, g, _cycle_labels(r1, r2), keep)
        return _with_edge(g, u, v), "second attachment"
    if key == "b.3":
        r, s, ks = p["r"], p["s"], set(p["i"])
        bad = [t for t in range(1, s + 1) if t not in ks and not opb_ok(r, s, {(1, k) for k in ks | {t}})]
        if bad:
            t = rng.choice(bad)
            return _with_edge(g, "a1", f"b{t}"), f"target b{t}"
        u, v = _break_attachment(rng, g, _cycle_labels(r, s), {p["c"]})
        return _with_edge(g, u, v), "second attachment"
    if key == "c.1":
        r, j, k = p["r"], set(p["j"]), set(p["k"])
        b1, b2 = p["b"]
        opts = [(b1, t, j | {t}, k) for t in range(1, r + 1) if t not in j]
        opts += [(b2, t, j, k | {t}) for t in range(1, r + 1) if t not in k]
        bad = [(b, t) for b, t, jj, kk in opts if not double_wheel_ok(r, jj, kk)]
        if bad:
            b, t = rng.choice(bad)
            return _with_edge(g, b, f"a{t}"), f"spoke {b} a{t}"
        u, v = _break_attachment(rng, g, {f"a{i}" for i in range(1, r + 1)}, {b1, b2})
        return _with_edge(g, u, v), "second attachment"
    raise KeyError(key)


PER_FAMILY = 50


def test_criterion_6_family_round_trip():
    t0 = time.perf_counter()
    rng = random.Random(6)
    problems = []
    flips = 0
    mutant_ci = 0
    for key, make in RANDOM_FAMILIES.items():
        for _ in range(PER_FAMILY):
            inst = make(rng)
            if not decide(inst.graph).is_ci:
                problems.append((key, "decide", inst.params))
            tag = classify_ultimo(inst.graph).tag.value
            if tag != inst.tag:
                problems.append((key, f"classify gave {tag}", inst.params))
            mg, how = mutate(rng, key, inst)
            mtag = classify_ultimo(mg).tag.value
            mci = decide(mg).is_ci
            mutant_ci += mci
            if mtag == inst.tag:
                problems.append((key, f"mutation {how} kept the tag", inst.params))
            else:
                flips += 1
            if mtag != "Unclassified" and not mci:
                problems.append((key, f"mutant tagged {mtag} but not CI", inst.params))
    elapsed = time.perf_counter() - t0
    ok = not problems and elapsed <= 300
    total = PER_FAMILY * len(RANDOM_FAMILIES)
    record(
        6,
        "family round trip",
        ok,
        f"{total} instances, {flips} tag flips, {mutant_ci} mutants still CI, {len(problems)} problems, {elapsed:.1f}s",
    )
    assert ok, problems[:5]


# ---------------------------------------------------------------------------
# 7


def test_criterion_7_matrix_verifier():
    t0 = time.perf_counter()
    rng = random.Random(7)
    bad = []
    for trial in range(1000):
        r, n = rng.randint(1, 4), rng.randint(1, 5)
        lo = rng.choice([-1, -2, -3])
        b = [[rng.randint(lo, 3) for _ in range(n)] for _ in range(r)]
        for t in range(1, min(r, n) + 1):
            if determinantal_divisor(b, t) != minor_gcd(b, t):
                bad.append((trial, "delta", t, b))
        dom, wit = is_dominating(b)
        if dom == has_mixed_square(b):
            bad.append((trial, "dominating", b))
        if wit is not None and not all(
            any(b[i][j] > 0 for j in wit.cols) and any(b[i][j] < 0 for j in wit.cols) for i in wit.rows
        ):
            bad.append((trial, "witness", b))
    elapsed = time.perf_counter() - t0
    ok = not bad and elapsed <= 120
    record(7, "matrix verifier self-consistency", ok, f"1000 matrices, {len(bad)} disagreements, {elapsed:.1f}s")
    assert ok, bad[:5]


# ---------------------------------------------------------------------------
# 8


def test_criterion_8_band_recognizer():
    bad = []
    total = 0
    bands = 0
    for m in (4, 6, 8, 10):
        for h in cubic_graphs(m):
            total += 1
            g = from_nx(h)
            lab = recognize_band(g)
            got = lab.kind.value if lab else None
            want = band_kind_bruteforce(g)
            bands += want is not None
            if got != want:
                bad.append((m, sorted(h.edges())))
            elif lab is not None and lab.edge_set() != {frozenset(g.endpoints(e)) for e in g.edge_ids}:
                bad.append((m, "labeling", sorted(h.edges())))
    record(8, "band recognizer exactness", not bad, f"{total} cubic graphs, {bands} bands, {len(bad)} disagreements")
    assert not bad, bad[:5]


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-q", "-s"]))
