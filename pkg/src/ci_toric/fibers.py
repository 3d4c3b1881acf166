"""Brute-force ground truth for minimal generation of P_G via fibers.

A fiber is the set of monomials x^u with a fixed vertex-degree vector A_G u.
Within a fiber of total degree d, two monomials sharing a variable are
linked by moves of lower degree. The number of minimal generators living in
that fiber is (number of such components) - 1, and two members of different
components have disjoint supports, so their difference is a coprime
binomial of P_G. Summing over fibers of degree <= D gives a lower bound for
mu(P_G), exact once D reaches the largest minimal-generator degree.

Each degree is processed in one vectorized pass: enumerate all monomials,
group them by degree vector, and count components of a bipartite
"monomial - (fiber, variable)" graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement
from math import comb
from typing import Sequence

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from .errors import PreconditionError, ResourceLimitError
from .graph import GraphLike, height
from .walks import Binomial, membership_check

DEFAULT_MONOMIAL_CAP = 3_000_000


@dataclass(frozen=True)
class Fiber:
    degree_vector: tuple[int, ...]  # indexed by sorted vertex ids
    members: tuple[tuple[int, ...], ...]  # exponent vectors over g.edge_ids


def _incidence(g: GraphLike) -> np.ndarray:
    vs = g.sorted_vertices()
    row = {v: i for i, v in enumerate(vs)}
    a = np.zeros((len(vs), g.num_edges), dtype=np.int64)
    for j, e in enumerate(g.edge_ids):
        u, v = g.endpoints(e)
        a[row[u], j] = 1
        a[row[v], j] = 1
    return a


def _monomials(n: int, d: int, cap: int) -> np.ndarray:
    count = comb(n + d - 1, d)
    if count > cap:
        raise ResourceLimitError(f"monomials of degree {d} in {n} variables", count, cap)
    idx = np.fromiter(
        (i for c in combinations_with_replacement(range(n), d) for i in c),
        dtype=np.int64,
        count=count * d,
    ).reshape(count, d)
    u = np.zeros((count, n), dtype=np.int64)
    rows = np.repeat(np.arange(count), d)
    np.add.at(u, (rows, idx.ravel()), 1)
    return u


def _group(keys: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Sort order, group id per sorted position, group sizes."""
    order = np.argsort(keys, kind="stable")
    sk = keys[order]
    starts = np.flatnonzero(np.r_[True, sk[1:] != sk[:-1]])
    gid = np.cumsum(np.r_[True, sk[1:] != sk[:-1]]) - 1
    sizes = np.diff(np.r_[starts, len(sk)])
    return order, gid, sizes


def _encode(rows: np.ndarray, base: int) -> np.ndarray:
    # Mixed-radix key; callers keep base ** width inside int64.
    w = np.ones(rows.shape[1], dtype=np.int64)
    for j in range(1, rows.shape[1]):
        w[j] = w[j - 1] * base
    return rows @ w


def _check_size(g: GraphLike, max_degree: int) -> None:
    if g.num_edges == 0:
        return
    if (max_degree + 1) ** max(g.num_vertices, g.num_edges) >= 2**62:
        raise ResourceLimitError("fiber key width", max_degree, 0)


def enumerate_fibers(g: GraphLike, max_degree: int, cap: int = DEFAULT_MONOMIAL_CAP) -> list[Fiber]:
    """All fibers of total degree 1..max_degree, in degree then key order."""
    _check_size(g, max_degree)
    a = _incidence(g)
    out: list[Fiber] = []
    for d in range(1, max_degree + 1):
        if g.num_edges == 0:
            break
        u = _monomials(g.num_edges, d, cap)
        b = u @ a.T
        order, gid, sizes = _group(_encode(b, d + 1))
        start = 0
        for s in sizes:
            members = u[order[start : start + s]]
            out.append(Fiber(tuple(int(x) for x in b[order[start]]), tuple(tuple(map(int, r)) for r in members)))
            start += s
    return out


@dataclass(frozen=True)
class MuResult:
    mu: int
    generators: tuple[Binomial, ...]
    max_degree: int  # degree actually reached
    stopped_early: bool  # stopped because mu exceeded `stop_above`


def mu_up_to(
    g: GraphLike,
    max_degree: int,
    stop_above: int | None = None,
    cap: int = DEFAULT_MONOMIAL_CAP,
) -> MuResult:
    """Minimal generators of P_G of degree <= max_degree (count and a choice)."""
    _check_size(g, max_degree)
    n = g.num_edges
    edges = list(g.edge_ids)
    a = _incidence(g)
    gens: list[Binomial] = []
    reached = 0
    for d in range(2, max_degree + 1):
        if n == 0:
            break
        reached = d
        u = _monomials(n, d, cap)
        b = u @ a.T
        order, gid, sizes = _group(_encode(b, d + 1))
        big = sizes[gid] >= 2
        if not big.any():
            continue
        pos = order[big]  # monomial rows in fibers with >= 2 members
        fib = gid[big]
        sub = u[pos]
        k = len(pos)
        # Node ids: members 0..k-1, then one node per (fiber, variable).
        r, c = np.nonzero(sub)
        var_node = k + fib[r] * n + c
        uniq, inv = np.unique(var_node, return_inverse=True)
        total = k + len(uniq)
        graph = coo_matrix((np.ones(len(r), dtype=np.int8), (r, k + inv)), shape=(total, total))
        _, labels = connected_components(graph, directed=False)
        mlab = labels[:k]
        # Distinct member labels per fiber.
        pair = np.unique(np.stack([fib, mlab], axis=1), axis=0)
        fibers, counts = np.unique(pair[:, 0], return_counts=True)
        for f, cnt in zip(fibers, counts):
            if cnt < 2:
                continue
            sel = np.flatnonzero(fib == f)
            reps: dict[int, int] = {}
            for i in sel:
                reps.setdefault(int(mlab[i]), int(i))
            rep_rows = [sub[i] for i in reps.values()]
            base = rep_rows[0]
            for other in rep_rows[1:]:
                gens.append(
                    Binomial.from_exponents(
                        {edges[j]: int(x) for j, x in enumerate(base) if x},
                        {edges[j]: int(x) for j, x in enumerate(other) if x},
                    )
                )
            if stop_above is not None and len(gens) > stop_above:
                return MuResult(len(gens), tuple(gens), d, True)
    return MuResult(len(gens), tuple(gens), reached, False)


@dataclass(frozen=True)
class OracleVerdict:
    is_ci: bool
    mu: int  # lower bound on mu when stopped early
    height: int
    max_degree: int


def oracle_verdict(g: GraphLike, max_degree: int | None = None) -> OracleVerdict:
    """CI iff the minimal generator count up to the bound equals the height.

    Default bound: the number of edges.
    """
    h = height(g)
    d = g.num_edges if max_degree is None else max_degree
    res = mu_up_to(g, d, stop_above=h)
    return OracleVerdict(res.mu == h, res.mu, h, d)


@dataclass(frozen=True)
class DisconnectedFiber:
    degree_vector: tuple[int, ...]
    a: tuple[int, ...]
    b: tuple[int, ...]


def generates_up_to(
    g: GraphLike,
    gens: Sequence[Binomial],
    max_degree: int,
    cap: int = DEFAULT_MONOMIAL_CAP,
) -> tuple[bool, DisconnectedFiber | None]:
    """True iff every fiber of degree <= max_degree is connected by the moves."""
    for i, x in enumerate(gens):
        if not membership_check(x, g):
            raise PreconditionError(f"generator {i} is not in the toric ideal")
    _check_size(g, max_degree)
    n = g.num_edges
    col = {e: j for j, e in enumerate(g.edge_ids)}
    a = _incidence(g)
    moves = []
    for x in gens:
        al = np.zeros(n, dtype=np.int64)
        be = np.zeros(n, dtype=np.int64)
        for e, k in x.plus:
            al[col[e]] = k
        for e, k in x.minus:
            be[col[e]] = k
        moves.append((al, be))
    for d in range(2, max_degree + 1):
        if n == 0:
            break
        u = _monomials(n, d, cap)
        keys = _encode(u, d + 1)
        korder = np.argsort(keys)
        skeys = keys[korder]
        src, dst = [], []
        for al, be in moves:
            if al.sum() > d:
                continue
            ok = np.all(u >= al, axis=1)
            if not ok.any():
                continue
            rows = np.flatnonzero(ok)
            tgt = _encode(u[rows] - al + be, d + 1)
            j = korder[np.searchsorted(skeys, tgt)]
            src.append(rows)
            dst.append(j)
        count = len(u)
        if src:
            s = np.concatenate(src)
            t = np.concatenate(dst)
            graph = coo_matrix((np.ones(len(s), dtype=np.int8), (s, t)), shape=(count, count))
            _, labels = connected_components(graph, directed=False)
        else:
            labels = np.arange(count)
        b = u @ a.T
        order, gid, sizes = _group(_encode(b, d + 1))
        lab_sorted = labels[order]
        for s_, sz in zip(np.r_[0, np.cumsum(sizes)[:-1]], sizes):
            if sz >= 2:
                block = lab_sorted[s_ : s_ + sz]
                if np.any(block != block[0]):
                    i0 = order[s_]
                    i1 = order[s_ + int(np.flatnonzero(block != block[0])[0])]
                    return False, DisconnectedFiber(
                        tuple(int(x) for x in b[i0]), tuple(map(int, u[i0])), tuple(map(int, u[i1]))
                    )
    return True, None
