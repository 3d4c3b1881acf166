"""Exact integer checks behind the complete-intersection criterion.

A set of r coprime binomials of the right count generates the toric ideal
exactly when the matrix B of their exponent rows is dominating (no square
submatrix in which every row has a positive and a negative entry) and the
gcd of its r x r minors is 1. Everything here uses Python integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import gcd
from typing import Iterator, Sequence

from .errors import GeneratorCountMismatch, PreconditionError, ResourceLimitError
from .graph import GraphLike, height
from .walks import Binomial, membership_check

Matrix = list[list[int]]


def _check_matrix(b: Sequence[Sequence[int]]) -> Matrix:
    rows = [list(map(int, r)) for r in b]
    if rows and any(len(r) != len(rows[0]) for r in rows):
        raise PreconditionError("ragged matrix")
    return rows


def integer_rank(b: Sequence[Sequence[int]]) -> int:
    """Rank by fraction-free (Bareiss) elimination."""
    a = _check_matrix(b)
    if not a:
        return 0
    rows, cols = len(a), len(a[0])
    rank, prev = 0, 1
    for c in range(cols):
        piv = next((i for i in range(rank, rows) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        p = a[rank][c]
        for i in range(rank + 1, rows):
            f = a[i][c]
            a[i] = [(p * a[i][j] - f * a[rank][j]) // prev for j in range(cols)]
        prev = p
        rank += 1
        if rank == rows:
            break
    return rank


def smith_invariants(b: Sequence[Sequence[int]]) -> list[int]:
    """Nonzero invariant factors d_1 | d_2 | ... of the Smith normal form."""
    a = _check_matrix(b)
    if not a or not a[0]:
        return []
    rows, cols = len(a), len(a[0])
    out: list[int] = []
    for t in range(min(rows, cols)):
        # Smallest nonzero entry of the trailing block becomes the pivot.
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                if a[i][j] and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        i, j = best
        a[t], a[i] = a[i], a[t]
        for r in a:
            r[t], r[j] = r[j], r[t]
        while True:
            p = a[t][t]
            moved = False
            for i in range(t + 1, rows):
                q = a[i][t] // p
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                if a[i][t]:
                    moved = True
            for j in range(t + 1, cols):
                q = a[t][j] // p
                if q:
                    for r in a:
                        r[j] -= q * r[t]
                if a[t][j]:
                    moved = True
            if moved:
                # A remainder smaller than the pivot survived; pivot on it.
                cands = [(abs(a[i][t]), i, t) for i in range(t + 1, rows) if a[i][t]]
                cands += [(abs(a[t][j]), t, j) for j in range(t + 1, cols) if a[t][j]]
                _, i, j = min(cands)
                if j == t:
                    a[t], a[i] = a[i], a[t]
                else:
                    for r in a:
                        r[t], r[j] = r[j], r[t]
                continue
            bad = next(
                ((i, j) for i in range(t + 1, rows) for j in range(t + 1, cols) if a[i][j] % p),
                None,
            )
            if bad is None:
                break
            # Fold the offending row into the pivot row to force divisibility.
            a[t] = [x + y for x, y in zip(a[t], a[bad[0]])]
        out.append(abs(a[t][t]))
    return out


def determinantal_divisor(b: Sequence[Sequence[int]], t: int) -> int:
    """gcd of all t x t minors, via invariant factors. Returns 0 when t > rank."""
    a = _check_matrix(b)
    if t < 0 or (a and t > min(len(a), len(a[0]))):
        raise PreconditionError(f"t={t} outside 0..min(r, n)")
    if t == 0:
        return 1
    inv = smith_invariants(a)
    if t > len(inv):
        return 0
    prod = 1
    for d in inv[:t]:
        prod *= d
    return prod


@dataclass(frozen=True)
class MixedWitness:
    rows: tuple[int, ...]
    cols: tuple[int, ...]


def _is_mixed(b: Matrix, rows: Sequence[int], cols: Sequence[int]) -> bool:
    return all(any(b[i][j] > 0 for j in cols) and any(b[i][j] < 0 for j in cols) for i in rows)


def _min_cover(need: int, cols: list[tuple[int, int]], limit: int) -> list[int] | None:
    """Pick at most `limit` of the (mask, col) entries whose masks cover `need`."""
    best: list[int] | None = None

    def rec(left: int, chosen: list[int]) -> None:
        nonlocal best
        if not left:
            if best is None or len(chosen) < len(best):
                best = list(chosen)
            return
        cap = (len(best) - 1) if best is not None else limit
        if len(chosen) >= cap:
            return
        bit = left & -left
        for mask, col in cols:
            if mask & bit:
                chosen.append(col)
                rec(left & ~mask, chosen)
                chosen.pop()

    rec(need, [])
    return best


def _connected_subsets(adj: dict[int, set[int]], max_size: int) -> Iterator[frozenset[int]]:
    """Connected vertex subsets of size >= 2, by increasing size, each once."""
    level = {frozenset((v,)) for v in adj}
    for _ in range(2, max_size + 1):
        nxt: set[frozenset[int]] = set()
        for s in level:
            frontier = set().union(*(adj[v] for v in s)) - s
            for v in frontier:
                nxt.add(s | {v})
        for s in sorted(nxt, key=sorted):
            yield s
        level = nxt
        if not level:
            return


def is_dominating(b: Sequence[Sequence[int]], cap: int = 24) -> tuple[bool, MixedWitness | None]:
    """True iff no k x k submatrix (k >= 2) has every row mixed in sign.

    Columns with at most one nonzero entry are dropped first; they never
    change the answer. A smallest witness has a connected row set (rows
    linked through shared columns), so only connected row sets are tried,
    each with an exact bounded set cover over the column sign patterns.
    """
    a = _check_matrix(b)
    if not a:
        return True, None
    r, n = len(a), len(a[0])
    if r > cap:
        raise ResourceLimitError("dominating test rows", r, cap)
    cols = [j for j in range(n) if sum(1 for i in range(r) if a[i][j]) >= 2]
    cand = [i for i in range(r) if any(a[i][j] > 0 for j in cols) and any(a[i][j] < 0 for j in cols)]
    if len(cand) < 2:
        return True, None
    adj: dict[int, set[int]] = {i: set() for i in cand}
    for j in cols:
        nz = [i for i in cand if a[i][j]]
        for x in nz:
            adj[x].update(y for y in nz if y != x)
    # Requirement bits: 2*i for "row i positive", 2*i + 1 for "row i negative".
    colmask = {}
    for j in cols:
        m = 0
        for i in cand:
            if a[i][j] > 0:
                m |= 1 << (2 * i)
            elif a[i][j] < 0:
                m |= 1 << (2 * i + 1)
        colmask[j] = m
    for s in _connected_subsets(adj, min(len(cand), n)):
        k = len(s)
        need = 0
        for i in s:
            need |= 3 << (2 * i)
        patterns: dict[int, int] = {}
        for j in cols:
            m = colmask[j] & need
            if m and m not in patterns:
                patterns[m] = j
        options = sorted(patterns.items(), key=lambda mc: (-bin(mc[0]).count("1"), mc[1]))
        cover = _min_cover(need, options, k)
        if cover is None:
            continue
        rows = tuple(sorted(s))
        chosen = sorted(cover)
        pad = [j for j in range(n) if j not in chosen][: k - len(chosen)]
        wit = MixedWitness(rows, tuple(sorted(chosen + pad)))
        assert _is_mixed(a, wit.rows, wit.cols)
        return False, wit
    return True, None


@dataclass(frozen=True)
class Certificate:
    """Outcome of the criterion for a generator list on a graph.

    `columns` maps matrix column positions to edge ids; `witness.cols` holds
    edge ids, `witness.rows` generator positions.
    """

    ok: bool
    delta_r: int
    dominating: bool
    witness: MixedWitness | None
    columns: tuple[int, ...]
    matrix: tuple[tuple[int, ...], ...]

    def to_json(self) -> dict:
        out: dict = {"delta_r": str(self.delta_r), "dominating": self.dominating}
        if self.witness is not None:
            out["mixed_witness"] = {"rows": list(self.witness.rows), "cols": list(self.witness.cols)}
        return out


def exponent_matrix(gens: Sequence[Binomial], columns: Sequence[int]) -> Matrix:
    return [g.row(columns) for g in gens]


def verify_fs(g: GraphLike, gens: Sequence[Binomial], cap: int = 24) -> Certificate:
    """Check that `gens` minimally generate P_G."""
    h = height(g)
    if len(gens) != h:
        raise GeneratorCountMismatch(f"generator count mismatch: {len(gens)} given, height is {h}")
    edge_set = set(g.edge_ids)
    for i, x in enumerate(gens):
        if x.is_zero:
            raise PreconditionError(f"generator {i} is the zero binomial")
        if not x.support <= edge_set:
            raise PreconditionError(f"generator {i} uses an edge outside the graph")
        if not membership_check(x, g):
            raise PreconditionError(f"generator {i} is not in the toric ideal")
    columns = tuple(g.edge_ids)
    b = exponent_matrix(gens, columns)
    if not b:
        return Certificate(True, 1, True, None, columns, ())
    delta = determinantal_divisor(b, len(b))
    dom, wit = is_dominating(b, cap)
    if wit is not None:
        wit = MixedWitness(wit.rows, tuple(columns[j] for j in wit.cols))
    return Certificate(delta == 1 and dom, delta, dom, wit, columns, tuple(map(tuple, b)))


def minor_gcd_bruteforce(b: Sequence[Sequence[int]], t: int) -> int:
    """Reference: gcd over every t x t minor (small matrices only)."""
    a = _check_matrix(b)
    g = 0
    for rs in combinations(range(len(a)), t):
        for cs in combinations(range(len(a[0])), t):
            g = gcd(g, _det([[a[i][j] for j in cs] for i in rs]))
    return g


def _det(m: Matrix) -> int:
    n = len(m)
    if n == 0:
        return 1
    if n == 1:
        return m[0][0]
    return sum((-1) ** j * m[0][j] * _det([row[:j] + row[j + 1 :] for row in m[1:]]) for j in range(n) if m[0][j])


def mixed_bruteforce(b: Sequence[Sequence[int]]) -> MixedWitness | None:
    """Reference: try every square submatrix of size >= 2."""
    a = _check_matrix(b)
    if not a:
        return None
    r, n = len(a), len(a[0])
    for k in range(2, min(r, n) + 1):
        for rs in combinations(range(r), k):
            for cs in combinations(range(n), k):
                if _is_mixed(a, rs, cs):
                    return MixedWitness(rs, cs)
    return None
