"""Even closed walks and their binomials B_w."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from typing import Mapping, Sequence

from .errors import PreconditionError
from .graph import GraphLike


@dataclass(frozen=True)
class EvenClosedWalk:
    """Closed walk v_0, ..., v_{2q} = v_0 with the edge id of every step."""

    vertices: tuple[int, ...]
    edges: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.vertices) != len(self.edges) + 1:
            raise PreconditionError("walk: need one more vertex than edges")
        if self.vertices[0] != self.vertices[-1]:
            raise PreconditionError("walk is not closed")
        if len(self.edges) < 4 or len(self.edges) % 2:
            raise PreconditionError(f"walk length {len(self.edges)} is not even and >= 4")

    @classmethod
    def from_vertices(cls, g: GraphLike, seq: Sequence[int]) -> "EvenClosedWalk":
        seq = tuple(seq)
        if seq and seq[0] != seq[-1]:
            seq = seq + (seq[0],)
        try:
            edges = tuple(g.edge_id(a, b) for a, b in zip(seq, seq[1:]))
        except KeyError as exc:
            raise PreconditionError(f"walk uses a non-edge: {exc.args[0]}") from None
        return cls(seq, edges)

    @classmethod
    def from_labels(cls, g: GraphLike, labels: Sequence[object]) -> "EvenClosedWalk":
        return cls.from_vertices(g, [g.root.vertex(x) for x in labels])

    def __len__(self) -> int:
        return len(self.edges)

    @property
    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.vertices)

    @property
    def edge_multiset(self) -> Counter:
        return Counter(self.edges)

    def labels(self, g: GraphLike) -> list[str]:
        return [g.label(v) for v in self.vertices]

    def reversed(self) -> "EvenClosedWalk":
        return EvenClosedWalk(self.vertices[::-1], self.edges[::-1])

    def rotated(self, k: int) -> "EvenClosedWalk":
        body, es = self.vertices[:-1], self.edges
        k %= len(es)
        body = body[k:] + body[:k]
        return EvenClosedWalk(body + body[:1], es[k:] + es[:k])

    def canonical(self) -> "EvenClosedWalk":
        """Start at the smallest vertex; among such rotations and both
        orientations, take the lexicographically smallest vertex sequence."""
        start = min(self.vertices)
        best: EvenClosedWalk | None = None
        for w in (self, self.reversed()):
            for k, x in enumerate(w.vertices[:-1]):
                if x == start:
                    cand = w.rotated(k)
                    if best is None or cand.vertices < best.vertices:
                        best = cand
        assert best is not None
        return best


def _freeze(d: Mapping[int, int]) -> tuple[tuple[int, int], ...]:
    return tuple(sorted((int(k), int(v)) for k, v in d.items() if v))


@dataclass(frozen=True)
class Binomial:
    """x^plus - x^minus over edge ids, kept coprime.

    `raw_plus` / `raw_minus` hold the exponents before cancelling common
    factors when the binomial came from a walk.
    """

    plus: tuple[tuple[int, int], ...]
    minus: tuple[tuple[int, int], ...]
    raw_plus: tuple[tuple[int, int], ...] = field(default=(), compare=False)
    raw_minus: tuple[tuple[int, int], ...] = field(default=(), compare=False)

    @classmethod
    def from_exponents(cls, plus: Mapping[int, int], minus: Mapping[int, int]) -> "Binomial":
        """Cancel common factors and build the coprime binomial."""
        keys = set(plus) | set(minus)
        red_p = {k: plus.get(k, 0) - minus.get(k, 0) for k in keys}
        p = {k: v for k, v in red_p.items() if v > 0}
        m = {k: -v for k, v in red_p.items() if v < 0}
        return cls(_freeze(p), _freeze(m), _freeze(plus), _freeze(minus))

    @property
    def plus_dict(self) -> dict[int, int]:
        return dict(self.plus)

    @property
    def minus_dict(self) -> dict[int, int]:
        return dict(self.minus)

    @property
    def is_zero(self) -> bool:
        return not self.plus and not self.minus

    @property
    def degree(self) -> int:
        return sum(v for _, v in self.plus)

    @property
    def support(self) -> frozenset[int]:
        return frozenset(k for k, _ in self.plus) | frozenset(k for k, _ in self.minus)

    def negated(self) -> "Binomial":
        return Binomial(self.minus, self.plus, self.raw_minus, self.raw_plus)

    def canonical_sign(self) -> "Binomial":
        """Put the lexicographically larger monomial (x_0 > x_1 > ...) first."""
        if _lex_key(self.plus) >= _lex_key(self.minus):
            return self
        return self.negated()

    def row(self, columns: Sequence[int]) -> list[int]:
        p, m = self.plus_dict, self.minus_dict
        return [p.get(e, 0) - m.get(e, 0) for e in columns]

    def format(self, one_based: bool = True) -> str:
        def mono(side: tuple[tuple[int, int], ...]) -> str:
            if not side:
                return "1"
            parts = []
            for e, k in side:
                name = f"x{e + 1 if one_based else e}"
                parts.append(name if k == 1 else f"{name}^{k}")
            return "*".join(parts)

        return f"{mono(self.plus)} - {mono(self.minus)}"

    def to_json(self) -> dict:
        return {"plus": {str(e): k for e, k in self.plus}, "minus": {str(e): k for e, k in self.minus}}

    @classmethod
    def from_json(cls, data: Mapping) -> "Binomial":
        return cls.from_exponents(
            {int(k): int(v) for k, v in data["plus"].items()},
            {int(k): int(v) for k, v in data["minus"].items()},
        )


def _lex_key(side: tuple[tuple[int, int], ...]) -> tuple[int, ...]:
    # Dense exponent vector compared from the lowest edge id upward.
    if not side:
        return ()
    top = max(e for e, _ in side)
    dense = [0] * (top + 1)
    for e, k in side:
        dense[e] = k
    return tuple(dense)


def binomial_of_walk(w: EvenClosedWalk) -> Binomial:
    """Odd-position edges go to the plus side, even-position edges to minus."""
    plus: Counter = Counter(w.edges[0::2])
    minus: Counter = Counter(w.edges[1::2])
    return Binomial.from_exponents(plus, minus)


def exponent_row(b: Binomial, n: int) -> list[int]:
    if any(e >= n for e in b.support):
        raise PreconditionError(f"binomial uses an edge id >= {n}")
    return b.row(range(n))


def membership_check(b: Binomial, g: GraphLike) -> bool:
    """A_G * plus == A_G * minus, i.e. the binomial lies in P_G."""
    deg: Counter = Counter()
    for e, k in b.plus:
        for v in g.endpoints(e):
            deg[v] += k
    for e, k in b.minus:
        for v in g.endpoints(e):
            deg[v] -= k
    return all(x == 0 for x in deg.values())


class WalkShape(str, Enum):
    EVEN_CYCLE = "EvenCycle"
    TWO_ODD_CYCLES_SHARED_VERTEX = "TwoOddCyclesSharedVertex"
    TWO_ODD_CYCLES_TWO_PATHS = "TwoOddCyclesTwoPaths"
    OTHER = "Other"


def _is_simple_cycle(seq: Sequence[int]) -> bool:
    # seq is closed: first == last.
    return len(seq) >= 4 and seq[0] == seq[-1] and len(set(seq[:-1])) == len(seq) - 1


def classify_walk_shape(w: EvenClosedWalk) -> WalkShape:
    vs = w.vertices
    if _is_simple_cycle(vs):
        return WalkShape.EVEN_CYCLE
    body = list(vs[:-1])
    L = len(body)
    shared = False
    paths = False
    for s in range(L):
        rot = body[s:] + body[:s]
        seq = rot + rot[:1]
        for l1 in range(3, L, 2):
            if seq[l1] != seq[0] or not _is_simple_cycle(seq[: l1 + 1]):
                continue
            c1 = set(seq[:l1])
            # Shared vertex: the rest is a second odd cycle through seq[0].
            rest = seq[l1:]
            if (L - l1) % 2 == 1 and _is_simple_cycle(rest) and set(rest[:-1]) & c1 == {seq[0]}:
                shared = True
            # Two paths: C1, walk to p, C2 at p, walk back.
            for p in range(l1 + 1, L):
                for l2 in range(3, L - p, 2):
                    q = p + l2
                    if seq[q] != seq[p] or not _is_simple_cycle(seq[p : q + 1]):
                        continue
                    if set(seq[p:q]) & c1:
                        continue
                    paths = True
    if shared:
        return WalkShape.TWO_ODD_CYCLES_SHARED_VERTEX
    if paths:
        return WalkShape.TWO_ODD_CYCLES_TWO_PATHS
    return WalkShape.OTHER
