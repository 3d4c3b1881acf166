import pytest

from ci_toric import Binomial, decide, enumerate_fibers, generates_up_to, mu_up_to, oracle_verdict
from ci_toric.errors import PreconditionError, ResourceLimitError
from ci_toric.families import complete, cycle, fig5, path
from ci_toric.fibers import DEFAULT_MONOMIAL_CAP


def test_square_fiber():
    fibers = enumerate_fibers(cycle(4), 2)
    big = [f for f in fibers if len(f.members) > 1]
    assert len(big) == 1
    assert set(big[0].members) == {(1, 0, 1, 0), (0, 1, 0, 1)}


def test_single_edge_singletons():
    assert all(len(f.members) == 1 for f in enumerate_fibers(path(2), 4))


def test_k4_fibers():
    fibers = enumerate_fibers(complete(4), 3)
    quad = [f for f in fibers if sum(f.degree_vector) == 4 and len(f.members) > 1]
    assert len(quad) == 1 and len(quad[0].members) == 3
    assert all(len(f.members) == 1 for f in fibers if sum(f.degree_vector) == 2)
    assert mu_up_to(complete(4), 6).mu == 2


def test_mu():
    assert mu_up_to(cycle(4), 4).mu == 1
    assert mu_up_to(fig5(), 6).mu >= 3


def test_generates_up_to():
    c4 = cycle(4)
    assert generates_up_to(c4, [Binomial.from_exponents({0: 1, 2: 1}, {1: 1, 3: 1})], 4) == (True, None)
    g = fig5()
    gens = [x.binomial for x in decide(g).generators]
    ok, wit = generates_up_to(g, gens, 6)
    assert not ok and wit.a != wit.b


def test_self_consistency():
    for g in (fig5(), complete(4), cycle(6)):
        res = mu_up_to(g, 6)
        assert generates_up_to(g, res.generators, 6)[0]


def test_generators_must_be_in_the_ideal():
    with pytest.raises(PreconditionError):
        generates_up_to(path(3), [Binomial.from_exponents({0: 1}, {1: 1})], 2)


def test_oracle_verdict_stops_early():
    v = oracle_verdict(fig5())
    assert not v.is_ci and v.mu > v.height


def test_cap():
    with pytest.raises(ResourceLimitError):
        enumerate_fibers(cycle(30), 8, cap=DEFAULT_MONOMIAL_CAP // 1000)


def test_minimal_generators_have_primitive_shapes(small_corpus):
    from oracles import alternating_walks

    from ci_toric import WalkShape, classify_walk_shape

    for g in small_corpus:
        for b in mu_up_to(g, min(g.num_edges, 6)).generators:
            shapes = (classify_walk_shape(w) for w in alternating_walks(g, b))
            assert any(s is not WalkShape.OTHER for s in shapes), (g.edges, b)
