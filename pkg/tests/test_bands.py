import networkx as nx
from oracles import band_kind_bruteforce, from_nx

from ci_toric import BandKind, band_generators, binomial_of_walk, recognize_band, verify_fs
from ci_toric.families import band, complete, complete_bipartite, moebius_band, odd_band


def test_examples():
    k4 = recognize_band(complete(4))
    assert k4.kind is BandKind.EVEN_MOEBIUS_BAND and k4.r == 2
    assert recognize_band(odd_band(3)).kind is BandKind.ODD_BAND
    mb = recognize_band(moebius_band(4))
    assert mb.kind is BandKind.EVEN_MOEBIUS_BAND and mb.r == 4
    assert recognize_band(complete_bipartite(3, 3)) is None
    pet = from_nx(nx.petersen_graph())
    assert recognize_band(pet) is None and band_kind_bruteforce(pet) is None


def test_generators_are_certified_quadrics():
    for r in range(2, 9):
        g = band(r)
        lab = recognize_band(g)
        walks = band_generators(g, lab)
        assert len(walks) == r and all(len(w) == 4 for w in walks)
        assert verify_fs(g, [binomial_of_walk(w) for w in walks]).ok


def test_moebius_closing_walk_uses_both_closing_edges():
    g = moebius_band(4)
    lab = recognize_band(g)
    last = band_generators(g, lab)[-1]
    closing = {g.edge_id(*p) for p in lab.closing()}
    assert closing <= set(last.edges)


def test_labeling_reproduces_edges():
    for r in range(3, 10):
        g = band(r)
        lab = recognize_band(g)
        assert lab.edge_set() == {frozenset(g.endpoints(e)) for e in g.edge_ids}
