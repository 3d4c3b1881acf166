import pytest

from ci_toric import PreconditionError, is_ci
from ci_toric.families import FAMILY_NAMES, build_family

FIXED = {
    "fig5": (7, 9, False),
    "fig1": (9, 11, False),
    "fig2": (8, 12, True),
    "fig4": (8, 9, False),
    "contraejemplo": (7, 9, False),
    "opb-figure": (12, 17, True),
    "doubwheel-figure": (9, 12, True),
    "vertexb-figure": (13, 17, True),
    "k23": (5, 6, False),
}

PARAMS = {
    "cycle": ({"r": "6"}, (6, 6, True)),
    "complete": ({"r": "4"}, (4, 6, True)),
    "bipartite": ({"p": "2", "q": "3"}, (5, 6, False)),
    "band": ({"r": "5"}, (10, 15, True)),
    "moebius": ({"r": "4"}, (8, 12, True)),
    "opb": ({"r1": "3", "r2": "5", "cross": "1,1,3,3"}, (8, 10, True)),
    "wheel": ({"r": "7", "spokes": "1,3,7"}, (8, 10, True)),
    "double-wheel": ({"r": "7", "j": "1,3", "k": "3,7"}, (9, 12, True)),
    "vertex-band": ({"r": "5", "s": "7", "i": "1,3,7"}, (13, 17, True)),
    "theta": ({"lengths": "2,2,2"}, (5, 6, False)),
}


@pytest.mark.parametrize("name", sorted(FIXED))
def test_fixed_figures(name):
    g = build_family(name, {})
    assert (g.num_vertices, g.num_edges, is_ci(g)) == FIXED[name]


@pytest.mark.parametrize("name", sorted(PARAMS))
def test_parametrized(name):
    params, want = PARAMS[name]
    g = build_family(name, params)
    assert (g.num_vertices, g.num_edges, is_ci(g)) == want


def test_every_name_is_covered():
    random = {n for n in FAMILY_NAMES if n.startswith("random-")}
    assert set(FAMILY_NAMES) == set(FIXED) | set(PARAMS) | random


@pytest.mark.parametrize("name", [n for n in FAMILY_NAMES if n.startswith("random-")])
def test_random_members_are_ci_and_seeded(name):
    a, b = build_family(name, {}, 3), build_family(name, {}, 3)
    assert a.edges == b.edges and is_ci(a)


def test_bad_parameters():
    with pytest.raises((PreconditionError, ValueError)):
        build_family("wheel", {"r": "6", "spokes": "1"})
    with pytest.raises((PreconditionError, ValueError)):
        build_family("band", {})
