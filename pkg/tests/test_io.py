import json

import pytest

from ci_toric import GraphFormat, ParseError, parse_graph
from ci_toric.families import fig5
from ci_toric.io import guess_format, to_edge_list, to_json


def test_edge_list_comments_and_header():
    g = parse_graph("# fig\nvertices: a b c d\na b  # first\nb c\n")
    assert g.labels == ("a", "b", "c", "d")
    assert g.num_edges == 2


@pytest.mark.parametrize(
    "text, line",
    [("1 2\n2 1\n", 2), ("1 2\n3 3\n", 2), ("vertices: 1 2\n1 5\n", 2), ("1 2 3\n", 1)],
)
def test_edge_list_errors_name_the_line(text, line):
    with pytest.raises(ParseError) as exc:
        parse_graph(text)
    assert exc.value.line == line


def test_json_round_trip():
    g = fig5()
    h = parse_graph(to_json(g), GraphFormat.JSON)
    assert h.labels == g.labels and h.edges == g.edges
    h2 = parse_graph(to_edge_list(g))
    assert h2.labels == g.labels and h2.edges == g.edges


def test_json_errors():
    with pytest.raises(ParseError):
        parse_graph(json.dumps({"vertices": ["a"], "edges": [["a", "b"]]}), "json")
    with pytest.raises(ParseError):
        parse_graph("{not json", "json")


def test_dot_subset():
    g = parse_graph("graph G {\n a -- b; b -- c\n c -- a;\n}", GraphFormat.DOT_SUBSET)
    assert (g.num_vertices, g.num_edges) == (3, 3)
    with pytest.raises(ParseError):
        parse_graph("graph { a -- b [color=red]; }", "dot_subset")
    with pytest.raises(ParseError):
        parse_graph("digraph { a -> b }", "dot_subset")


def test_guess_format():
    assert guess_format("x.json") is GraphFormat.JSON
    assert guess_format("x.dot") is GraphFormat.DOT_SUBSET
    assert guess_format("x.edges") is GraphFormat.EDGE_LIST
