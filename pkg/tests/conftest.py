import acceptance_log


def pytest_terminal_summary(terminalreporter):
    if acceptance_log.LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(acceptance_log.LINES):
            terminalreporter.write_line(line)


import networkx as nx
import pytest
from networkx.generators.atlas import graph_atlas_g
from oracles import from_nx


@pytest.fixture(scope="session")
def small_corpus():
    """Connected graphs with 2..6 vertices, one per isomorphism class."""
    return [from_nx(h) for h in graph_atlas_g()[1:] if 2 <= h.number_of_nodes() <= 6 and nx.is_connected(h)]
