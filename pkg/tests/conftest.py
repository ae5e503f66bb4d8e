import pytest

from pcgroup.graphs import Graph, cycle_graph, path_graph


@pytest.fixture
def p3():
    return path_graph(["a", "b", "c"])


@pytest.fixture
def c5():
    return cycle_graph(5)


@pytest.fixture
def word(p3):
    from pcgroup.words import parse_word

    return lambda text, g=p3: parse_word(g, text)
