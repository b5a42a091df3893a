import pytest

from ukoszul import build_graph, complete_graph, cycle_graph, empty_graph, path_graph
from ukoszul.corpus import graph_from_bits


def labeled_graphs(n):
    for bits in range(1 << (n * (n - 1) // 2)):
        yield graph_from_bits(n, bits)


def labeled_upto(nmax, nmin=1):
    for n in range(nmin, nmax + 1):
        yield from labeled_graphs(n)


@pytest.fixture
def named():
    return {
        "K1": empty_graph(1),
        "K2": complete_graph(2),
        "K3": complete_graph(3),
        "P4": path_graph(4),
        "2K2": build_graph(4, [(0, 1), (2, 3)]),
        "C4": cycle_graph(4),
        "C5": cycle_graph(5),
        "paw": build_graph(4, [(0, 1), (0, 3), (1, 3), (2, 3)]),
    }
