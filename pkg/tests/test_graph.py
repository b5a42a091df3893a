import itertools

import pytest
from hypothesis import given, strategies as st

from ukoszul import (
    CapExceeded,
    IndexOutOfRange,
    LoopEdge,
    build_graph,
    complement,
    complete_graph,
    cycle_graph,
    empty_graph,
    induced,
    join,
    maximal_independent_set,
    path_graph,
    remove_isolated,
)
from ukoszul.graph import Graph

from conftest import labeled_upto
from oracles import brute_is_maximal_independent, brute_isomorphic, edge_set


@st.composite
def graphs(draw, max_n=8):
    n = draw(st.integers(0, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return build_graph(n, chosen)


def test_build_p4():
    g = build_graph(4, [(0, 1), (1, 2), (2, 3)])
    assert g.edge_count == 3
    assert g.edges() == [(0, 1), (1, 2), (2, 3)]


def test_build_single_vertex():
    g = build_graph(1, [])
    assert g.n == 1 and g.edge_count == 0


def test_build_dedups():
    g = build_graph(4, [(0, 1), (0, 1), (2, 3), (1, 0)])
    assert g.edges() == [(0, 1), (2, 3)]


def test_build_errors():
    with pytest.raises(LoopEdge):
        build_graph(3, [(1, 1)])
    with pytest.raises(IndexOutOfRange):
        build_graph(3, [(0, 3)])
    with pytest.raises(CapExceeded):
        build_graph(65, [])
    assert build_graph(65, [], cap=80).n == 65


def test_graph_rejects_asymmetric_rows():
    with pytest.raises(ValueError):
        Graph(2, (0b10, 0))
    with pytest.raises(LoopEdge):
        Graph(1, (0b1,))


def test_complement_examples():
    p4 = path_graph(4)
    c = complement(p4)
    assert edge_set(c) == {frozenset(e) for e in [(1, 3), (3, 0), (0, 2)]}
    assert brute_isomorphic(4, c.edges(), p4.edges())
    assert complement(build_graph(4, [(0, 1), (2, 3)])) == build_graph(4, [(0, 2), (0, 3), (1, 2), (1, 3)])
    assert complement(complete_graph(5)) == empty_graph(5)


def test_complement_involution_exhaustive():
    for g in labeled_upto(6, nmin=0):
        c = complement(g)
        for u, v in itertools.combinations(range(g.n), 2):
            assert c.has_edge(u, v) != g.has_edge(u, v)
        assert complement(c) == g


def test_induced_examples():
    h, labels = induced(cycle_graph(5), [0, 1, 2, 3])
    assert h == path_graph(4) and labels == (0, 1, 2, 3)
    c4 = cycle_graph(4)
    assert induced(c4, range(4))[0] == c4
    assert induced(c4, [1, 2])[0] == complete_graph(2)
    with pytest.raises(IndexOutOfRange):
        induced(c4, [4])


@given(graphs(), st.data())
def test_induced_matches_edge_filter(g, data):
    w = data.draw(st.sets(st.integers(0, max(g.n - 1, 0))) if g.n else st.just(set()))
    h, labels = induced(g, w)
    expected = {frozenset((labels.index(u), labels.index(v))) for u, v in g.edges() if u in w and v in w}
    assert edge_set(h) == expected


def test_join_examples():
    assert join(empty_graph(2), empty_graph(2)) == build_graph(4, [(0, 2), (2, 1), (1, 3), (3, 0)])
    assert join(empty_graph(1), empty_graph(1)) == complete_graph(2)
    assert join(empty_graph(1), empty_graph(0)) == empty_graph(1)
    with pytest.raises(CapExceeded):
        join(empty_graph(40), empty_graph(30))


@given(graphs(5), graphs(5))
def test_join_blocks_and_cross_edges(g1, g2):
    j = join(g1, g2)
    assert induced(j, range(g1.n))[0] == g1
    assert induced(j, range(g1.n, g1.n + g2.n))[0] == g2
    assert all(j.has_edge(u, g1.n + v) for u in range(g1.n) for v in range(g2.n))


def test_remove_isolated_examples():
    core, removed, labels = remove_isolated(build_graph(3, [(0, 1)]))
    assert core == complete_graph(2) and removed == {2} and labels == (0, 1)
    core, removed, _ = remove_isolated(empty_graph(3))
    assert core.n == 0 and removed == {0, 1, 2}
    c4 = cycle_graph(4)
    assert remove_isolated(c4)[:2] == (c4, frozenset())


@given(graphs())
def test_remove_isolated_idempotent(g):
    core = remove_isolated(g)[0]
    again, removed, _ = remove_isolated(core)
    assert again == core and not removed
    assert all(core.degree(v) >= 1 for v in range(core.n))


def test_mis_examples():
    assert maximal_independent_set(path_graph(4)) == {0, 2}
    assert maximal_independent_set(complete_graph(5)) == {0}
    assert maximal_independent_set(empty_graph(4)) == {0, 1, 2, 3}


def test_mis_maximal_exhaustive():
    for g in labeled_upto(6):
        assert brute_is_maximal_independent(g.n, g.edges(), maximal_independent_set(g))


def test_pair_bits_roundtrip_matches_graph6_order():
    from ukoszul.graph import graph_from_bits, graph_to_bits

    for n in range(0, 7):
        pairs = [(i, j) for j in range(1, n) for i in range(j)]
        for bits in range(0, 1 << len(pairs), 37):
            g = graph_from_bits(n, bits)
            assert g.edges() == sorted(p for k, p in enumerate(pairs) if bits >> k & 1)
            assert graph_to_bits(g) == bits
    assert graph_from_bits(3, 0b111) == Graph(3, (6, 5, 3))
