import itertools
import random

import pytest
from hypothesis import given, strategies as st

from ukoszul import (
    CapExceeded,
    EdgeIdeal,
    LinearFormPair,
    Monomial,
    ObstructionWitness,
    PatternKind,
    PatternWitness,
    WrongPatternKind,
    build_graph,
    complete_graph,
    contains_poly,
    cycle_graph,
    edge_ideal,
    empty_graph,
    fiber_product,
    independence_complex,
    is_2k2_p4_free,
    join,
    obstruction_from_witness,
    path_graph,
    verify_obstruction,
)
from ukoszul.corpus import graph_from_bits
from ukoszul.ideal import SimplicialComplex

from conftest import labeled_upto
from oracles import brute_independence_faces, normal_form_in_ideal


def M(*vs):
    return Monomial.of(*vs)


def test_monomial_invariants():
    assert M(3, 1).support == (1, 3)
    with pytest.raises(ValueError):
        Monomial((2, 1))
    with pytest.raises(ValueError):
        Monomial(())
    with pytest.raises(ValueError):
        M(1, 1)
    with pytest.raises(ValueError):
        EdgeIdeal(3, frozenset({M(0, 1, 2)}))


def test_edge_ideal_examples():
    assert edge_ideal(complete_graph(2)).gens == {M(0, 1)}
    i = edge_ideal(path_graph(4))
    assert i.sorted_gens() == [M(0, 1), M(1, 2), M(2, 3)] and i.nvars == 4
    assert str(i) == "(x0x1, x1x2, x2x3)"
    assert edge_ideal(empty_graph(3)).gens == frozenset()


def test_fiber_product_examples():
    k1 = edge_ideal(empty_graph(1))
    assert fiber_product(k1, k1) == edge_ideal(complete_graph(2))
    two = edge_ideal(empty_graph(2))
    assert fiber_product(two, two) == edge_ideal(join(empty_graph(2), empty_graph(2)))
    assert fiber_product(two, two) == edge_ideal(build_graph(4, [(0, 2), (0, 3), (1, 2), (1, 3)]))
    i = edge_ideal(path_graph(4))
    assert fiber_product(edge_ideal(empty_graph(0)), i) == i
    with pytest.raises(CapExceeded):
        fiber_product(edge_ideal(empty_graph(40)), edge_ideal(empty_graph(30)))


def test_fiber_product_matches_join_up_to_5():
    graphs = list(labeled_upto(3, nmin=0))
    rng = random.Random(5)
    graphs += [graph_from_bits(n, rng.getrandbits(n * (n - 1) // 2)) for n in (4, 5) for _ in range(20)]
    for g1 in graphs:
        for g2 in graphs[::3]:
            assert fiber_product(edge_ideal(g1), edge_ideal(g2)) == edge_ideal(join(g1, g2))


def test_contains_poly_examples():
    i = edge_ideal(build_graph(4, [(0, 1), (2, 3)]))
    assert contains_poly(i, [M(0, 1, 3), M(0, 2, 3)])
    assert not contains_poly(i, [M(0, 2)])
    assert contains_poly(i, [M(2, 3)])
    with pytest.raises(ValueError):
        contains_poly(i, [])


@given(st.integers(2, 7), st.data())
def test_contains_poly_matches_normal_form(n, data):
    pairs = list(itertools.combinations(range(n), 2))
    gens = data.draw(st.lists(st.sampled_from(pairs), unique=True))
    ideal = EdgeIdeal(n, frozenset(Monomial(p) for p in gens))
    supports = st.sets(st.integers(0, n - 1), min_size=1).map(lambda s: tuple(sorted(s)))
    terms = data.draw(st.lists(supports, min_size=1, max_size=5, unique=True))
    assert contains_poly(ideal, [Monomial(t) for t in terms]) == normal_form_in_ideal(gens, terms)


def test_obstruction_from_witness_examples():
    o = obstruction_from_witness(PatternWitness(PatternKind.TWO_K2, (0, 1, 2, 3)))
    assert o == ObstructionWitness((0, 3), LinearFormPair(1, 2), "a")
    o = obstruction_from_witness(PatternWitness(PatternKind.P4, (0, 1, 2, 3)))
    assert o == ObstructionWitness((0, 3), LinearFormPair(1, 2), "b")
    with pytest.raises(WrongPatternKind):
        obstruction_from_witness(PatternWitness(PatternKind.C4, (0, 1, 2, 3)))


def test_obstruction_invariants():
    with pytest.raises(ValueError):
        LinearFormPair(2, 2)
    with pytest.raises(ValueError):
        ObstructionWitness((0, 1), LinearFormPair(1, 2), "a")
    with pytest.raises(ValueError):
        ObstructionWitness((0, 3), LinearFormPair(1, 2), "c")


def test_verify_obstruction_examples():
    p4 = path_graph(4)
    w = obstruction_from_witness(PatternWitness(PatternKind.P4, (0, 1, 2, 3)))
    assert verify_obstruction(edge_ideal(p4), w)
    tk = build_graph(4, [(0, 1), (2, 3)])
    w = obstruction_from_witness(PatternWitness(PatternKind.TWO_K2, (0, 1, 2, 3)))
    assert verify_obstruction(edge_ideal(tk), w)
    # in C4, x0 already kills x1 + x3
    assert not verify_obstruction(edge_ideal(cycle_graph(4)),
                                  ObstructionWitness((0, 2), LinearFormPair(1, 3), "b"))


def test_verify_obstruction_on_every_found_witness():
    for g in labeled_upto(6, nmin=4):
        free, w = is_2k2_p4_free(g)
        if not free:
            assert verify_obstruction(edge_ideal(g), obstruction_from_witness(w))


def test_independence_complex_examples():
    c = independence_complex(cycle_graph(5))
    assert c.dim == 1 and len(c.faces_of_dim(0)) == 5 and len(c.faces_of_dim(1)) == 5
    k = independence_complex(complete_graph(4))
    assert k.f_vector() == [1, 4]
    full = independence_complex(empty_graph(4))
    assert full.f_vector() == [1, 4, 6, 4, 1]
    assert c.is_closed() and k.is_closed() and full.is_closed()
    with pytest.raises(CapExceeded):
        independence_complex(empty_graph(15))


def test_independence_complex_properties():
    for g in labeled_upto(5):
        c = independence_complex(g)
        expected = {tuple(f) for f in brute_independence_faces(range(g.n), g.edges())}
        assert {f for fs in c.faces for f in fs} == expected
        non_edges = {(u, v) for u, v in itertools.combinations(range(g.n), 2) if not g.has_edge(u, v)}
        assert set(c.faces_of_dim(1)) == non_edges
        assert len(c.faces_of_dim(0)) == g.n


def test_from_faces_closes():
    c = SimplicialComplex.from_faces(3, [(0, 1, 2)])
    assert c.f_vector() == [1, 3, 3, 1] and c.is_closed()
