from hypothesis import given, strategies as st

from ukoszul.linalg import rank_bareiss, rank_gf2, rank_mod_p

from oracles import rank_fraction, rank_mod

matrices = st.integers(1, 7).flatmap(
    lambda c: st.lists(st.lists(st.integers(-3, 3), min_size=c, max_size=c), min_size=1, max_size=7))


@given(matrices)
def test_bareiss_matches_fraction_elimination(m):
    assert rank_bareiss(m) == rank_fraction(m)


@given(matrices, st.sampled_from([2, 3, 5, 7, 2147483647]))
def test_mod_p_matches_oracle(m, p):
    assert rank_mod_p(m, p) == rank_mod(m, p)


def test_small_cases():
    assert rank_bareiss([]) == 0
    assert rank_bareiss([[0, 0], [0, 0]]) == 0
    assert rank_bareiss([[1, 1], [1, -1]]) == 2
    # over GF(2) these rows coincide
    assert rank_mod_p([[1, 1], [1, -1]], 2) == 1
    assert rank_gf2([0b11, 0b01, 0b10]) == 2
