import itertools

import pytest
from hypothesis import given, strategies as st

from nocones.cartan import apply_word, build_root_datum, dual_weight, reflect, weyl_dimension
from nocones.oracles import (freudenthal_multiplicities, invariant_dimension, sl2_triple_admissible,
                             tensor_decompose)


def test_freudenthal_examples():
    a1 = build_root_datum("A1")
    assert freudenthal_multiplicities(a1, (3,)).mults == {(3,): 1, (1,): 1, (-1,): 1, (-3,): 1}
    adj = freudenthal_multiplicities(build_root_datum("A2"), (1, 1))
    assert adj.mults[(0, 0)] == 2
    assert sorted(adj.mults.values()) == [1] * 6 + [2]
    assert adj.dimension == 8
    for label in ("A2", "G2", "B3"):
        d = build_root_datum(label)
        assert freudenthal_multiplicities(d, (0,) * d.rank).mults == {(0,) * d.rank: 1}


@pytest.mark.parametrize("label", ["A2", "B2", "C2", "G2", "A3", "B3"])
def test_characters_weyl_invariant(label):
    d = build_root_datum(label)
    for lam in itertools.product(range(2), repeat=d.rank):
        table = freudenthal_multiplicities(d, lam)
        assert table.dimension == weyl_dimension(d, lam)
        for mu, m in table.mults.items():
            for i in range(d.rank):
                assert table.mults.get(reflect(d, mu, i)) == m


def test_tensor_examples():
    a1, a2 = build_root_datum("A1"), build_root_datum("A2")
    assert tensor_decompose(a1, (1,), (1,)) == {(2,): 1, (0,): 1}
    assert tensor_decompose(a2, (1, 0), (0, 1)) == {(1, 1): 1, (0, 0): 1}
    assert tensor_decompose(a2, (2, 1), (0, 0)) == {(2, 1): 1}


def test_invariant_examples():
    a1 = build_root_datum("A1")
    assert invariant_dimension(a1, [(1,), (1,)]) == 1
    assert invariant_dimension(a1, [(1,), (1,), (2,)]) == 1
    assert invariant_dimension(a1, [(1,), (1,), (1,)]) == 0
    assert invariant_dimension(a1, [(1,)] * 4) == 2
    assert invariant_dimension(a1, [(2,)] * 4) == 3
    a2 = build_root_datum("A2")
    assert invariant_dimension(a2, [(1, 1)] * 3) == 2
    assert invariant_dimension(a2, [(1, 0)] * 3) == 1
    assert invariant_dimension(a2, [(1, 0)] * 4) == 0


def test_admissible_triples():
    assert sl2_triple_admissible(1, 1, 2)
    assert not sl2_triple_admissible(1, 1, 1)
    assert sl2_triple_admissible(0, 0, 0)
    assert not sl2_triple_admissible(0, 1, 3)


@given(st.integers(0, 6), st.integers(0, 6), st.integers(0, 6))
def test_admissibility_is_sl2_invariants(a, b, c):
    a1 = build_root_datum("A1")
    assert invariant_dimension(a1, [(a,), (b,), (c,)]) == int(sl2_triple_admissible(a, b, c))


weights2 = st.tuples(st.integers(0, 3), st.integers(0, 3))


@given(st.sampled_from(["A2", "B2", "C2", "G2"]), weights2, weights2)
def test_tensor_bookkeeping(label, lam, mu):
    d = build_root_datum(label)
    dec = tensor_decompose(d, lam, mu)
    assert sum(m * weyl_dimension(d, nu) for nu, m in dec.items()) == weyl_dimension(d, lam) * weyl_dimension(d, mu)
    assert dec == tensor_decompose(d, mu, lam)


@given(st.sampled_from(["A2", "B2", "G2"]), weights2, weights2, weights2)
def test_invariants_symmetric(label, a, b, c):
    d = build_root_datum(label)
    base = invariant_dimension(d, [a, b, c])
    for perm in itertools.permutations([a, b, c]):
        assert invariant_dimension(d, list(perm)) == base
    assert invariant_dimension(d, [dual_weight(d, w) for w in (a, b, c)]) == base


def test_dual_via_longest_element():
    d = build_root_datum("A3")
    lam = (1, 2, 0)
    assert dual_weight(d, lam) == tuple(-x for x in apply_word(d, d.longest_word, lam))
