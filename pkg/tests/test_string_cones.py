import itertools

import pytest
from hypothesis import given, strategies as st

from nocones.cartan import build_root_datum, weyl_dimension
from nocones.hrep import row_from_terms
from nocones.lattice import count_points, enumerate_points, rational_point
from nocones.oracles import invariant_dimension
from nocones.string_cones import (Convention, dual_matrix, project_pi, string_cone, string_fiber,
                                  tensor3_cone, tensor3_fiber)


def implied(cone, terms):
    """Whether sum(terms) >= 0 holds on the whole (homogeneous) cone."""
    neg = row_from_terms(cone.var_names, {k: -v for k, v in terms.items()}, 1)
    return rational_point(cone.with_rows(ineqs=[neg])) is None


def test_rank_one_string_cone():
    cone = string_cone(build_root_datum("A1"), (1,))
    assert cone.var_names == ("lam1", "t1")
    assert set(cone.ineqs) == {(1, 0, 0), (0, 1, 0), (1, -1, 0)}


def test_bad_word_rejected():
    with pytest.raises(ValueError):
        string_cone(build_root_datum("A2"), (1, 1, 2))


G2_CHAIN = [{"t2": 6, "t3": -2}, {"t3": 2, "t4": -3}, {"t4": 3, "t5": -2}, {"t5": 2, "t6": -6}, {"t6": 1}]


def test_g2_chain_rows():
    g2 = build_root_datum("G2")
    for cone in (string_cone(g2, (1, 2, 1, 2, 1, 2)), tensor3_cone(g2, (1, 2, 1, 2, 1, 2))):
        assert all(implied(cone, row) for row in G2_CHAIN)


def test_c2_chain_rows():
    c2 = build_root_datum("C2")
    first = tensor3_cone(c2, (1, 2, 1, 2))
    for row in ({"t2": 2, "t3": -1}, {"t3": 1, "t4": -2}, {"t4": 1}, {"lam2": 1, "t4": -1}):
        assert implied(first, row)
    second = tensor3_cone(c2, (2, 1, 2, 1))
    for row in ({"t2": 1, "t3": -1}, {"t3": 1, "t4": -1}, {"t4": 1}):
        assert implied(second, row)


@pytest.mark.parametrize("label,word", [("A1", (1,)), ("A2", (1, 2, 1)), ("A2", (2, 1, 2)), ("B2", (1, 2, 1, 2)),
                                        ("C2", (2, 1, 2, 1)), ("G2", (1, 2, 1, 2, 1, 2)),
                                        ("A3", (1, 2, 1, 3, 2, 1)), ("A1xA1", (1, 2))])
def test_string_fibers_count_dimensions(label, word):
    d = build_root_datum(label)
    cone = string_cone(d, word)
    for lam in itertools.product(range(3), repeat=d.rank):
        assert count_points(string_fiber(cone, lam)) == weyl_dimension(d, lam)


def test_zero_fibers_are_points():
    for label, word in (("A2", (1, 2, 1)), ("G2", (2, 1, 2, 1, 2, 1))):
        d = build_root_datum(label)
        assert count_points(string_fiber(string_cone(d, word), (0, 0))) == 1
        assert count_points(tensor3_fiber(d, tensor3_cone(d, word), (0, 0), (0, 0), (0, 0))) == 1


def test_tensor_fiber_examples():
    a1 = build_root_datum("A1")
    cone = tensor3_cone(a1, (1,))
    assert count_points(tensor3_fiber(a1, cone, (2,), (1,), (1,))) == 1
    assert count_points(tensor3_fiber(a1, cone, (1,), (1,), (1,))) == 0
    a2 = build_root_datum("A2")
    assert count_points(tensor3_fiber(a2, tensor3_cone(a2, (1, 2, 1)), (1, 0), (1, 0), (1, 0))) == 1


def test_projection_examples():
    a1, a2 = build_root_datum("A1"), build_root_datum("A2")
    assert project_pi(a1, (1,), (0, 0, 0), 1) == (0,)
    assert project_pi(a1, (1,), (1, 0, 1), 1) == (2,)
    # (2 omega_1)^* = 2 omega_2
    assert project_pi(a2, (1, 2, 1), (1, 0, 0, 0, 0, 1, 0), 1) == (0, 2)
    assert project_pi(a2, (1, 2, 1), (1, 0, 0, 0, 0, 1, 0), 2) == (1, 0)
    assert project_pi(a2, (1, 2, 1), (1, 0, 0, 0, 0, 1, 0), 3) == (1, 0)
    assert dual_matrix(a2) == [[0, 1], [1, 0]]


def test_other_conventions_fail_the_oracle():
    # the sign choice matters: flipping the eta family breaks invariant counts
    a2 = build_root_datum("A2")
    flipped = tensor3_cone(a2, (1, 2, 1), Convention(eta_sign=1))
    bad = 0
    for mu, lam, eta in itertools.product(list(itertools.product(range(2), repeat=2)), repeat=3):
        bad += count_points(tensor3_fiber(a2, flipped, mu, lam, eta)) != invariant_dimension(a2, [mu, lam, eta])
    assert bad > 0


@given(st.sampled_from([("A2", (1, 2, 1)), ("C2", (1, 2, 1, 2)), ("B2", (2, 1, 2, 1))]), st.data())
def test_fiber_points_project_back(case, data):
    label, word = case
    d = build_root_datum(label)
    cone = tensor3_cone(d, word)
    ws = [tuple(data.draw(st.integers(0, 2)) for _ in range(2)) for _ in range(3)]
    fiber = tensor3_fiber(d, cone, *ws)
    for t in enumerate_points(fiber):
        point = ws[1] + tuple(t) + ws[2]
        assert cone.contains(point)
        assert project_pi(d, word, point, 1) == ws[0]


@given(st.sampled_from([("A2", (1, 2, 1)), ("G2", (1, 2, 1, 2, 1, 2))]), st.data())
def test_cone_closed_under_addition(case, data):
    label, word = case
    d = build_root_datum(label)
    cone = string_cone(d, word)
    lam1 = tuple(data.draw(st.integers(0, 2)) for _ in range(2))
    lam2 = tuple(data.draw(st.integers(0, 2)) for _ in range(2))
    p = data.draw(st.sampled_from(enumerate_points(string_fiber(cone, lam1)).points))
    q = data.draw(st.sampled_from(enumerate_points(string_fiber(cone, lam2)).points))
    assert cone.contains(lam1 + p) and cone.contains(lam2 + q)
    total = tuple(a + b for a, b in zip(lam1 + p, lam2 + q))
    assert cone.contains(total)
