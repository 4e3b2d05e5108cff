import itertools

import pytest
from hypothesis import given, strategies as st

from nocones.bz import (BZTriangle, bz_boundary, bz_cone, bz_entries, bz_fiber, bz_hexagons, bz_sides,
                        nice_word, quilt_count)
from nocones.cartan import build_root_datum, is_reduced_word
from nocones.gluing import caterpillar, graph_cone, theta_graph, tree_polytope
from nocones.lattice import count_points, enumerate_points, graded_count
from nocones.oracles import invariant_dimension


def test_sl2_triangle_is_free():
    cone = bz_cone(2)
    assert cone.nvars == 3 and not cone.eqs
    assert bz_hexagons(2) == []


def test_sl3_diagram():
    assert len(bz_entries(3)) == 9
    assert len(bz_hexagons(3)) == 1
    assert all(len(side) == 4 for side in bz_sides(3))
    assert len(bz_cone(3).eqs) == 2
    with pytest.raises(ValueError):
        bz_cone(1)


@pytest.mark.parametrize("m", [2, 3, 4, 5])
def test_zero_triangle(m):
    T = BZTriangle(m, {e: 0 for e in bz_entries(m)})
    assert T.satisfies_hexagons
    assert bz_boundary(T) == ((0,) * (m - 1),) * 3
    assert bz_cone(m).contains([0] * len(bz_entries(m)))


def test_sl2_boundary():
    T = BZTriangle(2, {(0, 0, "top"): 1, (0, 0, "bl"): 1, (0, 0, "br"): 0})
    assert sorted(bz_boundary(T)) == [(1,), (1,), (2,)]
    assert count_points(bz_fiber(2, [(1,), (1,), (2,)])) == 1


def test_adjoint_cube():
    assert count_points(bz_fiber(3, [(1, 1)] * 3)) == 2


def test_nice_word():
    assert nice_word(2) == (1,)
    assert nice_word(4) == (1, 2, 1, 3, 2, 1)
    for m in (2, 3, 4, 5):
        assert is_reduced_word(build_root_datum(f"A{m - 1}"), nice_word(m))


@pytest.mark.parametrize("m,top", [(2, 4), (3, 2), (4, 1)])
def test_bz_counts_littlewood_richardson(m, top):
    d = build_root_datum(f"A{m - 1}")
    for ws in itertools.product(list(itertools.product(range(top + 1), repeat=m - 1)), repeat=3):
        assert count_points(bz_fiber(m, ws)) == invariant_dimension(d, list(ws))


@given(st.sampled_from([3, 4]), st.data())
def test_hexagons_closed_under_addition(m, data):
    ws1 = [tuple(data.draw(st.integers(0, 1)) for _ in range(m - 1)) for _ in range(3)]
    ws2 = [tuple(data.draw(st.integers(0, 1)) for _ in range(m - 1)) for _ in range(3)]
    p1, p2 = enumerate_points(bz_fiber(m, ws1)).points, enumerate_points(bz_fiber(m, ws2)).points
    if not p1 or not p2:
        return
    s = [a + b for a, b in zip(p1[0], p2[0])]
    T = BZTriangle.from_point(m, s)
    assert T.satisfies_hexagons
    assert bz_boundary(T) == tuple(tuple(x + y for x, y in zip(u, v)) for u, v in zip(ws1, ws2))


def test_quilt_examples():
    assert quilt_count(caterpillar(3), 2, [(1,), (1,), (2,)]) == 1
    assert quilt_count(caterpillar(4), 2, [(2,)] * 4) == 3
    assert quilt_count(caterpillar(4), 3, [(0, 0)] * 4) == 1
    ws = [(1, 0), (0, 1), (1, 1), (1, 1)]
    tree = caterpillar(4, nice_word(3))
    assert quilt_count(caterpillar(4), 3, ws) == count_points(tree_polytope("A2", tree, ws))


def test_theta_quilts_match_string_gluing():
    glued = graph_cone("A2", theta_graph(nice_word(3)))
    for d in range(4):
        assert quilt_count(theta_graph(), 3, degree=d) == graded_count(glued.hrep, glued.grading, d)
