import itertools

import pytest
from hypothesis import given, strategies as st

from nocones.cartan import build_root_datum
from nocones.gluing import (DecoratedGraph, DecorationError, caterpillar, dumbbell_graph, format_graph,
                            graph_cone, load_graph, parse_graph_file, tree_cone, tree_polytope,
                            trivalent_refinement, theta_graph)
from nocones.lattice import count_points, enumerate_points, graded_count
from nocones.oracles import invariant_dimension
from nocones.string_cones import tensor3_cone
from nocones.suites import four_leaf_topologies, sl2_oracle_series

A1 = build_root_datum("A1")
A2 = build_root_datum("A2")


def test_single_vertex_is_tensor_cone():
    tree = caterpillar(3, (1, 2, 1))
    glued = tree_cone(A2, tree)
    ws = [(1, 0), (1, 0), (1, 0)]
    assert count_points(tree_polytope(A2, tree, ws)) == 1
    assert glued.hrep.nvars == tensor3_cone(A2, (1, 2, 1)).nvars + 3 * 2


def test_four_leaf_examples():
    tree = caterpillar(4, (1,))
    assert count_points(tree_polytope(A1, tree, [(1,)] * 4)) == 2
    assert count_points(tree_polytope(A1, tree, [(0,)] * 4)) == 1
    t2 = caterpillar(4, (1, 2, 1))
    assert count_points(tree_polytope(A2, t2, [(1, 0)] * 4)) == 0


def test_both_topologies():
    for tree in four_leaf_topologies((1,)):
        assert count_points(tree_polytope(A1, tree, [(2,)] * 4)) == 3
    ws = [(1, 0), (0, 1), (1, 0), (0, 1)]
    for tree in four_leaf_topologies((1, 2, 1)):
        assert count_points(tree_polytope(A2, tree, ws)) == invariant_dimension(A2, ws)


@given(st.lists(st.tuples(st.integers(0, 1), st.integers(0, 1)), min_size=5, max_size=5),
       st.lists(st.sampled_from([(1, 2, 1), (2, 1, 2)]), min_size=3, max_size=3))
def test_five_leaf_trees_match_oracle(ws, words):
    tree = caterpillar(5).with_words(dict(zip(("a1", "a2", "a3"), words)))
    assert count_points(tree_polytope(A2, tree, ws)) == invariant_dimension(A2, ws)


def test_points_restrict_to_vertex_cones():
    tree = caterpillar(4, (1, 2, 1))
    glued = tree_cone(A2, tree)
    local = tensor3_cone(A2, (1, 2, 1))
    poly = tree_polytope(A2, tree, [(1, 1)] * 4)
    pts = enumerate_points(poly).points
    assert len(pts) == invariant_dimension(A2, [(1, 1)] * 4)
    for p in pts:
        for v in tree.internal_vertices:
            assert local.contains(glued.restrict(p, v))


def test_no_string_variable_shared():
    glued = tree_cone(A2, caterpillar(4, (1, 2, 1)))
    for *a, b in glued.hrep.eqs:
        owners = {glued.hrep.var_names[i].split(".")[0] for i, x in enumerate(a)
                  if x and ".t" in glued.hrep.var_names[i]}
        assert len(owners) <= 1


def test_validation_errors():
    star = DecoratedGraph("tree", ("c", "x", "y", "z", "w"), (("c", "x"), ("c", "y"), ("c", "z"), ("c", "w")),
                          ("x", "y", "z", "w"), words={"c": (1,)})
    with pytest.raises(DecorationError) as exc:
        star.validate(A1)
    assert exc.value.invariant == "trivalent"
    with pytest.raises(DecorationError):
        tree_cone(A1, caterpillar(4))  # no words
    with pytest.raises(DecorationError):
        tree_cone(A2, caterpillar(4, (1, 1, 2)))
    with pytest.raises(ValueError):
        tree_polytope(A1, caterpillar(4, (1,)), [(1,)] * 3)
    bad = DecoratedGraph("graph", ("p", "q"), (("p", "q"),) * 3, (), frozenset([0]), {1: ("p", "q")}, {}, 2)
    with pytest.raises(DecorationError):
        bad.validate()
    wrong_g = DecoratedGraph("graph", ("p", "q"), (("p", "q"),) * 3, (), frozenset([0]),
                             {1: ("p", "q"), 2: ("p", "q")}, {"p": (1,), "q": (1,)}, 3)
    with pytest.raises(DecorationError) as exc:
        graph_cone(A1, wrong_g)
    assert exc.value.invariant == "betti"


@pytest.mark.parametrize("make", [theta_graph, dumbbell_graph])
def test_graph_cone_matches_oracle(make):
    g = make((1,))
    glued = graph_cone(A1, g)
    series = sl2_oracle_series(g, 6)
    assert [graded_count(glued.hrep, glued.grading, d) for d in range(7)] == series


def test_theta_small_degrees():
    glued = graph_cone(A1, theta_graph((1,)))
    assert graded_count(glued.hrep, glued.grading, 0) == 1
    assert graded_count(glued.hrep, glued.grading, 2) == 3


def test_graph_independent_of_tree_and_orientation():
    base = theta_graph((1, 2, 1))
    alt = DecoratedGraph("graph", ("p", "q"), base.edges, (), frozenset([2]),
                         {0: ("q", "p"), 1: ("q", "p")}, dict(base.words), 2)
    mixed = base.with_words({"p": (1, 2, 1), "q": (2, 1, 2)})
    counts = []
    for g in (base, alt, mixed):
        glued = graph_cone(A2, g)
        counts.append([graded_count(glued.hrep, glued.grading, d) for d in range(4)])
    assert counts[0] == counts[1] == counts[2]


def test_graph_file_roundtrip(tmp_path):
    text = "graph 2\n# theta\np q T\np q >\np q <\np: 1\nq: 1\n"
    g = parse_graph_file(text)
    assert g.mode == "graph" and g.declared == 2
    assert g.orientations == {1: ("p", "q"), 2: ("q", "p")}
    again = parse_graph_file(format_graph(g))
    assert again.edges == g.edges and again.orientations == g.orientations and again.words == g.words
    path = tmp_path / "t.graph"
    path.write_text(format_graph(caterpillar(4, (1,))))
    assert count_points(tree_polytope(A1, load_graph(path), [(2,)] * 4)) == 3
    for bad in ("", "tree\n", "tree 3\na b X\n", "graph 1\na: x\n"):
        with pytest.raises(ValueError):
            parse_graph_file(bad)


def test_refinement():
    star = DecoratedGraph("tree", ("c",) + tuple(f"L{i}" for i in range(5)),
                          tuple(("c", f"L{i}") for i in range(5)), tuple(f"L{i}" for i in range(5)),
                          words={"c": (1,)})
    ref = trivalent_refinement(star).validate(A1)
    assert len(ref.internal_vertices) == 3
    ws = [(1,), (1,), (1,), (1,), (2,)]
    assert count_points(tree_polytope(A1, ref, ws)) == invariant_dimension(A1, ws)
    path = DecoratedGraph("tree", ("L0", "m", "c", "L1", "L2"), (("L0", "m"), ("m", "c"), ("c", "L1"), ("c", "L2")),
                          ("L0", "L1", "L2"), words={"c": (1,), "m": (1,)})
    assert trivalent_refinement(path).validate(A1).internal_vertices == ("c",)


def test_reorderings_do_not_change_counts():
    tree = caterpillar(4, (1, 2, 1))
    ws = [(1, 1), (1, 0), (0, 1), (1, 1)]
    want = invariant_dimension(A2, ws)
    for perm in itertools.permutations(range(len(tree.edges))):
        t = tree.relabeled(edge_order=perm)
        assert count_points(tree_polytope(A2, t, ws)) == want
        break
    assert count_points(tree_polytope(A2, tree.relabeled(vertex_order=tree.vertices[::-1]), ws)) == want
