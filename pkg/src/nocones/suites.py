"""Executable acceptance sweeps, shared by the CLI and the test suite.

Each suite returns a SuiteReport whose ``lines`` list every comparison made.
"""

import itertools
import random
import time
from collections import Counter
from dataclasses import dataclass, field

from .bz import bz_fiber, nice_word
from .cartan import build_root_datum, dual_weight, weyl_dimension
from .gluing import DecoratedGraph, caterpillar, dumbbell_graph, graph_cone, theta_graph, tree_polytope
from .lattice import count_points, graded_count
from .oracles import invariant_dimension, tensor_decompose
from .regression import compare_table
from .fixtures import TABLES
from .sl2_graphs import enumerate_weightings, verify_generation
from .string_cones import string_cone, string_fiber, tensor3_cone, tensor3_fiber


@dataclass
class SuiteReport:
    name: str
    passed: bool = True
    lines: list = field(default_factory=list)
    elapsed: float = 0.0

    def check(self, label, got, want):
        ok = got == want
        self.lines.append(f"{'ok ' if ok else 'BAD'} {label}: got {got}, expected {want}")
        self.passed &= ok
        return ok

    @property
    def failures(self):
        return [ln for ln in self.lines if ln.startswith("BAD")]


def _timed(fn):
    def run(*args, **kw):
        t0 = time.perf_counter()
        rep = fn(*args, **kw)
        rep.elapsed = time.perf_counter() - t0
        return rep

    run.__name__ = fn.__name__
    run.__doc__ = fn.__doc__
    return run


def _box(rank, top):
    return itertools.product(range(top + 1), repeat=rank)


STRING_CASES = [
    ("A1", (1,)),
    ("A2", (1, 2, 1)),
    ("A2", (2, 1, 2)),
    ("C2", (1, 2, 1, 2)),
    ("C2", (2, 1, 2, 1)),
    ("G2", (1, 2, 1, 2, 1, 2)),
    ("G2", (2, 1, 2, 1, 2, 1)),
]


@_timed
def string_dims(max_coord=4, cases=STRING_CASES):
    """String-cone fibers count Weyl dimensions."""
    rep = SuiteReport("string-dims")
    for label, word in cases:
        datum = build_root_datum(label)
        cone = string_cone(datum, word)
        for lam in _box(datum.rank, max_coord):
            rep.check(f"{label} {word} lam={lam}", count_points(string_fiber(cone, lam)), weyl_dimension(datum, lam))
    return rep


TENSOR_CASES = [
    ("A2", (1, 2, 1)),
    ("C2", (1, 2, 1, 2)),
    ("C2", (2, 1, 2, 1)),
    ("G2", (1, 2, 1, 2, 1, 2)),
]


@_timed
def tensor3(max_coord=2, cases=TENSOR_CASES):
    """Tensor-cone fibers count invariants; both C2 words agree."""
    rep = SuiteReport("tensor3")
    counts = {}
    for label, word in cases:
        datum = build_root_datum(label)
        cone = tensor3_cone(datum, word)
        for mu, lam, eta in itertools.product(list(_box(datum.rank, max_coord)), repeat=3):
            got = count_points(tensor3_fiber(datum, cone, mu, lam, eta))
            counts[(label, word, mu, lam, eta)] = got
            rep.check(f"{label} {word} mu={mu} lam={lam} eta={eta}", got, invariant_dimension(datum, [mu, lam, eta]))
    words = [w for lab, w in cases if lab == "C2"]
    if len(words) == 2:
        for key, v in counts.items():
            if key[0] == "C2" and key[1] == words[0]:
                rep.check(f"C2 word independence {key[2:]}", v, counts[("C2", words[1]) + key[2:]])
    return rep


@_timed
def regression(t_max=6, w_max=3):
    """Transcribed rank-2 tables against the generated cones, as point sets on a box."""
    rep = SuiteReport("g2-sp4-regression")
    for label, word in TABLES:
        res = compare_table(label, word, t_max, w_max)
        rep.check(
            f"{label} {word} box points only-generated/only-table "
            f"(generated {res.generated}, table {res.table})",
            (len(res.only_generated), len(res.only_table)),
            (0, 0),
        )
    return rep


def four_leaf_topologies(word=None):
    """The two 4-leaf trees {12|34} and {13|24} with leaves read in order 1..4."""
    first = caterpillar(4, word)
    second = DecoratedGraph("tree", first.vertices, first.edges,
                            ("L0", "L2", "L1", "L3"), frozenset(), {}, dict(first.words), 4)
    return first, second


@_timed
def glue_independence():
    """Tree counts are the same for both topologies, orderings and word choices."""
    rep = SuiteReport("glue-independence")
    A1 = build_root_datum("A1")
    for k, tree in enumerate(four_leaf_topologies((1,))):
        rep.check(f"A1 topology {k} (2,2,2,2)", count_points(tree_polytope(A1, tree, [(2,)] * 4)), 3)
    A2 = build_root_datum("A2")
    weights = [(1, 0), (0, 1), (1, 0), (0, 1)]
    want = invariant_dimension(A2, weights)
    for k, tree in enumerate(four_leaf_topologies((1, 2, 1))):
        variants = {
            "as built": tree,
            "vertices reversed": tree.relabeled(vertex_order=tree.vertices[::-1]),
            "edges reversed": tree.relabeled(edge_order=range(len(tree.edges) - 1, -1, -1)),
            "words 212": tree.with_words({v: (2, 1, 2) for v in tree.internal_vertices}),
            "words mixed": tree.with_words({"a1": (1, 2, 1), "a2": (2, 1, 2)}),
        }
        for name, t in variants.items():
            rep.check(f"A2 topology {k} {name} {weights}", count_points(tree_polytope(A2, t, weights)), want)
    return rep


def sl2_oracle_series(graph, max_degree):
    """Per degree: sum over all edge weightings of the product of vertex invariant dimensions."""
    A1 = build_root_datum("A1")
    out = [0] * (max_degree + 1)
    n = len(graph.edges)
    for w in itertools.product(range(max_degree + 1), repeat=n):
        d = sum(w)
        if d > max_degree:
            continue
        prod = 1
        for v in graph.internal_vertices:
            prod *= invariant_dimension(A1, [(w[k],) for k, _ in graph.incident(v)])
            if not prod:
                break
        out[d] += prod
    return out


@_timed
def graph_consistency(max_degree=8):
    """A1 graph cones against the oracle series and against sl2_graphs."""
    rep = SuiteReport("graph-consistency")
    for name, graph in (("theta", theta_graph((1,))), ("dumbbell", dumbbell_graph((1,)))):
        glued = graph_cone("A1", graph)
        oracle = sl2_oracle_series(graph, max_degree)
        weights = Counter(enumerate_weightings(graph, max_degree).degrees)
        for d in range(max_degree + 1):
            got = graded_count(glued.hrep, glued.grading, d)
            rep.check(f"{name} degree {d} cone vs oracle", got, oracle[d])
            rep.check(f"{name} degree {d} cone vs weightings", got, weights[d])
    return rep


@_timed
def bz_typea(max_coord=3):
    """BZ triangles, nice-word tensor cones and the oracle agree for SL2 and SL3."""
    rep = SuiteReport("bz-typea")
    for m in (2, 3):
        datum = build_root_datum(f"A{m - 1}")
        cone = tensor3_cone(datum, nice_word(m))
        for ws in itertools.product(list(_box(m - 1, max_coord)), repeat=3):
            bz = count_points(bz_fiber(m, ws))
            rep.check(f"SL{m} {ws} bz vs tensor3", bz, count_points(tensor3_fiber(datum, cone, *ws)))
            rep.check(f"SL{m} {ws} bz vs oracle", bz, invariant_dimension(datum, list(ws)))
    rep.check("SL3 adjoint cube", count_points(bz_fiber(3, [(1, 1)] * 3)), 2)
    return rep


@_timed
def sl2_generation(max_degree=8):
    rep = SuiteReport("sl2-generation")
    for name, graph in (("theta", theta_graph()), ("dumbbell", dumbbell_graph())):
        ok, witness = verify_generation(graph, max_degree)
        rep.check(f"{name} up to degree {max_degree} (witness {witness})", ok, True)
    return rep


ORACLE_TYPES = ("A1", "A2", "B2", "C2", "G2", "A3")


@_timed
def oracle_consistency(pairs=50, max_coord=3, seed=0, types=ORACLE_TYPES):
    """Dimension bookkeeping of tensor products and symmetries of invariant dimensions."""
    rep = SuiteReport("oracle-consistency")
    rng = random.Random(seed)
    for label in types:
        datum = build_root_datum(label)
        r = datum.rank
        for _ in range(pairs):
            lam = tuple(rng.randint(0, max_coord) for _ in range(r))
            mu = tuple(rng.randint(0, max_coord) for _ in range(r))
            dec = tensor_decompose(datum, lam, mu)
            total = sum(m * weyl_dimension(datum, nu) for nu, m in dec.items())
            rep.check(f"{label} dim {lam} x {mu}", total, weyl_dimension(datum, lam) * weyl_dimension(datum, mu))
            rep.check(f"{label} {lam} x {mu} commutes", dec, tensor_decompose(datum, mu, lam))
            # pick a component so the triple has invariants
            nu = dual_weight(datum, sorted(dec)[rng.randrange(len(dec))])
            triple = [lam, mu, nu]
            base = invariant_dimension(datum, triple)
            rep.check(f"{label} inv {triple} positive", base > 0, True)
            for perm in itertools.permutations(triple):
                if list(perm) != triple:
                    rep.check(f"{label} inv {list(perm)}", invariant_dimension(datum, list(perm)), base)
            duals = [dual_weight(datum, w) for w in triple]
            rep.check(f"{label} inv dual {duals}", invariant_dimension(datum, duals), base)
    return rep


SUITES = {
    "string-dims": string_dims,
    "tensor3": tensor3,
    "g2-sp4-regression": regression,
    "glue-independence": glue_independence,
    "graph-consistency": graph_consistency,
    "bz-typea": bz_typea,
    "sl2-generation": sl2_generation,
    "oracle-consistency": oracle_consistency,
}
