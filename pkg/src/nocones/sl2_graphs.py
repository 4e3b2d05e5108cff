"""Admissible SL2 edge weightings of trivalent graphs and their generation."""

import itertools
from dataclasses import dataclass

from .lattice import LatticePointSet, check_generation
from .oracles import sl2_triple_admissible

__all__ = [
    "EdgeWeighting",
    "vertex_triples",
    "is_admissible",
    "enumerate_weightings",
    "small_generators",
    "verify_generation",
]


@dataclass(frozen=True)
class EdgeWeighting:
    graph: object
    w: tuple

    @property
    def degree(self):
        return sum(self.w)

    @property
    def admissible(self):
        return is_admissible(self.graph, self.w)


def vertex_triples(graph, w):
    """Incident values at each vertex; a loop contributes its value twice."""
    w = tuple(w)
    if len(w) != len(graph.edges):
        raise ValueError(f"weighting has {len(w)} values for {len(graph.edges)} edges")
    out = {}
    for v in graph.internal_vertices:
        out[v] = tuple(w[k] for k, _end in graph.incident(v))
    return out


def is_admissible(graph, w):
    if any(x < 0 for x in w):
        return False
    for v, vals in vertex_triples(graph, w).items():
        if len(vals) != 3:
            raise ValueError(f"vertex {v} is not trivalent")
        if not sl2_triple_admissible(*vals):
            return False
    return True


def _names(graph):
    return tuple(f"e{k}" for k in range(len(graph.edges)))


def enumerate_weightings(graph, max_degree):
    """All admissible weightings of total weight at most ``max_degree``."""
    n = len(graph.edges)
    pts = []
    for w in itertools.product(range(max_degree + 1), repeat=n):
        if sum(w) <= max_degree and is_admissible(graph, w):
            pts.append(w)
    pts.sort()
    return LatticePointSet(_names(graph), tuple(pts), grading=(1,) * n,
                           degrees=tuple(sum(p) for p in pts))


def small_generators(graph):
    """Admissible weightings with every value at most 2, zero included."""
    n = len(graph.edges)
    pts = sorted(w for w in itertools.product(range(3), repeat=n) if is_admissible(graph, w))
    return LatticePointSet(_names(graph), tuple(pts))


def verify_generation(graph, max_degree):
    """(True, None) if every admissible weighting up to the degree is a sum of small ones."""
    pts = enumerate_weightings(graph, max_degree)
    gens = small_generators(graph)
    return check_generation(pts, gens, member=lambda w: is_admissible(graph, w))
