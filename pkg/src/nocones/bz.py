"""Berenstein-Zelevinsky triangles for SL_m and quilts glued from them.

Indexing scheme. The triangle is tiled by small upward triangles U(r, c),
r = 0..m-2, c = 0..r, each carrying three entries (top, bl, br). Entry
names are ``T{r}.{c}.{corner}``. Between U(r-1, c), U(r, c) and U(r, c+1)
sits a hexagon with cyclic vertices

    U(r-1,c).bl, U(r-1,c).br, U(r,c+1).top, U(r,c+1).bl, U(r,c).br, U(r,c).top

and opposite pairs of its sides have equal sums. The boundary is read
clockwise starting at the bottom-left corner: the left side bottom to top,
the right side top to bottom, the bottom side right to left. Each side has
2(m-1) entries and the k-th fundamental coordinate of its weight is the sum
of entries 2k-1 and 2k.
"""

from dataclasses import dataclass

from .cartan import build_root_datum
from .gluing import fix_leaves, glue_graph, glue_tree
from .hrep import ConeHRep
from .lattice import count_points, graded_count

__all__ = [
    "BZTriangle",
    "bz_entries",
    "bz_hexagons",
    "bz_sides",
    "bz_cone",
    "bz_boundary",
    "bz_pi_matrices",
    "bz_fiber",
    "nice_word",
    "quilt_cone",
    "quilt_count",
]

CORNERS = ("top", "bl", "br")


def _check_m(m):
    if int(m) != m or m < 2:
        raise ValueError(f"need m >= 2, got {m}")
    return int(m)


def bz_entries(m):
    m = _check_m(m)
    return tuple((r, c, k) for r in range(m - 1) for c in range(r + 1) for k in CORNERS)


def _name(e):
    r, c, k = e
    return f"T{r}.{c}.{k}"


def bz_hexagons(m):
    m = _check_m(m)
    out = []
    for r in range(1, m - 1):
        for c in range(r):
            out.append(((r - 1, c, "bl"), (r - 1, c, "br"), (r, c + 1, "top"),
                        (r, c + 1, "bl"), (r, c, "br"), (r, c, "top")))
    return out


def bz_sides(m):
    """The three boundary sides as entry lists, clockwise."""
    m = _check_m(m)
    left, right, bottom = [], [], []
    for r in range(m - 2, -1, -1):
        left += [(r, 0, "bl"), (r, 0, "top")]
    for r in range(m - 1):
        right += [(r, r, "top"), (r, r, "br")]
    for c in range(m - 2, -1, -1):
        bottom += [(m - 2, c, "br"), (m - 2, c, "bl")]
    return left, right, bottom


@dataclass(frozen=True)
class BZTriangle:
    m: int
    entries: dict

    def __post_init__(self):
        if set(self.entries) != set(bz_entries(self.m)):
            raise ValueError("entries do not match the diagram")
        if any(v < 0 for v in self.entries.values()):
            raise ValueError("entries must be nonnegative")

    @property
    def satisfies_hexagons(self):
        e = self.entries
        return all(e[h[0]] + e[h[1]] == e[h[3]] + e[h[4]] and e[h[1]] + e[h[2]] == e[h[4]] + e[h[5]]
                   for h in bz_hexagons(self.m))

    def to_json(self):
        return {"m": self.m, "entries": {_name(k): v for k, v in sorted(self.entries.items())}}

    @classmethod
    def from_point(cls, m, point):
        return cls(m, dict(zip(bz_entries(m), point)))


def bz_cone(m):
    """Nonnegativity plus the two independent hexagon equalities per hexagon."""
    ents = bz_entries(m)
    idx = {e: i for i, e in enumerate(ents)}
    n = len(ents)
    ineqs = [tuple(int(i == j) for j in range(n)) + (0,) for i in range(n)]
    eqs = []
    for h in bz_hexagons(m):
        for a, b, c, d in ((0, 1, 3, 4), (1, 2, 4, 5)):
            row = [0] * (n + 1)
            row[idx[h[a]]] += 1
            row[idx[h[b]]] += 1
            row[idx[h[c]]] -= 1
            row[idx[h[d]]] -= 1
            eqs.append(tuple(row))
    cone = ConeHRep(tuple(_name(e) for e in ents), tuple(ineqs), tuple(eqs))
    cone.meta.update(kind="bz", m=m)
    return cone


def bz_pi_matrices(m):
    """Three (m-1) x N matrices reading the boundary weights."""
    ents = bz_entries(m)
    idx = {e: i for i, e in enumerate(ents)}
    out = []
    for side in bz_sides(m):
        M = []
        for k in range(m - 1):
            row = [0] * len(ents)
            row[idx[side[2 * k]]] += 1
            row[idx[side[2 * k + 1]]] += 1
            M.append(row)
        out.append(M)
    return out


def bz_boundary(T):
    """(pi_1, pi_2, pi_3) of a triangle, as SL_m weights."""
    point = [T.entries[e] for e in bz_entries(T.m)]
    return tuple(tuple(sum(a * x for a, x in zip(row, point)) for row in M) for M in bz_pi_matrices(T.m))


def bz_fiber(m, weights):
    """Triangles with prescribed boundary weights (pi_1, pi_2, pi_3)."""
    cone = bz_cone(m)
    n = cone.nvars
    eqs = []
    for M, w in zip(bz_pi_matrices(m), weights):
        if len(w) != m - 1:
            raise ValueError(f"{w} is not an SL_{m} weight")
        for row, val in zip(M, w):
            eqs.append(tuple(row) + (int(val),))
    return cone.with_rows(eqs=eqs)


def nice_word(m):
    """Reduced word 1, 2 1, 3 2 1, ... for the longest element of SL_m."""
    word = []
    for k in range(1, m):
        word += list(range(k, 0, -1))
    return tuple(word)


def _bz_local(m):
    cone = bz_cone(m)
    pis = bz_pi_matrices(m)

    def local(v, word):
        return cone, pis

    return local


def quilt_cone(graph, m):
    """Glued cone of BZ triangles over a trivalent tree or graph."""
    datum = build_root_datum(f"A{_check_m(m) - 1}")
    if graph.mode == "tree":
        return glue_tree(datum, graph, _bz_local(m), need_words=False)
    return glue_graph(datum, graph, _bz_local(m), need_words=False)


def quilt_count(graph, m, weights=None, degree=None):
    """Lattice count of a quilt slice: leaf weights for trees, a total edge weight for graphs."""
    glued = quilt_cone(graph, m)
    if graph.mode == "tree":
        if weights is None:
            raise ValueError("trees need leaf weights")
        return count_points(fix_leaves(glued, weights))
    if degree is None:
        raise ValueError("graphs need a degree")
    return graded_count(glued.hrep, glued.grading, degree)
