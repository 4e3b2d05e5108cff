"""Gluing tensor cones along decorated trivalent trees and graphs.

Every internal vertex v carries a copy of the tensor cone on (lam, t, eta)
for its word. Its three incident edge slots (in edge order, a loop filling
two slots) receive the projections pi_1, pi_2, pi_3. Each edge e has a block
of weight variables ``e<k>.w1..wr``; for an edge oriented u -> v the rows
say pi_{u,e} = w_e and pi_{v,e} = w_e^*, so summing over w_e glues the two
invariant spaces along V(w_e) and its dual.

Graph file grammar (one item per line, ``#`` starts a comment)::

    tree <n>                  | graph <g>      header, n leaves or Betti number g
    <u> <v> [T] [>|<]         edge; T = spanning-tree edge, > means u->v, < means v->u
    <v>: <i1>,<i2>,...        reduced word at vertex v
    leaves: <a>,<b>,...       optional leaf order (tree mode; default order of appearance)
"""

from collections import defaultdict
from dataclasses import dataclass, field

from .cartan import build_root_datum
from .hrep import ConeHRep, product
from .string_cones import DEFAULT_CONVENTION, dual_matrix, pi_matrix, tensor3_cone

__all__ = [
    "DecorationError",
    "DecoratedGraph",
    "GluedCone",
    "parse_graph_file",
    "load_graph",
    "format_graph",
    "tree_cone",
    "tree_polytope",
    "fix_leaves",
    "glue_tree",
    "glue_graph",
    "graph_cone",
    "split_graph",
    "trivalent_refinement",
    "caterpillar",
    "theta_graph",
    "dumbbell_graph",
]


class DecorationError(ValueError):
    """A decorated graph violates one of its structural invariants."""

    def __init__(self, invariant, message):
        super().__init__(f"{invariant}: {message}")
        self.invariant = invariant


@dataclass(frozen=True)
class DecoratedGraph:
    """Vertices and edges in a fixed order plus the gluing decorations.

    ``orientations`` maps edge index -> (tail, head); ``spanning_tree`` is a
    set of edge indices (graph mode); ``words`` maps vertex -> reduced word.
    """

    mode: str
    vertices: tuple
    edges: tuple
    leaves: tuple = ()
    spanning_tree: frozenset = frozenset()
    orientations: dict = field(default_factory=dict, compare=False)
    words: dict = field(default_factory=dict, compare=False)
    declared: int = None

    def degree(self, v):
        return sum((a == v) + (b == v) for a, b in self.edges)

    def incident(self, v):
        """Slots at v in edge order: list of (edge index, end) with end 0 = first endpoint."""
        out = []
        for k, (a, b) in enumerate(self.edges):
            if a == v:
                out.append((k, 0))
            if b == v:
                out.append((k, 1))
        return out

    @property
    def internal_vertices(self):
        leaves = set(self.leaves)
        return tuple(v for v in self.vertices if v not in leaves)

    @property
    def betti(self):
        return len(self.edges) - len(self.vertices) + 1

    def orientation(self, k):
        return self.orientations.get(k, self.edges[k])

    def with_words(self, words=None, default=None):
        """Copy with words replaced/filled; ``default`` fills vertices without one."""
        new = dict(self.words if words is None else words)
        if default is not None:
            for v in self.internal_vertices:
                new.setdefault(v, tuple(default))
        return DecoratedGraph(self.mode, self.vertices, self.edges, self.leaves,
                              self.spanning_tree, dict(self.orientations), new, self.declared)

    def relabeled(self, vertex_order=None, edge_order=None):
        """Same decorated graph with vertices and/or edges listed in another order."""
        verts = tuple(vertex_order) if vertex_order is not None else self.vertices
        perm = list(edge_order) if edge_order is not None else list(range(len(self.edges)))
        where = {old: new for new, old in enumerate(perm)}
        return DecoratedGraph(
            self.mode, verts, tuple(self.edges[k] for k in perm), self.leaves,
            frozenset(where[k] for k in self.spanning_tree),
            {where[k]: o for k, o in self.orientations.items()},
            dict(self.words), self.declared,
        )

    def validate(self, datum=None, need_words=True):
        if self.mode not in ("tree", "graph"):
            raise DecorationError("mode", f"unknown mode {self.mode!r}")
        vs = set(self.vertices)
        if len(vs) != len(self.vertices):
            raise DecorationError("vertices", "duplicate vertex")
        for a, b in self.edges:
            if a not in vs or b not in vs:
                raise DecorationError("edges", f"edge ({a}, {b}) has an unknown endpoint")
        if not _connected(self.vertices, self.edges):
            raise DecorationError("connected", "graph is not connected")
        if self.mode == "tree":
            self._validate_tree()
        else:
            self._validate_graph()
        for v in self.internal_vertices if need_words else ():
            if v not in self.words:
                raise DecorationError("words", f"vertex {v} has no reduced word")
        if datum is not None:
            from .cartan import is_reduced_word
            for v, w in self.words.items():
                if not is_reduced_word(datum, tuple(w)):
                    raise DecorationError("words", f"{tuple(w)} at {v} is not a reduced word for w0")
        return self

    def _validate_tree(self):
        if len(self.edges) != len(self.vertices) - 1:
            raise DecorationError("acyclic", "a tree needs |E| = |V| - 1")
        deg1 = [v for v in self.vertices if self.degree(v) == 1]
        if sorted(map(str, deg1)) != sorted(map(str, self.leaves)) or len(set(self.leaves)) != len(self.leaves):
            raise DecorationError("leaves", "leaves must be exactly the degree-1 vertices")
        for v in self.internal_vertices:
            if self.degree(v) != 3:
                raise DecorationError("trivalent", f"internal vertex {v} has degree {self.degree(v)}")
        if not self.internal_vertices:
            raise DecorationError("trivalent", "a tree needs at least one internal vertex")
        if self.declared is not None and self.declared != len(self.leaves):
            raise DecorationError("leaves", f"declared {self.declared} leaves, found {len(self.leaves)}")

    def _validate_graph(self):
        if self.leaves:
            raise DecorationError("leaves", "graph mode allows no leaves")
        for v in self.vertices:
            if self.degree(v) != 3:
                raise DecorationError("trivalent", f"vertex {v} has degree {self.degree(v)}")
        if self.declared is not None and self.betti != self.declared:
            raise DecorationError("betti", f"declared g = {self.declared}, graph has {self.betti}")
        tree = sorted(self.spanning_tree)
        if any(not 0 <= k < len(self.edges) for k in tree):
            raise DecorationError("spanning_tree", "edge index out of range")
        if len(tree) != len(self.vertices) - 1 or not _connected(self.vertices, [self.edges[k] for k in tree]):
            raise DecorationError("spanning_tree", "marked edges are not a spanning tree")
        others = set(range(len(self.edges))) - set(tree)
        if set(self.orientations) != others:
            raise DecorationError("orientations", "orientations must cover exactly the non-tree edges")
        for k, (a, b) in self.orientations.items():
            if {a, b} != set(self.edges[k]):
                raise DecorationError("orientations", f"edge {k} oriented between wrong endpoints")


def _connected(vertices, edges):
    if not vertices:
        return False
    adj = defaultdict(set)
    for a, b in edges:
        adj[a].add(b)
        adj[b].add(a)
    seen = {vertices[0]}
    stack = [vertices[0]]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(set(vertices))


def parse_graph_file(text):
    """Parse the text format above. Raises ValueError on malformed lines."""
    mode = declared = None
    vertices, edges, tree, orient, words = [], [], set(), {}, {}
    leaf_order = None

    def touch(v):
        if v not in vertices:
            vertices.append(v)

    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if mode is None:
            parts = line.split()
            if len(parts) != 2 or parts[0] not in ("tree", "graph") or not parts[1].isdigit():
                raise ValueError(f"line {lineno}: expected header 'tree n' or 'graph g'")
            mode, declared = parts[0], int(parts[1])
            continue
        if ":" in line:
            key, val = (s.strip() for s in line.split(":", 1))
            items = [s.strip() for s in val.split(",") if s.strip()]
            if key == "leaves":
                leaf_order = items
                continue
            try:
                words[key] = tuple(int(s) for s in items)
            except ValueError:
                raise ValueError(f"line {lineno}: bad word {val!r}") from None
            continue
        parts = line.split()
        if len(parts) < 2:
            raise ValueError(f"line {lineno}: edge needs two endpoints")
        u, v, flags = parts[0], parts[1], parts[2:]
        k = len(edges)
        for f in flags:
            if f == "T":
                tree.add(k)
            elif f == ">":
                orient[k] = (u, v)
            elif f == "<":
                orient[k] = (v, u)
            else:
                raise ValueError(f"line {lineno}: unknown edge flag {f!r}")
        touch(u)
        touch(v)
        edges.append((u, v))
    if mode is None:
        raise ValueError("missing header")
    leaves = ()
    if mode == "tree":
        deg = defaultdict(int)
        for a, b in edges:
            deg[a] += 1
            deg[b] += 1
        leaves = tuple(leaf_order) if leaf_order is not None else tuple(v for v in vertices if deg[v] == 1)
    elif leaf_order:
        raise ValueError("leaves: only allowed in tree mode")
    return DecoratedGraph(mode, tuple(vertices), tuple(edges), leaves, frozenset(tree), orient, words, declared)


def format_graph(graph):
    """Inverse of parse_graph_file (up to comments and whitespace)."""
    head = len(graph.leaves) if graph.mode == "tree" else graph.betti
    lines = [f"{graph.mode} {head}"]
    for k, (a, b) in enumerate(graph.edges):
        flags = []
        if k in graph.spanning_tree:
            flags.append("T")
        if k in graph.orientations:
            flags.append(">" if graph.orientations[k] == (a, b) else "<")
        lines.append(" ".join([str(a), str(b)] + flags))
    if graph.mode == "tree":
        lines.append("leaves: " + ",".join(map(str, graph.leaves)))
    for v in graph.vertices:
        if v in graph.words:
            lines.append(f"{v}: " + ",".join(map(str, graph.words[v])))
    return "\n".join(lines) + "\n"


def load_graph(path):
    with open(path) as fh:
        return parse_graph_file(fh.read())


@dataclass
class GluedCone:
    """A glued system plus the bookkeeping needed to read it back.

    vertex_vars: vertex -> names of its (lam, t, eta) block.
    edge_vars: edge index -> names of its weight block.
    incidence: list of (edge, vertex, slot, dualized) for every matched projection.
    """

    hrep: ConeHRep
    datum: object
    graph: DecoratedGraph
    vertex_vars: dict
    edge_vars: dict
    incidence: list
    leaf_edges: tuple = ()

    @property
    def grading(self):
        """Total edge weight: every coordinate of every edge block once."""
        row = [0] * self.hrep.nvars
        for names in self.edge_vars.values():
            for nm in names:
                row[self.hrep.index(nm)] = 1
        return tuple(row)

    def restrict(self, point, v):
        """The (lam, t, eta) block of a point at vertex v."""
        return tuple(point[self.hrep.index(nm)] for nm in self.vertex_vars[v])

    def edge_weight(self, point, k):
        return tuple(point[self.hrep.index(nm)] for nm in self.edge_vars[k])


def _edge_names(k, r):
    return tuple(f"e{k}.w{i + 1}" for i in range(r))


def _tensor_local(datum, conv):
    def local(v, word):
        cone = tensor3_cone(datum, word, conv)
        return cone, [pi_matrix(datum, cone.meta["word"], s) for s in (1, 2, 3)]

    return local


def _glue(datum, graph, local):
    """Product of vertex cones, edge blocks and the matching rows.

    ``local(v, word)`` returns the vertex cone and its three projection
    matrices (rank rows each, one column per local variable).
    """
    r = datum.rank
    internal = graph.internal_vertices
    blocks = [local(v, graph.words.get(v)) for v in internal]
    cones = [c for c, _ in blocks]
    prefixes = [f"v{v}." for v in internal]
    base = product(cones, prefixes)
    edge_vars = {k: _edge_names(k, r) for k in range(len(graph.edges))}
    names = base.var_names + tuple(nm for k in sorted(edge_vars) for nm in edge_vars[k])
    nv = len(names)
    pad = nv - base.nvars
    ineqs = [row[:-1] + (0,) * pad + row[-1:] for row in base.ineqs]
    eqs = [row[:-1] + (0,) * pad + row[-1:] for row in base.eqs]
    for k in edge_vars:
        for nm in edge_vars[k]:
            row = [0] * (nv + 1)
            row[names.index(nm)] = 1
            ineqs.append(tuple(row))
    D = dual_matrix(datum)
    index = {nm: i for i, nm in enumerate(names)}
    incidence = []
    vertex_vars = {}
    leaves = set(graph.leaves)
    for v, pre, (cone, pis) in zip(internal, prefixes, blocks):
        vertex_vars[v] = tuple(pre + nm for nm in cone.var_names)
        slots = graph.incident(v)
        if len(slots) != 3:
            raise DecorationError("trivalent", f"vertex {v} has {len(slots)} slots")
        for slot, (k, end) in enumerate(slots, 1):
            M = pis[slot - 1]
            a, b = graph.edges[k]
            other = b if end == 0 else a
            tail, _head = graph.orientation(k)
            dualize = other not in leaves and tail != v
            for i in range(r):
                row = [0] * (nv + 1)
                for c, coef in enumerate(M[i]):
                    if coef:
                        row[index[pre + cone.var_names[c]]] += coef
                for m in range(r):
                    coef = D[i][m] if dualize else int(i == m)
                    if coef:
                        row[index[edge_vars[k][m]]] -= coef
                eqs.append(tuple(row))
            incidence.append((k, v, slot, dualize))
    hrep = ConeHRep(names, tuple(ineqs), tuple(eqs))
    leaf_edges = tuple(next(k for k, (a, b) in enumerate(graph.edges) if leaf in (a, b)) for leaf in graph.leaves)
    return GluedCone(hrep, datum, graph, vertex_vars, edge_vars, incidence, leaf_edges)


def _datum(datum_or_label):
    return build_root_datum(datum_or_label) if isinstance(datum_or_label, str) else datum_or_label


def glue_tree(datum, tree, local, need_words=True):
    """Glue arbitrary vertex cones (see ``_glue``) along a trivalent tree."""
    if tree.mode != "tree":
        raise DecorationError("mode", "expected a tree")
    tree.validate(datum if need_words else None, need_words)
    out = _glue(datum, tree, local)
    out.hrep.meta.update(kind="tree", type=datum.type_label, leaves=len(tree.leaves))
    return out


def tree_cone(datum, tree, conv=DEFAULT_CONVENTION):
    """Glued cone of a decorated trivalent tree; leaf-edge weights stay free."""
    datum = _datum(datum)
    return glue_tree(datum, tree, _tensor_local(datum, conv))


def fix_leaves(glued, weights):
    """Polytope of a glued tree with the leaf weights fixed."""
    tree = glued.graph
    weights = [tuple(w) for w in weights]
    if len(weights) != len(tree.leaves):
        raise ValueError(f"{len(weights)} weights for {len(tree.leaves)} leaves")
    fix = {}
    for k, w in zip(glued.leaf_edges, weights):
        if len(w) != glued.datum.rank or any(x < 0 for x in w):
            raise ValueError(f"{w} is not a dominant weight of rank {glued.datum.rank}")
        fix.update(zip(glued.edge_vars[k], w))
    return glued.hrep.fix(fix)


def tree_polytope(datum, tree, weights, conv=DEFAULT_CONVENTION):
    """The tree cone with leaf weights fixed, as a ConeHRep polytope."""
    return fix_leaves(tree_cone(datum, tree, conv), weights)


def split_graph(graph):
    """Cut every non-tree edge into two leaf half-edges.

    Returns (tree, pairs) where pairs lists, per cut edge, the tree edge
    indices (tail half, head half).
    """
    vertices = list(graph.vertices)
    edges, pairs, leaves = [], [], []
    orient = {}
    for k, (a, b) in enumerate(graph.edges):
        if k in graph.spanning_tree:
            orient[len(edges)] = graph.orientation(k)
            edges.append((a, b))
            continue
        tail, head = graph.orientation(k)
        lt, lh = f"{k}~tail", f"{k}~head"
        vertices += [lt, lh]
        leaves += [lt, lh]
        pairs.append((len(edges), len(edges) + 1))
        edges.append((tail, lt))
        edges.append((head, lh))
    tree = DecoratedGraph("tree", tuple(vertices), tuple(edges), tuple(leaves),
                          frozenset(), orient, dict(graph.words))
    return tree, pairs


def graph_cone(datum, graph, conv=DEFAULT_CONVENTION):
    """Cone of a decorated graph: split, glue the tree, pair the halves by duality.

    Only the tail half of a cut edge enters the grading, so each original
    edge is counted once.
    """
    datum = _datum(datum)
    return glue_graph(datum, graph, _tensor_local(datum, conv))


def glue_graph(datum, graph, local, need_words=True):
    if graph.mode != "graph":
        raise DecorationError("mode", "expected a graph")
    graph.validate(datum if need_words else None, need_words)
    tree, pairs = split_graph(graph)
    glued = _glue(datum, tree, local)
    r = datum.rank
    D = dual_matrix(datum)
    names = glued.hrep.var_names
    nv = len(names)
    eqs = []
    for ft, fh in pairs:
        # weight on the tail half is the dual of the weight on the head half
        for i in range(r):
            row = [0] * (nv + 1)
            row[names.index(glued.edge_vars[ft][i])] += 1
            for m in range(r):
                if D[i][m]:
                    row[names.index(glued.edge_vars[fh][m])] -= D[i][m]
            eqs.append(tuple(row))
    hrep = glued.hrep.with_rows(eqs=eqs)
    hrep.meta.update(kind="graph", type=datum.type_label, genus=graph.betti)
    edge_vars = {k: v for k, v in glued.edge_vars.items() if all(k != fh for _, fh in pairs)}
    return GluedCone(hrep, datum, graph, glued.vertex_vars, edge_vars, glued.incidence)


def trivalent_refinement(tree):
    """Make a tree trivalent: split high-degree vertices into caterpillars,
    contract degree-2 vertices. New vertices inherit the word of their origin."""
    vertices = list(tree.vertices)
    edges = list(tree.edges)
    words = dict(tree.words)
    leaves = set(tree.leaves)

    def deg(v):
        return sum((a == v) + (b == v) for a, b in edges)

    changed = True
    while changed:
        changed = False
        for v in list(vertices):
            if v in leaves:
                continue
            d = deg(v)
            if d == 2:
                ks = [k for k, e in enumerate(edges) if v in e]
                (a1, b1), (a2, b2) = edges[ks[0]], edges[ks[1]]
                x = a1 if b1 == v else b1
                y = a2 if b2 == v else b2
                for k in sorted(ks, reverse=True):
                    del edges[k]
                edges.append((x, y))
                vertices.remove(v)
                words.pop(v, None)
                changed = True
                break
            if d > 3:
                ks = [k for k, e in enumerate(edges) if v in e]
                new = f"{v}'"
                while new in vertices:
                    new += "'"
                vertices.append(new)
                if v in words:
                    words[new] = words[v]
                # keep two edges at v, move the rest to the new vertex
                for k in ks[2:]:
                    a, b = edges[k]
                    edges[k] = (new, b) if a == v else (a, new)
                edges.append((v, new))
                changed = True
                break
    order = [v for v in tree.leaves if v in vertices]
    return DecoratedGraph("tree", tuple(vertices), tuple(edges), tuple(order), frozenset(), {}, words)


def caterpillar(n, word=None):
    """Tree with n >= 3 leaves 0..n-1 hung off a path of internal vertices a1..a(n-2)."""
    if n < 3:
        raise ValueError("need at least 3 leaves")
    inner = [f"a{i}" for i in range(1, n - 1)]
    leaves = [f"L{i}" for i in range(n)]
    edges = [(leaves[0], inner[0]), (leaves[1], inner[0])]
    for i in range(1, n - 2):
        edges.append((inner[i - 1], inner[i]))
        edges.append((leaves[i + 1], inner[i]))
    edges.append((leaves[n - 1], inner[-1]))
    words = {v: tuple(word) for v in inner} if word is not None else {}
    return DecoratedGraph("tree", tuple(leaves + inner), tuple(edges), tuple(leaves), frozenset(), {}, words, n)


def theta_graph(word=None):
    edges = (("p", "q"), ("p", "q"), ("p", "q"))
    words = {"p": tuple(word), "q": tuple(word)} if word is not None else {}
    return DecoratedGraph("graph", ("p", "q"), edges, (), frozenset([0]),
                          {1: ("p", "q"), 2: ("q", "p")}, words, 2)


def dumbbell_graph(word=None):
    edges = (("p", "p"), ("p", "q"), ("q", "q"))
    words = {"p": tuple(word), "q": tuple(word)} if word is not None else {}
    return DecoratedGraph("graph", ("p", "q"), edges, (), frozenset([1]),
                          {0: ("p", "p"), 2: ("q", "q")}, words, 2)
