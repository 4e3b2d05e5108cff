"""Root data, weight arithmetic and reduced words.

Weights are integer tuples in fundamental-weight coordinates, so that
``lam[i]`` is the pairing of ``lam`` with the i-th simple coroot. The Cartan
matrix is stored with ``cartan[i][j] = <alpha_j, coroot_i>``, which makes the
j-th column of the matrix the coordinate vector of the simple root alpha_j.

Node labels follow Bourbaki: in B_n the last root is short, in C_n it is long,
and in G_2 the first root is short.
"""

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

__all__ = [
    "RootDatum",
    "build_root_datum",
    "is_reduced_word",
    "dual_weight",
    "weyl_dimension",
    "compare_weights",
    "is_dominant",
    "reflect",
    "apply_word",
]


def _simple_cartan(kind, n):
    if kind == "G":
        if n != 2:
            raise ValueError("G only exists in rank 2")
        return [[2, -3], [-1, 2]]
    if kind == "A" and n < 1 or kind in "BC" and n < 2 or kind == "D" and n < 3:
        raise ValueError(f"unsupported rank {kind}{n}")
    a = [[0] * n for _ in range(n)]
    for i in range(n):
        a[i][i] = 2
    for i in range(n - 1):
        a[i][i + 1] = a[i + 1][i] = -1
    if kind == "B":
        a[n - 1][n - 2] = -2
    elif kind == "C":
        a[n - 2][n - 1] = -2
    elif kind == "D":
        a[n - 2][n - 1] = a[n - 1][n - 2] = 0
        a[n - 3][n - 1] = a[n - 1][n - 3] = -1
    elif kind != "A":
        raise ValueError(f"unsupported type {kind}")
    return a


@dataclass(frozen=True)
class RootDatum:
    """Finite root datum of a semisimple group given by its Cartan matrix.

    ``components`` lists the simple factors as ``(label, offset, rank)``;
    products are block diagonal in the order given by the label.
    """

    type_label: str
    cartan: tuple
    components: tuple = field(default=(), compare=False)

    @property
    def rank(self):
        return len(self.cartan)

    def a(self, i, j):
        return self.cartan[i][j]

    def root(self, j):
        """Simple root alpha_j in fundamental-weight coordinates."""
        return tuple(self.cartan[i][j] for i in range(self.rank))

    def transpose(self):
        """Langlands dual datum (transposed Cartan matrix)."""
        labels = []
        for lab, _, _ in self.components:
            labels.append({"B": "C", "C": "B"}.get(lab[0], lab[0]) + lab[1:])
        return RootDatum(
            "x".join(labels) if labels else self.type_label,
            tuple(zip(*self.cartan)),
            tuple((l, o, r) for l, (_, o, r) in zip(labels, self.components)),
        )

    @cached_property
    def positive_roots(self):
        """Positive roots in simple-root coordinates, sorted by height."""
        r = self.rank
        simple = [tuple(int(i == j) for i in range(r)) for j in range(r)]
        roots = set(simple)
        layer = list(simple)
        while layer:
            new = []
            for beta in layer:
                for i in range(r):
                    # alpha_i string through beta: beta - p a_i, ..., beta + q a_i
                    pairing = sum(beta[j] * self.cartan[i][j] for j in range(r))
                    p = 0
                    down = list(beta)
                    while True:
                        down[i] -= 1
                        if tuple(down) in roots:
                            p += 1
                        else:
                            break
                    q = p - pairing
                    if q > 0:
                        up = list(beta)
                        up[i] += 1
                        up = tuple(up)
                        if up not in roots:
                            roots.add(up)
                            new.append(up)
            layer = new
        return tuple(sorted(roots, key=lambda b: (sum(b), b)))

    @property
    def num_positive_roots(self):
        return len(self.positive_roots)

    @cached_property
    def positive_coroots(self):
        """Positive coroots in simple-coroot coordinates."""
        return self.transpose().positive_roots

    @cached_property
    def symmetrizer(self):
        """d_i = (alpha_i, alpha_i) / 2 with the shortest root of each factor having d = 1."""
        r = self.rank
        d = [None] * r
        for start in range(r):
            if d[start] is not None:
                continue
            comp = [start]
            d[start] = Fraction(1)
            stack = [start]
            while stack:
                i = stack.pop()
                for j in range(r):
                    if j != i and self.cartan[i][j] != 0 and d[j] is None:
                        # d_i a_ij = d_j a_ji
                        d[j] = d[i] * self.cartan[i][j] / self.cartan[j][i]
                        comp.append(j)
                        stack.append(j)
            m = min(d[j] for j in comp)
            for j in comp:
                d[j] = d[j] / m
        return tuple(d)

    @cached_property
    def weight_gram(self):
        """Gram matrix (omega_i, omega_j) for the normalised invariant form."""
        inv = _rational_inverse([[Fraction(x) for x in row] for row in self.cartan])
        r = self.rank
        # A^T G = D  =>  G = A^{-T} D
        return tuple(
            tuple(inv[j][i] * self.symmetrizer[j] for j in range(r)) for i in range(r)
        )

    def inner(self, lam, mu):
        g = self.weight_gram
        r = self.rank
        return sum(lam[i] * g[i][j] * mu[j] for i in range(r) for j in range(r) if lam[i] and mu[j])

    def to_root_coords(self, lam):
        """Express a weight as a rational combination of simple roots."""
        inv = self._cartan_inverse
        r = self.rank
        return tuple(sum(inv[j][i] * lam[i] for i in range(r)) for j in range(r))

    @cached_property
    def _cartan_inverse(self):
        return _rational_inverse([[Fraction(x) for x in row] for row in self.cartan])

    def in_root_lattice(self, lam):
        return all(c.denominator == 1 for c in self.to_root_coords(lam))

    @cached_property
    def rho(self):
        return (1,) * self.rank

    @cached_property
    def longest_word(self):
        """A reduced word for w_0 (1-based letters), found by descending from rho."""
        lam = list(self.rho)
        word = []
        while True:
            for i in range(self.rank):
                if lam[i] > 0:
                    lam = list(reflect(self, lam, i))
                    word.append(i + 1)
                    break
            else:
                break
        return tuple(reversed(word))

    def to_json(self):
        return {"type": self.type_label, "cartan": [list(r) for r in self.cartan]}


def _rational_inverse(m):
    n = len(m)
    aug = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


_LABEL = re.compile(r"^([ABCDG])(\d+)$")


def build_root_datum(type_label):
    """Root datum for labels such as ``"A2"``, ``"G2"``, ``"C2"`` or ``"A1xA1"``."""
    parts = [p.strip().upper() for p in str(type_label).replace("×", "x").split("x")]
    blocks = []
    comps = []
    offset = 0
    for p in parts:
        m = _LABEL.match(p)
        if not m:
            raise ValueError(f"unsupported type label {type_label!r}")
        kind, n = m.group(1), int(m.group(2))
        blocks.append(_simple_cartan(kind, n))
        comps.append((p, offset, n))
        offset += n
    cartan = [[0] * offset for _ in range(offset)]
    for (lab, off, n), b in zip(comps, blocks):
        for i in range(n):
            for j in range(n):
                cartan[off + i][off + j] = b[i][j]
    return RootDatum("x".join(parts), tuple(tuple(r) for r in cartan), tuple(comps))


def reflect(datum, lam, i):
    """Simple reflection s_i (0-based) on a weight in fundamental coordinates."""
    c = lam[i]
    if c == 0:
        return tuple(lam)
    return tuple(lam[k] - c * datum.cartan[k][i] for k in range(datum.rank))


def apply_word(datum, letters, lam):
    """Apply s_{i_1} ... s_{i_N} (1-based letters) to lam; the rightmost acts first."""
    lam = tuple(lam)
    for i in reversed(letters):
        lam = reflect(datum, lam, i - 1)
    return lam


def is_dominant(lam):
    return all(c >= 0 for c in lam)


def is_reduced_word(datum, letters):
    """True iff ``letters`` (1-based) is a reduced expression for w_0.

    Uses the inversion test: s_{i_1}...s_{i_N} is reduced iff every
    beta_k = s_{i_1}...s_{i_{k-1}}(alpha_{i_k}) is a positive root.
    """
    letters = tuple(letters)
    r = datum.rank
    if any(not (1 <= i <= r) for i in letters):
        return False
    if len(letters) != datum.num_positive_roots:
        return False
    for k, ik in enumerate(letters):
        beta = [0] * r
        beta[ik - 1] = 1
        for j in reversed(letters[:k]):
            j -= 1
            pairing = sum(beta[m] * datum.cartan[j][m] for m in range(r))
            beta[j] -= pairing
        if not all(b >= 0 for b in beta):
            return False
    return True


def longest_element_action(datum, lam):
    return apply_word(datum, datum.longest_word, lam)


def dual_weight(datum, lam):
    """lam* = -w_0(lam)."""
    return tuple(-c for c in longest_element_action(datum, lam))


def weyl_dimension(datum, lam):
    if not is_dominant(lam):
        raise ValueError(f"weight {tuple(lam)} is not dominant")
    num = Fraction(1)
    for cor in datum.positive_coroots:
        top = sum(c * (l + 1) for c, l in zip(cor, lam))
        bottom = sum(cor)
        num *= Fraction(top, bottom)
    assert num.denominator == 1
    return int(num)


def compare_weights(datum, lam, mu):
    """-1, 0, 1 as lam precedes, equals or follows mu in the total order.

    Simple factors are compared in label order; inside a factor weights are
    compared lexicographically by their coefficients on the simple roots,
    i.e. by their pairings with the fundamental coweights.
    """
    comps = datum.components or (("", 0, datum.rank),)
    ca = datum.to_root_coords(lam)
    cb = datum.to_root_coords(mu)
    for _, off, n in comps:
        for k in range(off, off + n):
            if ca[k] != cb[k]:
                return -1 if ca[k] < cb[k] else 1
    return 0


def weight_to_json(lam):
    return [int(c) for c in lam]
