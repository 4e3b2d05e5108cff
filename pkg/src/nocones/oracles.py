"""Character-theoretic ground truth: Freudenthal, Brauer-Klimyk, invariants.

Nothing here touches cones or i-trails; every lattice-point count elsewhere
in the package is checked against these numbers.
"""

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .cartan import dual_weight, is_dominant, reflect, weyl_dimension

__all__ = [
    "CharacterTable",
    "freudenthal_multiplicities",
    "tensor_decompose",
    "invariant_dimension",
    "sl2_triple_admissible",
]


@dataclass(frozen=True)
class CharacterTable:
    datum: object
    highest: tuple
    mults: dict

    @property
    def dimension(self):
        return sum(self.mults.values())


def freudenthal_multiplicities(datum, lam):
    return _freudenthal(datum, tuple(lam))


@lru_cache(maxsize=None)
def _freudenthal(datum, lam):
    if not is_dominant(lam):
        raise ValueError(f"weight {lam} is not dominant")
    r = datum.rank
    rho = datum.rho
    # positive roots as weights (fundamental coordinates)
    proots = []
    for beta in datum.positive_roots:
        proots.append(tuple(sum(beta[j] * datum.cartan[i][j] for j in range(r)) for i in range(r)))
    lr = tuple(a + b for a, b in zip(lam, rho))
    norm_top = datum.inner(lr, lr)
    mults = {lam: 1}
    layer = [lam]
    while layer:
        cands = []
        seen = set()
        for mu in layer:
            for i in range(r):
                nu = tuple(m - c for m, c in zip(mu, datum.root(i)))
                if nu not in seen:
                    seen.add(nu)
                    cands.append(nu)
        new = []
        for nu in cands:
            num = Fraction(0)
            for a in proots:
                k = 1
                while True:
                    up = tuple(x + k * y for x, y in zip(nu, a))
                    m = mults.get(up)
                    if m is None:
                        break
                    num += m * datum.inner(up, a)
                    k += 1
            nr = tuple(a + b for a, b in zip(nu, rho))
            den = norm_top - datum.inner(nr, nr)
            if den == 0:
                # nu + rho on the Weyl orbit of lam + rho: not a weight below lam
                continue
            val = 2 * num / den
            assert val.denominator == 1
            if val > 0:
                mults[nu] = int(val)
                new.append(nu)
        layer = new
    return CharacterTable(datum, lam, mults)


def _dot_to_dominant(datum, nu):
    """Reflect nu + rho into the dominant chamber; return (sign, weight) or None on a wall."""
    x = [a + 1 for a in nu]
    sign = 1
    while True:
        if any(c == 0 for c in x):
            return None
        neg = next((i for i, c in enumerate(x) if c < 0), None)
        if neg is None:
            return sign, tuple(c - 1 for c in x)
        x = list(reflect(datum, x, neg))
        sign = -sign


def tensor_decompose(datum, lam, mu):
    """Multiset {nu: multiplicity} with V(lam) (x) V(mu) = sum of V(nu)."""
    return dict(_tensor(datum, tuple(lam), tuple(mu)))


@lru_cache(maxsize=None)
def _tensor(datum, lam, mu):
    # smaller module supplies the weights
    if weyl_dimension(datum, mu) > weyl_dimension(datum, lam):
        lam, mu = mu, lam
    out = Counter()
    for wt, m in freudenthal_multiplicities(datum, mu).mults.items():
        res = _dot_to_dominant(datum, tuple(a + b for a, b in zip(wt, lam)))
        if res is not None:
            out[res[1]] += res[0] * m
    assert all(v >= 0 for v in out.values())
    return tuple(sorted((k, v) for k, v in out.items() if v))


def invariant_dimension(datum, weights):
    """dim of G-invariants in V(l_1) (x) ... (x) V(l_n), by a left fold."""
    weights = [tuple(w) for w in weights]
    if not weights:
        return 1
    for w in weights:
        if not is_dominant(w):
            raise ValueError(f"weight {w} is not dominant")
    current = Counter({weights[0]: 1})
    for w in weights[1:-1]:
        nxt = Counter()
        for nu, m in current.items():
            for rho_, k in _tensor(datum, nu, w):
                nxt[rho_] += m * k
        current = nxt
    if len(weights) == 1:
        return current.get(tuple(0 for _ in weights[0]), 0)
    # invariants in X (x) V(l_n) = multiplicity of l_n^* in X
    return current.get(dual_weight(datum, weights[-1]), 0)


def sl2_triple_admissible(a, b, c):
    return abs(a - b) <= c <= a + b and (a + b + c) % 2 == 0
