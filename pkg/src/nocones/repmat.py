"""Exact weight-basis modules and i-trails.

Irreducible highest-weight modules are built weight space by weight space:
the space of weight nu is spanned by the vectors f_i w with w of weight
nu + alpha_i, and a vector below the top is zero exactly when every e_j kills
it. Since e_j f_i w = f_i e_j w + [i == j] (nu + alpha_i)(H_i) w only involves
spaces that are already built, the kernel can be detected with exact
arithmetic and the operator blocks read off directly.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .cartan import RootDatum, apply_word, build_root_datum, is_dominant
from .exact import IncrementalBasis, is_zero_vec

__all__ = [
    "WeightModule",
    "ITrail",
    "highest_weight_module",
    "dual_fundamental_rep",
    "composition_nonzero",
    "enumerate_i_trails",
]


def _add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


class WeightModule:
    """A finite-dimensional module with exact Chevalley generator blocks.

    ``raise_blocks[i][mu]`` is the matrix of e_i from the mu space to the
    mu + alpha_i space (list of rows, columns index the basis of the mu
    space); ``lower_blocks`` likewise for f_i.
    """

    def __init__(self, datum, highest, spaces, raise_blocks, lower_blocks):
        self.datum = datum
        self.highest = tuple(highest)
        self.spaces = spaces  # weight -> dimension, in construction order
        self.raise_blocks = raise_blocks
        self.lower_blocks = lower_blocks
        offsets = {}
        n = 0
        for mu, d in spaces.items():
            offsets[mu] = n
            n += d
        self.offsets = offsets
        self.dim = n

    @property
    def weights(self):
        """Weight of every basis vector, in basis order."""
        out = []
        for mu, d in self.spaces.items():
            out.extend([mu] * d)
        return out

    def multiplicity(self, mu):
        return self.spaces.get(tuple(mu), 0)

    def alpha(self, i):
        return self.datum.root(i)

    def raise_block(self, i, mu):
        return self.raise_blocks[i].get(mu)

    def raise_matrix(self, i):
        """e_i as a dense dim x dim matrix of Fractions."""
        return self._dense(i, self.raise_blocks[i], 1)

    def lower_matrix(self, i):
        return self._dense(i, self.lower_blocks[i], -1)

    def _dense(self, i, blocks, sign):
        n = self.dim
        a = self.alpha(i)
        m = [[Fraction(0)] * n for _ in range(n)]
        for mu, block in blocks.items():
            target = tuple(x + sign * y for x, y in zip(mu, a))
            r0, c0 = self.offsets[target], self.offsets[mu]
            for r, row in enumerate(block):
                for c, x in enumerate(row):
                    m[r0 + r][c0 + c] = x
        return m

    def apply_raise(self, i, mu, vectors):
        """Apply e_i to vectors (columns) in the mu space; returns (weight, vectors)."""
        target = _add(mu, self.alpha(i))
        block = self.raise_blocks[i].get(mu)
        if block is None:
            return target, None
        out = [[sum(row[k] * v[k] for k in range(len(v)) if row[k] and v[k]) for row in block]
               for v in vectors]
        return target, out


def highest_weight_module(datum, lam):
    """Irreducible module of highest weight lam for ``datum``."""
    return _hw_module(datum, tuple(lam))


@lru_cache(maxsize=None)
def _hw_module(datum, lam):
    if not is_dominant(lam):
        raise ValueError(f"highest weight {lam} is not dominant")
    r = datum.rank
    alphas = [datum.root(i) for i in range(r)]
    spaces = {lam: 1}
    E = [dict() for _ in range(r)]  # E[j][mu]: block mu -> mu + alpha_j
    F = [dict() for _ in range(r)]  # F[i][mu]: block mu -> mu - alpha_i

    def f_apply(i, mu, vec):
        block = F[i].get(mu)
        if block is None:
            return None
        return [sum(row[k] * vec[k] for k in range(len(vec)) if row[k] and vec[k]) for row in block]

    def e_apply(j, mu, vec):
        block = E[j].get(mu)
        if block is None:
            return None
        return [sum(row[k] * vec[k] for k in range(len(vec)) if row[k] and vec[k]) for row in block]

    layer = [lam]
    while layer:
        targets = []
        seen = set()
        for mu in layer:
            for i in range(r):
                nu = _sub(mu, alphas[i])
                if nu not in seen and nu not in spaces:
                    seen.add(nu)
                    targets.append(nu)
        new_layer = []
        for nu in targets:
            ups = [j for j in range(r) if _add(nu, alphas[j]) in spaces]
            seg_len = [spaces[_add(nu, alphas[j])] for j in ups]
            total = sum(seg_len)
            cands = []  # (i, b, stacked image)
            for i in ups:
                mu = _add(nu, alphas[i])
                for b in range(spaces[mu]):
                    w = [Fraction(int(k == b)) for k in range(spaces[mu])]
                    stacked = []
                    for j in ups:
                        up = _add(nu, alphas[j])
                        img = [Fraction(0)] * spaces[up]
                        ew = e_apply(j, mu, w)
                        if ew is not None:
                            fe = f_apply(i, _add(mu, alphas[j]), ew)
                            if fe is not None:
                                img = [x + y for x, y in zip(img, fe)]
                        if i == j:
                            h = mu[i]
                            img = [x + h * y for x, y in zip(img, w)]
                        stacked.extend(img)
                    cands.append((i, b, stacked))
            basis = IncrementalBasis(total)
            chosen = []
            for i, b, vec in cands:
                if basis.add(vec) is not None:
                    chosen.append(vec)
            d = len(chosen)
            if d == 0:
                continue
            spaces[nu] = d
            new_layer.append(nu)
            # e_j blocks out of nu: rows of each segment of the chosen images
            start = 0
            for j, ln in zip(ups, seg_len):
                E[j][nu] = [[chosen[c][start + k] for c in range(d)] for k in range(ln)]
                start += ln
            # f_i blocks into nu: coordinates of each candidate in the chosen basis
            for i in ups:
                mu = _add(nu, alphas[i])
                cols = []
                for ci, b, vec in cands:
                    if ci == i:
                        cols.append(basis.coordinates(vec))
                F[i][mu] = [[cols[b][k] for b in range(spaces[mu])] for k in range(d)]
        layer = new_layer
    return WeightModule(datum, lam, spaces, E, F)


def dual_fundamental_rep(datum, j):
    """V(omega_j) of the Langlands dual group (j is 1-based)."""
    if not 1 <= j <= datum.rank:
        raise ValueError(f"node {j} out of range for rank {datum.rank}")
    dual = datum.transpose()
    lam = tuple(int(k == j - 1) for k in range(dual.rank))
    return highest_weight_module(dual, lam)


def composition_nonzero(module, sequence, source_weight):
    """Whether e_{i_1}^{c_1} o ... o e_{i_l}^{c_l} is nonzero on the source weight space.

    ``sequence`` lists (i_k, c_k) with 1-based node indices; the rightmost
    factor acts first.
    """
    mu = tuple(source_weight)
    d = module.multiplicity(mu)
    if d == 0:
        return False
    vecs = [[Fraction(int(a == b)) for a in range(d)] for b in range(d)]
    for i, c in reversed(list(sequence)):
        for _ in range(c):
            mu, vecs = module.apply_raise(i - 1, mu, vecs)
            if vecs is None or all(is_zero_vec(v) for v in vecs):
                return False
    return True


@dataclass(frozen=True)
class ITrail:
    weights: tuple  # gamma_0 = source top, ..., gamma_N = bottom
    exponents: tuple
    twice_d: tuple  # 2 d_k, integers

    @property
    def d(self):
        return tuple(Fraction(x, 2) for x in self.twice_d)

    def to_json(self):
        return {
            "weights": [list(w) for w in self.weights],
            "c": list(self.exponents),
            "2d": list(self.twice_d),
        }


def enumerate_i_trails(module, gamma, eta, word):
    """All i-trails from gamma down to eta in ``module`` for the reduced word.

    Exponent vectors are explored from the last letter to the first (the
    order in which the raising operators act on the eta space); a branch is
    abandoned as soon as the image of the eta space vanishes.
    """
    gamma = tuple(gamma)
    eta = tuple(eta)
    word = tuple(word)
    datum = module.datum
    if module.multiplicity(eta) == 0 or module.multiplicity(gamma) == 0:
        return []
    if not datum.in_root_lattice(_sub(gamma, eta)):
        return []
    n = len(word)
    r = datum.rank
    # letters available at positions 1..k, used to prune unreachable targets
    avail = [set()]
    for k in range(n):
        avail.append(avail[-1] | {word[k] - 1})

    def reachable(mu, k):
        coords = datum.to_root_coords(_sub(gamma, mu))
        for idx, c in enumerate(coords):
            if c < 0 or (c > 0 and idx not in avail[k]):
                return False
        return True

    out = []
    d0 = module.multiplicity(eta)
    start = [[Fraction(int(a == b)) for a in range(d0)] for b in range(d0)]

    def rec(k, mu, vecs, chain, cs):
        # positions k+1..n have been chosen; choose c_k
        if k == 0:
            if mu == gamma:
                ws = tuple(reversed(chain))
                cc = tuple(reversed(cs))
                twice = tuple(ws[m][word[m] - 1] + ws[m + 1][word[m] - 1] for m in range(n))
                out.append(ITrail(ws, cc, twice))
            return
        i = word[k - 1] - 1
        cur_mu, cur = mu, vecs
        c = 0
        while True:
            if reachable(cur_mu, k - 1):
                rec(k - 1, cur_mu, cur, chain + [cur_mu], cs + [c])
            cur_mu, cur = module.apply_raise(i, cur_mu, cur)
            if cur is None or all(is_zero_vec(v) for v in cur):
                break
            c += 1

    if reachable(eta, n):
        rec(n, eta, start, [eta], [])
    return sorted(out, key=lambda t: t.exponents)


def fundamental_trail_sets(datum, word):
    """Trails used by the string and tensor cones, per dual fundamental weight.

    Returns a list of (j, trails from omega_j to w_0 s_j omega_j,
    trails from s_j omega_j to w_0 omega_j).
    """
    return _fundamental_trail_sets(datum, tuple(word))


@lru_cache(maxsize=None)
def _fundamental_trail_sets(datum, word):
    dual = datum.transpose()
    res = []
    for j in range(1, datum.rank + 1):
        mod = dual_fundamental_rep(datum, j)
        om = tuple(int(k == j - 1) for k in range(dual.rank))
        s_om = _sub(om, dual.root(j - 1))
        first = enumerate_i_trails(mod, om, apply_word(dual, dual.longest_word, s_om), word)
        second = enumerate_i_trails(mod, s_om, apply_word(dual, dual.longest_word, om), word)
        res.append((j, tuple(first), tuple(second)))
    return tuple(res)
