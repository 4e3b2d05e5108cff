"""String cones, tensor-product cones and their fibers.

Variable naming: ``lam1..lamr`` and ``eta1..etar`` are weights in
fundamental coordinates, ``t1..tN`` are string parameters and ``mu1..mur``
(only in glued systems) are values of the first projection.
"""

from dataclasses import dataclass

from .cartan import dual_weight, is_reduced_word
from .hrep import ConeHRep
from .repmat import fundamental_trail_sets

__all__ = [
    "Convention",
    "DEFAULT_CONVENTION",
    "string_cone",
    "tensor3_cone",
    "tensor3_fiber",
    "string_fiber",
    "project_pi",
    "pi_matrix",
    "dual_matrix",
]


@dataclass(frozen=True)
class Convention:
    """Reading of the two families whose printed form is ambiguous.

    ceiling: "upper" gives t_k + sum_{l>k} a t_l <= lam(H_{i_k}); "lower"
        flips the inequality.
    ceiling_index: "row" uses a[i_k][i_l] = alpha_{i_l}(H_{i_k}); "col"
        uses the transpose entry a[i_l][i_k].
    eta_sign: trails s_j w_j -> w_0 w_j give sum d_k t_k >= eta_sign * eta_j.
    """

    ceiling: str = "upper"
    ceiling_index: str = "row"
    eta_sign: int = -1


# Fixed by the oracle sweep in scripts/convention_sweep.py: only this
# combination reproduces invariant dimensions for A2, C2 and G2.
DEFAULT_CONVENTION = Convention()


def _names(prefix, n):
    return [f"{prefix}{k}" for k in range(1, n + 1)]


def _check_word(datum, word):
    word = tuple(int(i) for i in word)
    if not is_reduced_word(datum, word):
        raise ValueError(f"{word} is not a reduced word for w0 in {datum.type_label}")
    return word


def _ceiling_rows(datum, word, lam_off, t_off, nvars, conv):
    rows = []
    n = len(word)
    for k in range(n):
        row = [0] * (nvars + 1)
        ik = word[k] - 1
        row[t_off + k] += 1
        for l in range(k + 1, n):
            il = word[l] - 1
            a = datum.cartan[ik][il] if conv.ceiling_index == "row" else datum.cartan[il][ik]
            row[t_off + l] += a
        row[lam_off + ik] -= 1
        if conv.ceiling == "upper":
            row = [-x for x in row]
        rows.append(tuple(row))
    return rows


def _trail_row(trail, t_off, nvars, rhs_terms=()):
    row = [0] * (nvars + 1)
    for k, d2 in enumerate(trail.twice_d):
        row[t_off + k] += d2
    for idx, c in rhs_terms:
        row[idx] -= c
    return tuple(row)


def string_cone(datum, word, conv=DEFAULT_CONVENTION):
    """Cone of pairs (lam, t) labelling the dual canonical basis of C[U_-\\G]."""
    word = _check_word(datum, word)
    r, n = datum.rank, len(word)
    names = _names("lam", r) + _names("t", n)
    nv = len(names)
    ineqs = []
    for j, first, _second in fundamental_trail_sets(datum, word):
        for tr in first:
            ineqs.append(_trail_row(tr, r, nv))
    ineqs.extend(_ceiling_rows(datum, word, 0, r, nv, conv))
    for i in range(nv):
        row = [0] * (nv + 1)
        row[i] = 1
        ineqs.append(tuple(row))
    cone = ConeHRep(tuple(names), tuple(ineqs)).normalized()
    cone.meta.update(kind="string", type=datum.type_label, word=list(word))
    return cone


def tensor3_cone(datum, word, conv=DEFAULT_CONVENTION):
    """The cone C_i(3) on (lam, t, eta)."""
    word = _check_word(datum, word)
    r, n = datum.rank, len(word)
    names = _names("lam", r) + _names("t", n) + _names("eta", r)
    nv = len(names)
    lam_off, t_off, eta_off = 0, r, r + n
    ineqs = []
    for j, first, second in fundamental_trail_sets(datum, word):
        for tr in first:
            ineqs.append(_trail_row(tr, t_off, nv))
        for tr in second:
            # sum 2d_k t_k >= 2 * eta_sign * eta_j
            ineqs.append(_trail_row(tr, t_off, nv, [(eta_off + j - 1, 2 * conv.eta_sign)]))
    # lam + eta - sum t_k alpha_{i_k} is dominant
    for i in range(r):
        row = [0] * (nv + 1)
        row[lam_off + i] = 1
        row[eta_off + i] = 1
        for k in range(n):
            row[t_off + k] -= datum.cartan[i][word[k] - 1]
        ineqs.append(tuple(row))
    ineqs.extend(_ceiling_rows(datum, word, lam_off, t_off, nv, conv))
    for i in range(nv):
        row = [0] * (nv + 1)
        row[i] = 1
        ineqs.append(tuple(row))
    cone = ConeHRep(tuple(names), tuple(ineqs)).normalized()
    cone.meta.update(kind="tensor3", type=datum.type_label, word=list(word), rank=r)
    return cone


def dual_matrix(datum):
    """Integer matrix of lam -> lam* in fundamental coordinates."""
    r = datum.rank
    cols = [dual_weight(datum, tuple(int(i == j) for i in range(r))) for j in range(r)]
    return [[cols[j][i] for j in range(r)] for i in range(r)]


def pi_matrix(datum, word, which):
    """Integer matrix M with pi_which(lam, t, eta) = M (lam, t, eta)."""
    r, n = datum.rank, len(word)
    nv = 2 * r + n
    if which == 2:
        return [[int(c == i) for c in range(nv)] for i in range(r)]
    if which == 3:
        return [[int(c == r + n + i) for c in range(nv)] for i in range(r)]
    if which != 1:
        raise ValueError("projection index must be 1, 2 or 3")
    lin = []
    for i in range(r):
        row = [0] * nv
        row[i] = 1
        row[r + n + i] = 1
        for k in range(n):
            row[r + k] -= datum.cartan[i][word[k] - 1]
        lin.append(row)
    D = dual_matrix(datum)
    return [[sum(D[i][m] * lin[m][c] for m in range(r)) for c in range(nv)] for i in range(r)]


def project_pi(datum, word, point, which):
    """pi_1, pi_2 or pi_3 of a point (lam, t, eta) of the tensor cone."""
    M = pi_matrix(datum, word, which)
    return tuple(sum(a * x for a, x in zip(row, point)) for row in M)


def tensor3_fiber(datum, cone, mu, lam, eta):
    """The polytope C_i(mu, lam, eta) in the string variables t."""
    r = datum.rank
    word = cone.meta["word"]
    n = len(word)
    for w in (mu, lam, eta):
        if len(w) != r:
            raise ValueError(f"weight {tuple(w)} does not have rank {r}")
    fixed = {f"lam{i + 1}": lam[i] for i in range(r)}
    fixed.update({f"eta{i + 1}": eta[i] for i in range(r)})
    sub = cone.substitute(fixed)
    mu_star = dual_weight(datum, tuple(mu))
    eqs = []
    for i in range(r):
        # lam + eta - sum t_k alpha_{i_k} = mu*
        row = [0] * (n + 1)
        for k in range(n):
            row[k] = datum.cartan[i][word[k] - 1]
        row[n] = lam[i] + eta[i] - mu_star[i]
        eqs.append(tuple(row))
    out = sub.with_rows(eqs=eqs)
    out.meta.update(kind="tensor3_fiber", mu=list(mu), lam=list(lam), eta=list(eta))
    return out


def string_fiber(cone, lam):
    r = sum(1 for v in cone.var_names if v.startswith("lam"))
    return cone.substitute({f"lam{i + 1}": lam[i] for i in range(r)})
