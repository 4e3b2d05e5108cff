"""Exact lattice-point enumeration in bounded H-representations.

Equalities are removed first by an integer parametrisation of their solution
lattice (column Hermite reduction), so the remaining search runs over a free
integer vector z with constraints ``M z >= c``. Fourier-Motzkin projections
of that system onto the leading coordinates give, at every depth of the
coordinate-fixing recursion, an interval that contains every integer
completion; the deepest level carries the full system, so every leaf is an
exact solution. No floating point is used anywhere.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .hrep import ConeHRep

__all__ = [
    "LatticePointSet",
    "UnboundedError",
    "InfeasibleError",
    "enumerate_points",
    "count_points",
    "bounds",
    "rational_point",
    "graded_count",
    "check_generation",
    "integer_parametrization",
]


class UnboundedError(ValueError):
    def __init__(self, msg, direction=None):
        super().__init__(msg)
        self.direction = direction


class InfeasibleError(ValueError):
    pass


@dataclass(frozen=True)
class LatticePointSet:
    var_names: tuple
    points: tuple
    grading: tuple = None
    degrees: tuple = field(default=None, compare=False)

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __contains__(self, p):
        return tuple(p) in set(self.points)

    def to_jsonl(self):
        import json

        return "".join(json.dumps(list(p)) + "\n" for p in self.points)


# -- equalities -------------------------------------------------------------


def integer_parametrization(eqs, n):
    """Integer solutions of ``eqs`` (rows a..., b with a.x = b) as x0 + K z.

    Returns (x0, K) with K a list of n-vectors (columns), or None when there
    is no integer solution.
    """
    m = len(eqs)
    B = [list(r[:n]) for r in eqs]
    rhs = [r[n] for r in eqs]
    U = [[int(i == j) for j in range(n)] for i in range(n)]

    def col_op(dst, src, q):
        # column dst -= q * column src
        for row in B:
            row[dst] -= q * row[src]
        for row in U:
            row[dst] -= q * row[src]

    def col_swap(a, b):
        for row in B:
            row[a], row[b] = row[b], row[a]
        for row in U:
            row[a], row[b] = row[b], row[a]

    def col_neg(a):
        for row in B:
            row[a] = -row[a]
        for row in U:
            row[a] = -row[a]

    col = 0
    pivots = []  # (row, col)
    for r in range(m):
        if col >= n:
            pivots.append((r, None))
            continue
        while True:
            nz = [j for j in range(col, n) if B[r][j] != 0]
            if len(nz) <= 1:
                break
            j0 = min(nz, key=lambda j: abs(B[r][j]))
            for j in nz:
                if j != j0:
                    col_op(j, j0, B[r][j] // B[r][j0])
        nz = [j for j in range(col, n) if B[r][j] != 0]
        if nz:
            col_swap(col, nz[0])
            if B[r][col] < 0:
                col_neg(col)
            pivots.append((r, col))
            col += 1
        else:
            pivots.append((r, None))
    y = [0] * n
    for r, p in pivots:
        s = sum(B[r][q] * y[q] for q in range(col) if q != p)
        if p is None:
            if s != rhs[r]:
                return None
        else:
            diff = rhs[r] - s
            if diff % B[r][p]:
                return None
            y[p] = diff // B[r][p]
    x0 = [sum(U[i][j] * y[j] for j in range(n)) for i in range(n)]
    K = [[U[i][j] for i in range(n)] for j in range(col, n)]
    return x0, K


# -- Fourier-Motzkin --------------------------------------------------------


def _prim(a, b, tighten):
    g = 0
    for x in a:
        g = gcd(g, x)
    if g == 0:
        return tuple(a), b
    if isinstance(b, Fraction) or not tighten:
        return tuple(x // g for x in a), Fraction(b) / g
    return tuple(x // g for x in a), -((-b) // g)


def _clean(rows, tighten):
    """Primitive rows, one per coefficient vector (the tightest bound kept).

    Rows are (a, b) or (a, b, history); the history is the set of original
    rows a derived row was combined from.
    """
    best = {}
    for row in rows:
        a, b = _prim(row[0], row[1], tighten)
        hist = row[2] if len(row) > 2 else None
        if not any(a):
            if b > 0:
                raise InfeasibleError("infeasible system")
            continue
        old = best.get(a)
        if old is None or b > old[0] or (b == old[0] and hist is not None and len(hist) < len(old[1])):
            best[a] = (b, hist)
    return [(a, b, h) for a, (b, h) in best.items()]


def _eliminate(rows, k, tighten, step=None):
    """One Fourier-Motzkin step on variable k.

    With ``step`` (number of variables eliminated so far, this one included)
    Chernikov's rule drops combinations built from more than step + 1
    original rows; such rows are implied by the others.
    """
    pos, neg, out = [], [], []
    for row in rows:
        a = row[0]
        if a[k] > 0:
            pos.append(row)
        elif a[k] < 0:
            neg.append(row)
        else:
            out.append(row)
    for ap, bp, hp in pos:
        for an, bn, hn in neg:
            hist = None
            if hp is not None and hn is not None:
                hist = hp | hn
                if step is not None and len(hist) > step + 1:
                    continue
            mp, mn = -an[k], ap[k]
            a = tuple(mp * x + mn * y for x, y in zip(ap, an))
            out.append((a, mp * bp + mn * bn, hist))
    return _clean(out, tighten)


def _with_history(rows):
    return [(r[0], r[1], frozenset([i])) for i, r in enumerate(rows)]


def _elimination_plan(rows, nvars, tighten):
    """Greedy elimination order and the successive projected systems."""
    cur = _clean(_with_history(rows), tighten)
    systems = [cur]
    order = []
    remaining = set(range(nvars))
    while remaining:
        def cost(k):
            p = sum(1 for row in cur if row[0][k] > 0)
            q = sum(1 for row in cur if row[0][k] < 0)
            return (p * q - p - q, k)

        k = min(remaining, key=cost)
        cur = _eliminate(cur, k, tighten, step=len(order) + 1)
        order.append(k)
        remaining.discard(k)
        systems.append(cur)
    return order, systems


def _lift_point(order, systems, fixed_first, tighten=False):
    """Rational point of systems[0], built from the most projected level back up."""
    n = len(order)
    z = [Fraction(0)] * n
    for depth in range(n - 1, -1, -1):
        k = order[depth]
        lo, hi = None, None
        for a, b, _ in systems[depth]:
            if a[k] == 0:
                continue
            rest = b - sum(a[j] * z[j] for j in range(len(a)) if j != k and a[j])
            v = Fraction(rest) / a[k]
            if a[k] > 0:
                lo = v if lo is None or v > lo else lo
            else:
                hi = v if hi is None or v < hi else hi
        if k in fixed_first:
            val = Fraction(fixed_first[k])
        elif lo is not None:
            val = lo
        elif hi is not None:
            val = hi
        else:
            val = Fraction(0)
        z[k] = val
    return z


class _Reduced:
    """Equality-free form of a ConeHRep: x = x0 + K z, rows M z >= c."""

    def __init__(self, hrep):
        n = hrep.nvars
        self.n = n
        par = integer_parametrization(hrep.eqs, n) if hrep.eqs else ([0] * n, [[int(i == j) for i in range(n)] for j in range(n)])
        self.empty = par is None
        if self.empty:
            return
        self.x0, self.K = par
        self.d = len(self.K)
        rows = []
        for *a, b in hrep.ineqs:
            coef = tuple(sum(a[i] * col[i] for i in range(n) if a[i] and col[i]) for col in self.K)
            rows.append((coef, b - sum(x * y for x, y in zip(a, self.x0))))
        self.rows = rows

    def to_x(self, z):
        x = list(self.x0)
        for zj, col in zip(z, self.K):
            if zj:
                for i in range(self.n):
                    if col[i]:
                        x[i] += zj * col[i]
        return x


def _direction_certificate(red, k):
    """A recession direction (in x coordinates) along which z_k is unbounded."""
    order, systems = _elimination_plan([(a, 0) for a, _ in red.rows], red.d, False)
    pos = order.index(k)
    sign = -1 if any(row[0][k] < 0 for row in systems[pos]) else 1
    z = _lift_point(order, systems, {k: sign})
    den = 1
    for v in z:
        den = den * v.denominator // gcd(den, v.denominator)
    zi = [int(v * den) for v in z]
    return [sum(zj * col[i] for zj, col in zip(zi, red.K)) for i in range(red.n)]


def enumerate_points(hrep):
    """All integer points of a bounded system, sorted lexicographically."""
    return LatticePointSet(hrep.var_names, tuple(sorted(tuple(p) for p in _iter_points(hrep))))


def count_points(hrep):
    return sum(1 for _ in _iter_points(hrep))


def _iter_points(hrep):
    red = _Reduced(hrep)
    if red.empty:
        return
    if red.d == 0:
        if all(b <= 0 for _, b in red.rows):
            yield tuple(red.x0)
        return
    try:
        order, systems = _elimination_plan(red.rows, red.d, True)
    except InfeasibleError:
        return
    d = red.d
    # depth t fixes variable order[d-1-t] using systems[d-1-t]
    levels = []
    fixed_before = []
    for t in range(d):
        k = order[d - 1 - t]
        lo_rows, hi_rows = [], []
        for a, b, _ in systems[d - 1 - t]:
            if a[k] == 0:
                continue
            rest = tuple((j, a[j]) for j in fixed_before if a[j])
            (lo_rows if a[k] > 0 else hi_rows).append((a[k], rest, b))
        if not lo_rows or not hi_rows:
            raise UnboundedError(
                f"unbounded: reduced coordinate {k} has no {'lower' if not lo_rows else 'upper'} bound",
                _direction_certificate(red, k),
            )
        levels.append((k, lo_rows, hi_rows))
        fixed_before.append(k)
    z = [0] * d

    def rec(t):
        if t == d:
            yield tuple(red.to_x(z))
            return
        k, lo_rows, hi_rows = levels[t]
        lo = None
        hi = None
        for ak, rest, b in lo_rows:
            v = b - sum(c * z[j] for j, c in rest)
            v = -((-v) // ak)
            if lo is None or v > lo:
                lo = v
        for ak, rest, b in hi_rows:
            v = b - sum(c * z[j] for j, c in rest)
            v = v // ak  # ak < 0: z <= v / ak, floor division on negatives
            # a z >= v with a < 0  <=>  z <= v / a
            if hi is None or v < hi:
                hi = v
        for val in range(lo, hi + 1):
            z[k] = val
            yield from rec(t + 1)
        z[k] = 0

    yield from rec(0)


def _rational_reduction(hrep, objective=None):
    """Solve the equalities over Q: x = x0 + sum_j z_j K_j with integer columns K_j.

    Returns (x0, K, rows) with rows (a, b) meaning a . z >= b, or None when
    the equalities are inconsistent. With ``objective`` (an integer row) an
    extra last variable y = objective . x is appended.
    """
    n = hrep.nvars
    eqs = [[Fraction(x) for x in r] for r in hrep.eqs]
    if objective is not None:
        n += 1
        eqs = [r[:-1] + [Fraction(0), r[-1]] for r in eqs]
        eqs.append([Fraction(c) for c in objective] + [Fraction(-1), Fraction(0)])
    pivots = []
    row = 0
    for col in range(n):
        piv = next((i for i in range(row, len(eqs)) if eqs[i][col]), None)
        if piv is None:
            continue
        eqs[row], eqs[piv] = eqs[piv], eqs[row]
        lead = eqs[row][col]
        eqs[row] = [x / lead for x in eqs[row]]
        for i in range(len(eqs)):
            if i != row and eqs[i][col]:
                f = eqs[i][col]
                eqs[i] = [x - f * y for x, y in zip(eqs[i], eqs[row])]
        pivots.append(col)
        row += 1
    if any(not any(r[:n]) and r[n] for r in eqs[row:]):
        return None
    free = [c for c in range(n) if c not in pivots]
    x0 = [Fraction(0)] * n
    for i, c in enumerate(pivots):
        x0[c] = eqs[i][n]
    K = []
    for f in free:
        col = [Fraction(0)] * n
        col[f] = Fraction(1)
        for i, c in enumerate(pivots):
            col[c] = -eqs[i][f]
        den = 1
        for v in col:
            den = den * v.denominator // gcd(den, v.denominator)
        K.append([int(v * den) for v in col])
    rows = []
    for r in hrep.ineqs:
        a = list(r[:-1]) + ([0] if objective is not None else [])
        coef = tuple(sum(a[i] * k[i] for i in range(n) if a[i] and k[i]) for k in K)
        rows.append((coef, Fraction(r[-1]) - sum(a[i] * x0[i] for i in range(n) if a[i])))
    return x0, K, rows


def bounds(hrep, coord):
    """Exact rational (min, max) of one coordinate over the rational polyhedron."""
    if isinstance(coord, str):
        coord = hrep.index(coord)
    red = _rational_reduction(hrep, objective=[int(i == coord) for i in range(hrep.nvars)])
    if red is None:
        raise InfeasibleError("infeasible system")
    x0, K, rows = red
    y = hrep.nvars
    # y = x0[y] + s with s = sum_j K_j[y] z_j; project the z-system onto s
    if not any(k[y] for k in K):
        if rational_point(hrep) is None:
            raise InfeasibleError("infeasible system")
        return x0[y], x0[y]
    d = len(K)
    obj = tuple(K[j][y] for j in range(d))
    ext = [(a + (0,), b) for a, b in rows]
    ext.append((tuple(-c for c in obj) + (1,), Fraction(0)))
    ext.append((obj + (-1,), Fraction(0)))
    cur = _clean(_with_history(ext), False)
    for step, k in enumerate(range(d), 1):
        cur = _eliminate(cur, k, False, step=step)
    lo, hi = None, None
    for a, b, _ in cur:
        v = Fraction(b) / a[d]
        if a[d] > 0:
            lo = v if lo is None or v > lo else lo
        else:
            hi = v if hi is None or v < hi else hi
    if lo is not None and hi is not None and lo > hi:
        raise InfeasibleError("infeasible system")
    if lo is None or hi is None:
        raise UnboundedError(f"coordinate {hrep.var_names[coord]} is unbounded")
    return lo + x0[y], hi + x0[y]


def rational_point(hrep):
    """Some rational point of the system, or None if it is empty."""
    red = _rational_reduction(hrep)
    if red is None:
        return None
    x0, K, rows = red
    n, d = hrep.nvars, len(K)
    try:
        order, systems = _elimination_plan(rows, d, False)
    except InfeasibleError:
        return None
    z = _lift_point(order, systems, {}) if d else []
    return [x0[i] + sum(z[j] * K[j][i] for j in range(d)) for i in range(n)]


def graded_count(cone, grading, degree):
    """Number of lattice points of ``cone`` with grading . x == degree.

    Raises ValueError carrying a rational point of negative degree when the
    grading is not nonnegative on the cone.
    """
    grading = tuple(int(g) for g in grading)
    homogeneous = all(r[-1] == 0 for r in cone.ineqs + cone.eqs)
    if homogeneous:
        witness = rational_point(cone.with_rows(eqs=[grading + (-1,)]))
        if witness is not None:
            err = ValueError("grading is negative on the cone")
            err.certificate = witness
            raise err
    return count_points(cone.with_rows(eqs=[grading + (int(degree),)]))


def graded_points(cone, grading, degree):
    grading = tuple(int(g) for g in grading)
    pts = enumerate_points(cone.with_rows(eqs=[grading + (int(degree),)]))
    return LatticePointSet(cone.var_names, pts.points, grading, (int(degree),) * len(pts.points))


def check_generation(points, generators, member=None):
    """Whether every point is a sum of generators through members only.

    ``member`` decides semigroup membership of intermediate residuals; by
    default a residual must itself be one of ``points``. Returns
    (True, None) or (False, witness).
    """
    pts = [tuple(p) for p in points]
    gens = [tuple(g) for g in generators if any(g)]
    pool = set(pts)
    if member is None:
        member = pool.__contains__
    memo = {}

    def ok(p):
        if not any(p):
            return True
        if p in memo:
            return memo[p]
        memo[p] = False
        res = False
        for g in gens:
            q = tuple(x - y for x, y in zip(p, g))
            if member(q) and ok(q):
                res = True
                break
        memo[p] = res
        return res

    for p in sorted(pts, key=lambda p: (sum(p), p)):
        if not ok(p):
            return False, p
    return True, None
