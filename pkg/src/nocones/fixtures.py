"""Published inequality tables for the rank-2 tensor cones, as printed.

Each table is kept verbatim in a small linear-expression syntax so that the
transcription can be read against the source line by line. Variables are
lam1, lam2, eta1, eta2, mu1, mu2 and t1..tN; ``A >= B >= C`` chains expand to
consecutive pairs and ``X >= a, b, c`` lists expand to one row per item.
"""

import re
from fractions import Fraction

from .hrep import ConeHRep

# G2, word 1,2,1,2,1,2
G2_121212 = """
6t2 >= 2t3 >= 3t4 >= 2t5 >= 6t6 >= 0
lam2 >= 2t6
eta1 >= t1 - 3t2 - t3 - 3t4 - t5 - 3t6, t3 - 3t4 - t5 - 3t6, t5 - 3t6
eta2 >= t6, t4 - t5 - 3t6, t2 - t3 - 3t4 - t5 - 3t6
2t1 - 3t2 + 2t3 - 3t4 + 2t5 - 3t6 = lam1 + eta1 - mu1
-t1 + 2t2 - t3 + 2t4 - t5 + 2t6 = lam2 + eta2 - mu2
"""

# G2, word 2,1,2,1,2,1
G2_212121 = """
2t2 >= 2t3 >= t4 >= 2t5 >= 2t6 >= 0
lam1 >= t6
lam2 >= t2 + t4 - t5, t2 + t5 - t6, t3 - t4 - t6, t5 - 3t6, t2 + t3 - 2t4, 2t2 - t4, 3t2 - t3, t3 - t5, t4 - 2t6, 2t4 - t5 - t6, 3t4 - 2t5
eta1 >= t6, t4 - 3t5 - t6, t2 - 3t3 - t4 - 3t5 - t6
eta2 >= t5 - t6, t3 - t4 - 3t5 - t6, t1 - t2 - 3t3 - t4 - 3t5 - t6
2t2 + 2t4 + 2t6 - 3t1 - 3t3 - 3t5 = lam1 + eta1 - mu1
2t1 + 2t3 + 2t5 - t2 - t4 - t6 = lam2 + eta2 - mu2
"""

# Sp4 (C2), word 1,2,1,2
C2_1212 = """
2t2 >= t3 >= 2t4 >= 0
lam2 >= t4
lam1 >= 2t3 - 2t4, 2t2 - 2t3 - 2t4, 2t1 + 2t2
eta1 >= t1 - t2 + 2t3 - t4, t3 - t4
eta2 >= t2 - 2t3 + 2t4, t4
2t1 - 2t2 + 2t3 - 2t4 = lam1 + eta1 - mu1
-t1 + 2t2 - t3 + 2t4 = lam2 + eta2 - mu2
"""

# Sp4 (C2), word 2,1,2,1
C2_2121 = """
t2 >= t3 >= t4 >= 0
lam2 >= 2t1, t2
lam1 >= 2t1
eta1 >= t3 - t4, t1 - t2 + 2t3
eta2 >= t2 - 2t3 + 2t4, t4
t1 + t2 + t3 + t4 = lam1 + eta1 - mu1
t2 + t4 - t1 - t3 = lam2 + eta2 - mu2
"""

TABLES = {
    ("G2", (1, 2, 1, 2, 1, 2)): G2_121212,
    ("G2", (2, 1, 2, 1, 2, 1)): G2_212121,
    ("C2", (1, 2, 1, 2)): C2_1212,
    ("C2", (2, 1, 2, 1)): C2_2121,
}

_TERM = re.compile(r"([+-]?)\s*(\d*)\s*([a-z]+\d+)?")


def parse_linear(expr):
    """'2t1 - 3t2 + lam1' -> ({'t1': 2, 't2': -3, 'lam1': 1}, constant)."""
    expr = expr.replace(" ", "")
    if not expr:
        raise ValueError("empty expression")
    terms = {}
    const = 0
    pos = 0
    while pos < len(expr):
        m = _TERM.match(expr, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse {expr!r} at {pos}")
        sign, coef, var = m.groups()
        c = int(coef) if coef else 1
        if sign == "-":
            c = -c
        if var:
            terms[var] = terms.get(var, 0) + c
        else:
            if not coef:
                raise ValueError(f"dangling sign in {expr!r}")
            const += c
        pos = m.end()
    return terms, const


def parse_table(text):
    """Rows as (terms, const, kind) with kind '>=' or '=' meaning expr (kind) 0."""
    rows = []
    for line in text.strip().splitlines():
        line = line.strip()
        if not line:
            continue
        if ">=" in line:
            parts = [p.strip() for p in line.split(">=")]
            if len(parts) == 2 and "," in parts[1]:
                lhs = parse_linear(parts[0])
                for item in parts[1].split(","):
                    rhs = parse_linear(item)
                    rows.append((_diff(lhs, rhs), ">="))
            else:
                for a, b in zip(parts, parts[1:]):
                    rows.append((_diff(parse_linear(a), parse_linear(b)), ">="))
        elif "=" in line:
            a, b = line.split("=")
            rows.append((_diff(parse_linear(a), parse_linear(b)), "="))
        else:
            raise ValueError(f"no relation in {line!r}")
    return rows


def _diff(lhs, rhs):
    terms = dict(lhs[0])
    for k, v in rhs[0].items():
        terms[k] = terms.get(k, 0) - v
    return {k: v for k, v in terms.items() if v}, lhs[1] - rhs[1]


def table_system(type_label, word, var_names):
    """The printed table as a ConeHRep over ``var_names`` (plus ambient sign rows).

    The ambient domain (dominant weights, nonnegative string parameters) is
    added explicitly since the tables leave it implicit.
    """
    text = TABLES[(type_label, tuple(word))]
    names = tuple(var_names)
    n = len(names)
    ineqs, eqs = [], []
    for (terms, const), kind in parse_table(text):
        row = [0] * (n + 1)
        for v, c in terms.items():
            row[names.index(v)] += c
        row[n] = -const
        (ineqs if kind == ">=" else eqs).append(tuple(row))
    for i in range(n):
        row = [0] * (n + 1)
        row[i] = 1
        ineqs.append(tuple(row))
    return ConeHRep(names, tuple(ineqs), tuple(eqs))
