"""Integer H-representations with named variables."""

import json
from dataclasses import dataclass, field

from .exact import int_row_normalize


def _norm_ineq(row):
    """Divide a >= row by the gcd of its coefficients, rounding the bound up."""
    *a, b = row
    from math import gcd

    g = 0
    for x in a:
        g = gcd(g, x)
    if g > 1:
        a = [x // g for x in a]
        b = -((-b) // g)
    return tuple(a) + (b,)


@dataclass(frozen=True)
class ConeHRep:
    """Rows are ``(a_1, ..., a_n, b)`` meaning ``a . x >= b`` (ineqs) or ``a . x = b`` (eqs)."""

    var_names: tuple
    ineqs: tuple = ()
    eqs: tuple = ()
    meta: dict = field(default_factory=dict, compare=False, hash=False)

    def __post_init__(self):
        names = tuple(self.var_names)
        if len(set(names)) != len(names):
            raise ValueError("duplicate variable names")
        n = len(names)
        for row in tuple(self.ineqs) + tuple(self.eqs):
            if len(row) != n + 1:
                raise ValueError(f"row of length {len(row)} for {n} variables")
            if any(not isinstance(x, int) for x in row):
                raise TypeError("rows must be integers")
        object.__setattr__(self, "var_names", names)
        object.__setattr__(self, "ineqs", tuple(tuple(r) for r in self.ineqs))
        object.__setattr__(self, "eqs", tuple(tuple(r) for r in self.eqs))

    @property
    def nvars(self):
        return len(self.var_names)

    def index(self, name):
        return self.var_names.index(name)

    def contains(self, point):
        for *a, b in self.ineqs:
            if sum(x * y for x, y in zip(a, point)) < b:
                return False
        for *a, b in self.eqs:
            if sum(x * y for x, y in zip(a, point)) != b:
                return False
        return True

    def normalized(self):
        """Primitive rows, duplicates removed, order canonical."""
        ineqs = sorted({_norm_ineq(r) for r in self.ineqs})
        eqs = set()
        for r in self.eqs:
            r = int_row_normalize(r)
            lead = next((x for x in r if x != 0), 0)
            if lead < 0:
                r = [-x for x in r]
            eqs.add(tuple(r))
        return ConeHRep(self.var_names, tuple(ineqs), tuple(sorted(eqs)), dict(self.meta))

    def with_rows(self, ineqs=(), eqs=()):
        return ConeHRep(self.var_names, self.ineqs + tuple(ineqs), self.eqs + tuple(eqs), dict(self.meta))

    def fix(self, assignment):
        """Add equalities var = value for every (name, value) in ``assignment``."""
        rows = []
        n = self.nvars
        for name, value in assignment.items():
            row = [0] * (n + 1)
            row[self.index(name)] = 1
            row[n] = int(value)
            rows.append(tuple(row))
        return self.with_rows(eqs=rows)

    def substitute(self, assignment):
        """Eliminate the named variables by plugging in integer values."""
        keep = [i for i, v in enumerate(self.var_names) if v not in assignment]
        vals = {self.index(k): int(v) for k, v in assignment.items()}

        def sub(row):
            *a, b = row
            b -= sum(a[i] * v for i, v in vals.items())
            return tuple(a[i] for i in keep) + (b,)

        return ConeHRep(
            tuple(self.var_names[i] for i in keep),
            tuple(sub(r) for r in self.ineqs),
            tuple(sub(r) for r in self.eqs),
            dict(self.meta),
        )

    def rename(self, prefix):
        return ConeHRep(tuple(prefix + v for v in self.var_names), self.ineqs, self.eqs, dict(self.meta))

    def to_json(self):
        return {"vars": list(self.var_names), "ineqs": [list(r) for r in self.ineqs], "eqs": [list(r) for r in self.eqs]}

    def dumps(self):
        return json.dumps(self.to_json(), separators=(",", ":"))

    @classmethod
    def from_json(cls, obj):
        if isinstance(obj, str):
            obj = json.loads(obj)
        return cls(tuple(obj["vars"]), tuple(tuple(int(x) for x in r) for r in obj.get("ineqs", [])),
                   tuple(tuple(int(x) for x in r) for r in obj.get("eqs", [])))


def row_from_terms(var_names, terms, rhs=0):
    """Build a row from {name: coefficient}."""
    row = [0] * (len(var_names) + 1)
    for name, c in terms.items():
        row[var_names.index(name)] += c
    row[-1] = rhs
    return tuple(row)


def product(cones, prefixes):
    """Direct product of systems with disjoint prefixed variables."""
    names = []
    for c, p in zip(cones, prefixes):
        names.extend(p + v for v in c.var_names)
    total = len(names)
    ineqs, eqs = [], []
    off = 0
    for c in cones:
        n = c.nvars
        for rows, out in ((c.ineqs, ineqs), (c.eqs, eqs)):
            for r in rows:
                new = [0] * (total + 1)
                new[off:off + n] = r[:n]
                new[total] = r[n]
                out.append(tuple(new))
        off += n
    return ConeHRep(tuple(names), tuple(ineqs), tuple(eqs))
