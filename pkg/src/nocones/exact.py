"""Small exact linear-algebra helpers over Fraction and int."""

from fractions import Fraction
from math import gcd


def is_zero_vec(v):
    return all(x == 0 for x in v)


def mat_vec(m, v):
    return [sum(a * b for a, b in zip(row, v) if a and b) for row in m]


def mat_mul(a, b):
    if not a:
        return []
    bt = list(zip(*b)) if b else []
    return [[sum(x * y for x, y in zip(row, col) if x and y) for col in bt] for row in a]


class IncrementalBasis:
    """Row-echelon accumulator: decides membership in a growing span and
    expresses vectors in terms of the accepted generators."""

    def __init__(self, length):
        self.length = length
        self.rows = []  # (pivot, reduced vector, combination over generators)
        self.count = 0

    def _reduce(self, v):
        v = [Fraction(x) for x in v]
        comb = {}
        for piv, row, rcomb in self.rows:
            if v[piv] != 0:
                f = v[piv] / row[piv]
                v = [a - f * b for a, b in zip(v, row)]
                for k, c in rcomb.items():
                    comb[k] = comb.get(k, 0) - f * c
        return v, comb

    def add(self, v):
        """Accept v if independent; return its generator index or None."""
        red, comb = self._reduce(v)
        piv = next((i for i, x in enumerate(red) if x != 0), None)
        if piv is None:
            return None
        idx = self.count
        comb[idx] = comb.get(idx, 0) + 1
        self.rows.append((piv, red, comb))
        self.count += 1
        return idx

    def coordinates(self, v):
        """Coefficients c with v = sum c_k g_k, or None if v is outside the span."""
        red, comb = self._reduce(v)
        if not is_zero_vec(red):
            return None
        out = [Fraction(0)] * self.count
        for k, c in comb.items():
            out[k] = -c
        return out


def int_row_normalize(row):
    g = 0
    for x in row:
        g = gcd(g, int(x))
    if g > 1:
        return [x // g for x in row]
    return list(row)


def to_int_row(row):
    """Scale a rational row to a primitive integer row with the same sign."""
    den = 1
    for x in row:
        x = Fraction(x)
        den = den * x.denominator // gcd(den, x.denominator)
    return int_row_normalize([int(Fraction(x) * den) for x in row])
