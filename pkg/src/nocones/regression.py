"""Box comparison of generated tensor cones against the published tables."""

import itertools
from dataclasses import dataclass

from .cartan import build_root_datum, dual_weight
from .fixtures import TABLES, table_system
from .hrep import ConeHRep
from .lattice import count_points, enumerate_points
from .oracles import invariant_dimension
from .string_cones import DEFAULT_CONVENTION, dual_matrix, tensor3_cone


def tensor3_with_mu(datum, word, conv=DEFAULT_CONVENTION):
    """C_i(3) extended by mu variables tied to pi_1 by equalities."""
    cone = tensor3_cone(datum, word, conv)
    r, n = datum.rank, len(word)
    names = cone.var_names + tuple(f"mu{i + 1}" for i in range(r))
    nv = len(names)
    ineqs = [tuple(row[:-1]) + (0,) * r + (row[-1],) for row in cone.ineqs]
    for i in range(r):
        row = [0] * (nv + 1)
        row[nv - r + i] = 1
        ineqs.append(tuple(row))
    # lam + eta - sum t alpha = mu*, i.e. D (lam + eta - sum t alpha) = mu
    D = dual_matrix(datum)
    eqs = []
    for i in range(r):
        row = [0] * (nv + 1)
        for m in range(r):
            if D[i][m]:
                row[m] += D[i][m]
                row[r + n + m] += D[i][m]
                for k in range(n):
                    row[r + k] -= D[i][m] * datum.cartan[m][word[k] - 1]
        row[nv - r + i] -= 1
        eqs.append(tuple(row))
    out = ConeHRep(names, tuple(ineqs), tuple(eqs))
    out.meta.update(cone.meta)
    return out


def box_rows(names, t_max, w_max):
    n = len(names)
    rows = []
    for i, v in enumerate(names):
        cap = t_max if v.startswith("t") else w_max
        row = [0] * (n + 1)
        row[i] = -1
        row[n] = -cap
        rows.append(tuple(row))
    return rows


@dataclass
class RegressionResult:
    type_label: str
    word: tuple
    generated: int
    table: int
    only_generated: list
    only_table: list

    @property
    def equal(self):
        return not self.only_generated and not self.only_table


def compare_table(type_label, word, t_max=6, w_max=3, conv=DEFAULT_CONVENTION):
    datum = build_root_datum(type_label)
    gen = tensor3_with_mu(datum, word, conv)
    box = box_rows(gen.var_names, t_max, w_max)
    tab = table_system(type_label, word, gen.var_names)
    a = set(enumerate_points(gen.with_rows(ineqs=box)).points)
    b = set(enumerate_points(tab.with_rows(ineqs=box)).points)
    return RegressionResult(
        type_label, tuple(word), len(a), len(b),
        sorted(a - b), sorted(b - a),
    )


def compare_all(t_max=6, w_max=3):
    return [compare_table(lab, w, t_max, w_max) for lab, w in TABLES]


def table_oracle_mismatches(type_label, word, w_max=2):
    """Weight triples where a table fiber counts neither c(mu, lam, eta) nor c(mu*, lam, eta).

    Diagnostic for the regression: a faithful tensor cone must count
    invariants on every fiber, whatever the labelling of mu.
    """
    datum = build_root_datum(type_label)
    r = datum.rank
    names = tensor3_with_mu(datum, word).var_names
    tab = table_system(type_label, word, names)
    bad = []
    rng = range(w_max + 1)
    for lam in itertools.product(rng, repeat=r):
        for eta in itertools.product(rng, repeat=r):
            for mu in itertools.product(rng, repeat=r):
                fix = {f"lam{i + 1}": lam[i] for i in range(r)}
                fix.update({f"eta{i + 1}": eta[i] for i in range(r)})
                fix.update({f"mu{i + 1}": mu[i] for i in range(r)})
                got = count_points(tab.substitute(fix))
                want = {invariant_dimension(datum, [mu, lam, eta]),
                        invariant_dimension(datum, [dual_weight(datum, mu), lam, eta])}
                if got not in want:
                    bad.append((mu, lam, eta, got, min(want)))
    return bad
