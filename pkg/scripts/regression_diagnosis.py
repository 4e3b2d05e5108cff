"""Why the rank-2 table regression fails: compare the tables with the generated
cones on the box, and check both against the invariant-dimension oracle.

    python scripts/regression_diagnosis.py [--w-max 2]
"""

import argparse
import itertools

from nocones.cartan import build_root_datum
from nocones.fixtures import TABLES
from nocones.lattice import count_points
from nocones.oracles import invariant_dimension
from nocones.regression import compare_table, table_oracle_mismatches
from nocones.string_cones import tensor3_cone, tensor3_fiber


def generated_oracle_mismatches(label, word, w_max):
    datum = build_root_datum(label)
    cone = tensor3_cone(datum, word)
    bad = 0
    for ws in itertools.product(list(itertools.product(range(w_max + 1), repeat=datum.rank)), repeat=3):
        bad += count_points(tensor3_fiber(datum, cone, *ws)) != invariant_dimension(datum, list(ws))
    return bad


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--w-max", type=int, default=2)
    args = ap.parse_args()
    total = (args.w_max + 1) ** 6
    for label, word in TABLES:
        res = compare_table(label, word)
        tab_bad = table_oracle_mismatches(label, word, args.w_max)
        gen_bad = generated_oracle_mismatches(label, word, args.w_max)
        print(f"{label} {word}: box points generated={res.generated} table={res.table} "
              f"only-generated={len(res.only_generated)} only-table={len(res.only_table)}")
        print(f"    fibers off the oracle (of {total}): table {len(tab_bad)}, generated {gen_bad}")
        for mu, lam, eta, got, want in tab_bad[:3]:
            print(f"    e.g. mu={mu} lam={lam} eta={eta}: table counts {got}, invariants {want}")


if __name__ == "__main__":
    main()
