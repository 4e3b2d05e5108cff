"""Sweep the ambiguous readings of the tensor-cone families against the oracle.

Prints, for each reading, how many fibers disagree with the invariant
dimension on a small grid of weights.
"""

import itertools
import sys

from nocones.cartan import build_root_datum
from nocones.lattice import count_points
from nocones.oracles import invariant_dimension
from nocones.string_cones import Convention, tensor3_cone, tensor3_fiber

CASES = [("A2", (1, 2, 1)), ("C2", (1, 2, 1, 2)), ("C2", (2, 1, 2, 1)), ("G2", (1, 2, 1, 2, 1, 2))]


def sweep(max_coord=1):
    results = {}
    for ceiling, index, sign in itertools.product(("upper", "lower"), ("row", "col"), (1, -1)):
        conv = Convention(ceiling, index, sign)
        bad = 0
        total = 0
        for label, word in CASES:
            datum = build_root_datum(label)
            cone = tensor3_cone(datum, word, conv)
            grid = list(itertools.product(range(max_coord + 1), repeat=datum.rank))
            for mu, lam, eta in itertools.product(grid, repeat=3):
                fib = tensor3_fiber(datum, cone, mu, lam, eta)
                try:
                    got = count_points(fib)
                except ValueError:
                    got = None
                total += 1
                if got != invariant_dimension(datum, [mu, lam, eta]):
                    bad += 1
        results[conv] = (bad, total)
        print(f"{conv}: {bad}/{total} mismatches", flush=True)
    return results


if __name__ == "__main__":
    sweep(int(sys.argv[1]) if len(sys.argv) > 1 else 1)
