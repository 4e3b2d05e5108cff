"""Graded lattice-point counts of glued graph cones, next to the BZ quilt counts.

    python scripts/graph_series.py --type A2 --degree 5
"""

import argparse

from nocones.bz import nice_word, quilt_count
from nocones.cartan import build_root_datum
from nocones.gluing import dumbbell_graph, graph_cone, theta_graph
from nocones.lattice import graded_count


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--type", default="A1")
    ap.add_argument("--degree", type=int, default=6)
    args = ap.parse_args()
    datum = build_root_datum(args.type)
    word = datum.longest_word
    type_a = args.type.startswith("A") and "x" not in args.type
    if type_a:
        word = nice_word(datum.rank + 1)
    for name, make in (("theta", theta_graph), ("dumbbell", dumbbell_graph)):
        glued = graph_cone(datum, make(word))
        series = [graded_count(glued.hrep, glued.grading, d) for d in range(args.degree + 1)]
        print(f"{name:9s} string cones: {series}")
        if type_a:
            quilts = [quilt_count(make(), datum.rank + 1, degree=d) for d in range(args.degree + 1)]
            print(f"{name:9s} BZ quilts:    {quilts}")


if __name__ == "__main__":
    main()
