"""Acceptance criteria, one test each; every test prints a single PASS/FAIL line.

Run directly (python tests/test_acceptance.py) for the bare report.
"""

import pytest

from nocones import suites

CRITERIA = [
    (1, "string-cone fibers equal Weyl dimensions (coords <= 4)", suites.string_dims, {}),
    (2, "tensor-cone fibers equal invariant dimensions, C2 words agree (coords <= 2)", suites.tensor3, {}),
    (3, "transcribed rank-2 tables equal generated cones on the box t <= 6, weights <= 3", suites.regression, {}),
    (4, "tree counts independent of topology, orderings and words", suites.glue_independence, {}),
    (5, "A1 theta/dumbbell graded counts equal oracle and weightings (d <= 8)", suites.graph_consistency, {}),
    (6, "BZ triangles equal nice-word tensor fibers and oracle, SL2/SL3 (coords <= 3)", suites.bz_typea, {}),
    (7, "SL2 weightings generated by w(e) <= 2 up to degree 8", suites.sl2_generation, {}),
    (8, "oracle dimension bookkeeping and permutation/duality symmetry", suites.oracle_consistency, {}),
]


def report_line(num, text, rep):
    status = "PASS" if rep.passed else "FAIL"
    extra = f"; first mismatch: {rep.failures[0]}" if rep.failures else ""
    return (f"criterion {num}: {status} - {text} "
            f"[{len(rep.lines) - len(rep.failures)}/{len(rep.lines)} agree, {rep.elapsed:.1f}s]{extra}")


@pytest.mark.parametrize("num,text,suite,kw", CRITERIA, ids=[f"criterion{c[0]}" for c in CRITERIA])
def test_criterion(num, text, suite, kw, capsys):
    rep = suite(**kw)
    with capsys.disabled():
        print("\n" + report_line(num, text, rep))
    assert rep.passed, "\n".join(rep.failures[:10])


if __name__ == "__main__":
    for num, text, suite, kw in CRITERIA:
        print(report_line(num, text, suite(**kw)))
