"""Command line: build cones, count lattice points, query oracles, run sweeps.

Exit codes: 0 success, 1 a verify suite failed, 2 unparseable input,
3 invalid decoration (bad word, tree or graph), 4 unbounded system.
"""

import argparse
import hashlib
import json
import sys
import time
from dataclasses import asdict, dataclass, field

from . import __version__
from .bz import bz_fiber
from .cartan import build_root_datum, is_reduced_word
from .gluing import (DecorationError, format_graph, graph_cone, load_graph, tree_cone,
                     tree_polytope, trivalent_refinement)
from .hrep import ConeHRep
from .lattice import InfeasibleError, UnboundedError, count_points, graded_count
from .oracles import invariant_dimension, tensor_decompose
from .string_cones import string_cone, string_fiber, tensor3_cone, tensor3_fiber
from .suites import SUITES


class CliError(Exception):
    def __init__(self, code, message):
        super().__init__(message)
        self.code = code


@dataclass
class RunManifest:
    """What was run, on which inputs, and what it printed."""

    command: list
    input_digests: dict = field(default_factory=dict)
    version: str = __version__
    elapsed: float = 0.0
    output: str = ""

    def write(self, path):
        with open(path, "w") as fh:
            json.dump(asdict(self), fh, indent=2, sort_keys=True)
            fh.write("\n")


def parse_int_list(text):
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise CliError(2, f"cannot parse integer list {text!r}") from None


def parse_weights(text):
    """'1,0;0,1' -> [(1, 0), (0, 1)]."""
    return [parse_int_list(part) for part in text.split(";")]


def _datum(args):
    if not args.type:
        raise CliError(2, "--type is required")
    try:
        return build_root_datum(args.type)
    except ValueError as exc:
        raise CliError(2, str(exc)) from None


def _word(args, datum, required=True):
    if not args.word:
        if required:
            raise CliError(2, "--word is required")
        return None
    word = parse_int_list(args.word)
    if not is_reduced_word(datum, word):
        raise CliError(3, f"reduced_word: {word} is not a reduced word for w0 in {datum.type_label}")
    return word


def _weights(args, count, rank):
    if args.weights is None:
        raise CliError(2, "--weights is required")
    ws = parse_weights(args.weights)
    if count is not None and len(ws) != count:
        raise CliError(2, f"expected {count} weights, got {len(ws)}")
    for w in ws:
        if len(w) != rank or any(x < 0 for x in w):
            raise CliError(2, f"{w} is not a dominant weight of rank {rank}")
    return ws


def _decorated(args, datum):
    path = args.tree or args.graph
    if not path:
        raise CliError(2, "glue needs --tree or --graph")
    try:
        graph = load_graph(path)
    except OSError as exc:
        raise CliError(2, str(exc)) from None
    except ValueError as exc:
        raise CliError(2, f"{path}: {exc}") from None
    want = "tree" if args.tree else "graph"
    if graph.mode != want:
        raise CliError(3, f"mode: {path} describes a {graph.mode}, not a {want}")
    word = _word(args, datum, required=False)
    if word is not None:
        graph = graph.with_words(default=word)
    graph.validate(datum)
    return graph


def _build(args):
    """The system requested by a cone/count invocation, plus an optional grading."""
    kind = args.kind
    if kind == "file":
        if not args.input:
            raise CliError(2, "file mode needs --input")
        try:
            text = sys.stdin.read() if args.input == "-" else open(args.input).read()
            return ConeHRep.from_json(text), None
        except (OSError, ValueError, KeyError, TypeError) as exc:
            raise CliError(2, f"bad cone JSON: {exc}") from None
    if kind == "bz":
        if args.m is None:
            raise CliError(2, "bz needs --m")
        ws = _weights(args, 3, args.m - 1)
        return bz_fiber(args.m, ws), None
    datum = _datum(args)
    if kind == "string":
        cone = string_cone(datum, _word(args, datum))
        if args.weights is not None:
            return string_fiber(cone, _weights(args, 1, datum.rank)[0]), None
        return cone, None
    if kind == "tensor3":
        cone = tensor3_cone(datum, _word(args, datum))
        if args.weights is not None:
            mu, lam, eta = _weights(args, 3, datum.rank)
            return tensor3_fiber(datum, cone, mu, lam, eta), None
        return cone, None
    if kind == "glue":
        graph = _decorated(args, datum)
        if graph.mode == "tree":
            if args.weights is not None:
                return tree_polytope(datum, graph, _weights(args, len(graph.leaves), datum.rank)), None
            glued = tree_cone(datum, graph)
        else:
            glued = graph_cone(datum, graph)
        return glued.hrep, glued.grading
    raise CliError(2, f"unknown cone kind {kind!r}")


def cmd_cone(args, out):
    system, grading = _build(args)
    obj = system.to_json()
    if grading is not None:
        obj["grading"] = list(grading)
    out.append(json.dumps(obj, separators=(",", ":"), sort_keys=True))


def cmd_count(args, out):
    system, grading = _build(args)
    if args.degree is not None:
        if args.grading:
            grading = parse_int_list(args.grading)
        if grading is None:
            raise CliError(2, "--degree needs a grading (glue --graph, or --grading)")
        if len(grading) != system.nvars:
            raise CliError(2, f"grading has {len(grading)} entries for {system.nvars} variables")
        n = graded_count(system, grading, args.degree)
    else:
        n = count_points(system)
    out.append(json.dumps({"count": n}) if args.json else str(n))


def cmd_oracle(args, out):
    datum = _datum(args)
    if args.what == "invdim":
        ws = _weights(args, None, datum.rank)
        n = invariant_dimension(datum, ws)
        out.append(json.dumps({"invariant_dimension": n}) if args.json else str(n))
        return
    lam, mu = _weights(args, 2, datum.rank)
    dec = sorted(tensor_decompose(datum, lam, mu).items())
    if args.json:
        out.append(json.dumps([{"weight": list(nu), "multiplicity": m} for nu, m in dec]))
    else:
        for nu, m in dec:
            out.append(f"{','.join(map(str, nu))} {m}")


def cmd_verify(args, out):
    fn = SUITES[args.suite]
    kw = {}
    if args.max is not None:
        if args.suite in ("string-dims", "tensor3", "bz-typea"):
            kw["max_coord"] = args.max
        elif args.suite == "g2-sp4-regression":
            kw["w_max"] = args.max
    if args.degree is not None and args.suite in ("graph-consistency", "sl2-generation"):
        kw["max_degree"] = args.degree
    rep = fn(**kw)
    if args.json:
        out.append(json.dumps({"suite": rep.name, "passed": rep.passed, "lines": rep.lines}))
    else:
        out.extend(rep.lines)
        out.append(f"{rep.name}: {'PASS' if rep.passed else 'FAIL'} "
                   f"({len(rep.lines) - len(rep.failures)}/{len(rep.lines)} comparisons agree)")
    if not rep.passed:
        raise CliError(1, f"suite {rep.name} failed")


def cmd_refine(args, out):
    try:
        graph = load_graph(args.file)
    except (OSError, ValueError) as exc:
        raise CliError(2, str(exc)) from None
    if graph.mode != "tree":
        raise CliError(3, "mode: refine works on trees")
    out.append(format_graph(trivalent_refinement(graph)).rstrip("\n"))


def _add_system_args(p):
    p.add_argument("kind", choices=["string", "tensor3", "glue", "bz", "file"])
    p.add_argument("--type")
    p.add_argument("--word", help="comma separated, e.g. 1,2,1")
    p.add_argument("--weights", help="semicolon separated weights, e.g. '1,0;0,1'")
    p.add_argument("--tree", help="tree file")
    p.add_argument("--graph", help="graph file")
    p.add_argument("--m", type=int, help="SL_m for bz triangles")
    p.add_argument("--input", help="cone JSON file for kind 'file' ('-' for stdin)")


def build_parser():
    parser = argparse.ArgumentParser(prog="nocones", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument("--manifest", help="write a JSON run manifest here")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("cone", help="print an H-representation as JSON")
    _add_system_args(p)
    p.set_defaults(func=cmd_cone)

    p = sub.add_parser("count", help="count lattice points")
    _add_system_args(p)
    p.add_argument("--degree", type=int)
    p.add_argument("--grading", help="grading row for kind 'file'")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("oracle", help="character-theoretic values")
    p.add_argument("what", choices=["invdim", "tensor"])
    p.add_argument("--type")
    p.add_argument("--weights")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("verify", help="run an acceptance sweep")
    p.add_argument("suite", choices=sorted(SUITES))
    p.add_argument("--max", type=int)
    p.add_argument("--degree", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("refine", help="make a tree file trivalent")
    p.add_argument("file")
    p.set_defaults(func=cmd_refine)
    return parser


def _digests(args):
    out = {}
    for key in ("tree", "graph", "input", "file"):
        path = getattr(args, key, None)
        if path and path != "-":
            try:
                with open(path, "rb") as fh:
                    out[path] = hashlib.sha256(fh.read()).hexdigest()
            except OSError:
                pass
    return out


def main(argv=None):
    argv = list(sys.argv[1:] if argv is None else argv)
    args = build_parser().parse_args(argv)
    out = []
    t0 = time.perf_counter()
    code = 0
    try:
        args.func(args, out)
    except CliError as exc:
        code = exc.code
        if code != 1:
            print(f"error: {exc}", file=sys.stderr)
    except DecorationError as exc:
        code = 3
        print(f"error: invalid decoration: {exc}", file=sys.stderr)
    except UnboundedError as exc:
        code = 4
        print(f"error: {exc}; direction {list(exc.direction)}", file=sys.stderr)
    except InfeasibleError:
        out.append("0")
    text = "\n".join(out)
    if text:
        print(text)
    if args.manifest:
        RunManifest(argv, _digests(args), elapsed=round(time.perf_counter() - t0, 3), output=text).write(args.manifest)
    return code


if __name__ == "__main__":
    sys.exit(main())
