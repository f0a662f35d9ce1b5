"""Command-line front end.

Exit codes: 2 for invalid input, 1 when ``check`` or ``realize`` finds the
list infeasible, 0 otherwise.
"""

from __future__ import annotations

import argparse
import json
import logging
import re
import sys

from .construct import realization_trace
from .core import (
    GRAPH,
    InvalidListError,
    RealizationKind,
    format_list,
    is_paired,
    parse_list,
    split,
    to_json,
    validate,
)
from .count import count_realizations, enumerate_realizations, lower_bound
from .experiments import EXPERIMENTS, run_experiment
from .extremal import minconvex_paired, verify_extremal_max
from .feasibility import explain
from .ferrers import threshold_of
from .majorize import is_majorized, muirhead_path

log = logging.getLogger("degreelists")

ADJECTIVE = {"graph": "graphic", "loopdigraph": "loop-digraphic", "digraph": "digraphic"}


class UsageError(Exception):
    pass


def _read_input(path: str, stdin) -> str:
    if path == "-":
        return stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _load(args, stdin):
    values = parse_list(_read_input(args.input, stdin))
    kind = RealizationKind.parse(args.kind)
    if kind is GRAPH and is_paired(values):
        raise InvalidListError("graph kind expects a plain degree list")
    if kind is not GRAPH and not is_paired(values):
        raise InvalidListError(f"{kind.value} kind expects one 'indegree outdegree' pair per line")
    report = validate(values, kind, strict=args.strict)
    if not report.ok:
        raise InvalidListError("; ".join(report.violations))
    return values, kind


def _parse_inline(text: str):
    tokens = [t for t in re.split(r"[\s,()]+", text) if t]
    try:
        return tuple(int(t) for t in tokens)
    except ValueError:
        raise InvalidListError(f"cannot read integer list from {text!r}") from None


def _matrix_out(m, emit: str) -> str:
    if emit == "json":
        return json.dumps({"matrix": [list(r) for r in m.rows]})
    if emit == "tsv":
        return "\t".join("".join(map(str, r)) for r in m.rows)
    return m.to_text()


# ---------------------------------------------------------------------------
# subcommands


def cmd_check(args, out, stdin) -> int:
    values, kind = _load(args, stdin)
    v = explain(values, kind)
    word = ADJECTIVE[kind.value]
    if args.emit == "json":
        print(json.dumps({
            "kind": kind.value,
            "feasible": v.feasible,
            "sorted": to_json(v.sorted_list),
            "threshold": to_json(v.threshold),
            "reason": v.reason,
        }), file=out)
    elif args.emit == "tsv":
        print("list\tthreshold\tresult", file=out)
        print(f"{format_list(v.sorted_list)}\t{format_list(v.threshold)}\t{word if v else 'not ' + word}", file=out)
    else:
        print(word if v else f"not {word}: {v.reason}", file=out)
    return 0 if v else 1


def cmd_realize(args, out, stdin) -> int:
    values, kind = _load(args, stdin)
    trace = realization_trace(values, kind, enumerate_shifts=args.enumerate_shifts)
    if not trace.feasible:
        print(f"not {ADJECTIVE[kind.value]}", file=sys.stderr)
        return 1
    if args.trace or args.enumerate_shifts:
        err = sys.stderr
        print(f"# sorted {format_list(trace.ordered)} threshold {format_list(trace.threshold)}", file=err)
        print(f"# permutation {' '.join(str(p + 1) for p in trace.permutation)}", file=err)
        for step in trace.steps:
            print(f"# {step}", file=err)
    print(_matrix_out(trace.matrix, args.emit), file=out)
    return 0


def cmd_count(args, out, stdin) -> int:
    values, kind = _load(args, stdin)
    res = count_realizations(values, kind, limit=args.limit, jobs=args.jobs)
    if args.emit == "json":
        print(json.dumps({"count": res.value, "exact": res.exact is not None,
                          "method": res.method, "note": res.note}), file=out)
    else:
        tag = res.method + (f"\t{res.note}" if res.note else "")
        print(f"{res.value}\t{tag}", file=out)
    return 0


def cmd_enumerate(args, out, stdin) -> int:
    values, kind = _load(args, stdin)
    mats = list(enumerate_realizations(values, kind, max_emit=args.max, limit=args.limit))
    if args.emit == "json":
        print(json.dumps({"matrices": [[list(r) for r in m.rows] for m in mats]}), file=out)
    elif args.emit == "tsv":
        for m in mats:
            print(_matrix_out(m, "tsv"), file=out)
    else:
        print("\n\n".join(m.to_text() for m in mats), file=out)
    return 0


def cmd_path(args, out, stdin) -> int:
    if args.input is not None:
        values, kind = _load(args, stdin)
        if kind is GRAPH:
            raise InvalidListError("path from a list needs a paired list (loopdigraph or digraph)")
        ordered, thr = threshold_of(values, kind)
        a, aprime = split(ordered)[0], split(thr)[0]
        if not is_majorized(a, aprime):
            raise InvalidListError(f"{format_list(ordered)} is not {ADJECTIVE[kind.value]}")
    elif args.a is not None and args.aprime is not None:
        a, aprime = _parse_inline(args.a), _parse_inline(args.aprime)
    else:
        raise UsageError("path needs --a and --aprime, or an input list")
    path = muirhead_path(a, aprime)
    if args.emit == "json":
        print(json.dumps({
            "start": list(path.start),
            "steps": [list(t.one_based()) for t in path.steps],
            "lists": [list(x) for x in path.lists()],
            "kappa": path.kappa,
        }), file=out)
    elif args.emit == "tsv":
        print("step\ttransfer\tlist", file=out)
        print(f"0\t-\t{format_list(path.start)}", file=out)
        for k, (t, x) in enumerate(zip(path.steps, path.intermediates), 1):
            print(f"{k}\t{t}\t{format_list(x)}", file=out)
    else:
        print(",".join(str(t) for t in path.steps) if path.steps else "(empty path)", file=out)
    return 0


def cmd_bound(args, out, stdin) -> int:
    values, kind = _load(args, stdin)
    if kind is not RealizationKind.LOOPDIGRAPH:
        raise InvalidListError("bound is defined for loop-digraph lists only")
    res = lower_bound(values)
    if args.emit == "json":
        print(json.dumps({"lower_bound": res.lower_bound, "method": res.method, "note": res.note}), file=out)
    else:
        print(f"{res.lower_bound}\t{res.method}\t{res.note}", file=out)
    return 0


def cmd_minconvex(args, out, stdin) -> int:
    kind = RealizationKind.parse(args.kind)
    if args.verify:
        report = verify_extremal_max(args.n, args.m, kind)
        out.write(report.to_tsv())
        return 0
    sigma = args.sigma
    if sigma not in (None, "opposed", "identity"):
        sigma = [k - 1 for k in _parse_inline(sigma)]
    pairs = minconvex_paired(args.n, args.m, kind, sigma)
    values = split(pairs)[0] if kind is GRAPH else pairs
    if args.emit == "json":
        print(json.dumps(to_json(values)), file=out)
    elif is_paired(values):
        print("\n".join(f"{a} {b}" for a, b in values), file=out)
    else:
        print(" ".join(map(str, values)), file=out)
    return 0


def cmd_experiment(args, out, stdin) -> int:
    names = list(EXPERIMENTS) if args.theorem == "all" else [args.theorem]
    for name in names:
        report = run_experiment(name, jobs=args.jobs)
        if args.emit == "json":
            print(json.dumps({
                "theorem": report.theorem,
                "passed": bool(report.passed),
                "checked": report.checked,
                "violations": len(report.violations),
                "equalities": len(report.equalities),
            }), file=out)
        else:
            out.write(report.to_tsv())
        log.info(report.summary())
    return 0


# ---------------------------------------------------------------------------
# argument parsing


def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {v}")
    return v


def _positive(text: str) -> int:
    v = _nonneg(text)
    if v == 0:
        raise argparse.ArgumentTypeError("expected a positive integer")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--kind", choices=["graph", "loopdigraph", "digraph"], default="loopdigraph")
    common.add_argument("--strict", action="store_true", help="reject (0,0) pairs and 0 degrees")
    common.add_argument("--emit", choices=["json", "matrix", "tsv"], default="matrix")
    common.add_argument("--limit", type=_positive, default=8, help="enumeration size guard (default 8)")
    common.add_argument("--seed", type=_nonneg, default=None, help="reserved; accepted and ignored")
    common.add_argument("--jobs", type=_positive, default=1, help="worker processes (default 1)")
    common.add_argument("-v", "--verbose", action="store_true")

    p = argparse.ArgumentParser(prog="degreelists", description="Degree-list realization toolkit.")
    sub = p.add_subparsers(dest="command", required=True)

    def with_input(name, help_text):
        sp = sub.add_parser(name, parents=[common], help=help_text)
        sp.add_argument("input", help="list file, or - for stdin")
        return sp

    with_input("check", "test feasibility against the threshold list")
    sp = with_input("realize", "build a realization by shifts along the transfer path")
    sp.add_argument("--trace", action="store_true", help="print the transfer/shift sequence to stderr")
    sp.add_argument("--enumerate-shifts", action="store_true", help="also list every admissible shift row")
    with_input("count", "exact number of realizations")
    sp = with_input("enumerate", "list realizations")
    sp.add_argument("--max", type=_nonneg, default=None, help="stop after N matrices")
    with_input("bound", "transfer-path lower bound on the loop-digraph count")

    sp = sub.add_parser("path", parents=[common], help="Muirhead transfer path from a' down to a")
    sp.add_argument("input", nargs="?", default=None, help="list file (path from its threshold list), or -")
    sp.add_argument("--a", help="target list, e.g. '2,2,2,0'")
    sp.add_argument("--aprime", help="starting list, e.g. '4,2,0,0'")

    sp = sub.add_parser("minconvex", parents=[common], help="minconvex list for n vertices and m arcs/edges")
    sp.add_argument("--n", type=_positive, required=True)
    sp.add_argument("--m", type=_nonneg, required=True)
    sp.add_argument("--sigma", default=None, help="'opposed', 'identity' or a 1-based permutation")
    sp.add_argument("--verify", action="store_true", help="count every list with this n, m and report")

    sp = sub.add_parser("experiment", parents=[common], help="exhaustive small-universe checks")
    sp.add_argument("--theorem", choices=list(EXPERIMENTS) + ["all"], default="all")
    return p


COMMANDS = {
    "check": cmd_check,
    "realize": cmd_realize,
    "count": cmd_count,
    "enumerate": cmd_enumerate,
    "path": cmd_path,
    "bound": cmd_bound,
    "minconvex": cmd_minconvex,
    "experiment": cmd_experiment,
}


def run(argv=None, out=None, stdin=None) -> int:
    out = sys.stdout if out is None else out
    stdin = sys.stdin if stdin is None else stdin
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    if args.seed is not None:
        log.warning("--seed has no effect: no command uses randomness")
    try:
        return COMMANDS[args.command](args, out, stdin)
    except (InvalidListError, UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
