"""Exhaustive small-universe checks of the count monotonicity results.

Every experiment walks a finite universe of lists, compares exact counts and
returns an :class:`ExperimentReport`. Rows are kept only for violations and
(where the statement allows them) equalities, so reports stay short; the
summary line carries the number of comparisons made.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import permutations, product
from typing import Callable, Iterable

from .core import (
    DIGRAPH,
    GRAPH,
    LOOPDIGRAPH,
    RealizationKind,
    format_list,
    is_nondecreasing,
    is_nonincreasing,
    join,
    lex_sort,
    split,
)
from .count import count, count_realizations, lower_bound
from .extremal import opposed_sort, staircase_family, verify_extremal_max
from .feasibility import is_feasible
from .majorize import is_majorized


@dataclass
class ExperimentReport:
    theorem: str
    statement: str
    checked: int = 0
    violations: list[tuple] = field(default_factory=list)
    equalities: list[tuple] = field(default_factory=list)
    require_equality: bool = False
    extra: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations and (self.equalities or not self.require_equality)

    def summary(self) -> str:
        return (
            f"{self.theorem}: {'PASS' if self.passed else 'FAIL'} checked={self.checked} "
            f"violations={len(self.violations)} equalities={len(self.equalities)}"
        )

    def to_tsv(self) -> str:
        lines = [
            f"# theorem\t{self.theorem}",
            f"# statement\t{self.statement}",
            f"# checked={self.checked}\tviolations={len(self.violations)}"
            f"\tequalities={len(self.equalities)}\tresult={'PASS' if self.passed else 'FAIL'}",
        ]
        lines += [f"# {x}" for x in self.extra]
        lines.append("list\tcount\tflags")
        for tag, rows in (("violation", self.violations), ("equality", self.equalities)):
            for row in rows:
                lines.append(_row(row, tag))
        return "\n".join(lines) + "\n"


def _row(row: tuple, tag: str) -> str:
    # (before, after, n_before, n_after)
    before, after, nb, na = row
    return f"{format_list(before)} -> {format_list(after)}\t{nb} -> {na}\t{tag}"


# ---------------------------------------------------------------------------
# universes


def balanced_lists(max_n: int, kind: RealizationKind, cap: int | None = None, min_n: int = 1):
    """Every paired list with n in [min_n, max_n], entries within kind bounds (and ``cap``), equal sums."""
    for n in range(min_n, max_n + 1):
        hi = kind.max_entry(n) if cap is None else min(cap, kind.max_entry(n))
        by_sum: dict[int, list[tuple[int, ...]]] = {}
        for v in product(range(hi + 1), repeat=n):
            by_sum.setdefault(sum(v), []).append(v)
        for vs in by_sum.values():
            for a in vs:
                for b in vs:
                    yield join(a, b)


def graph_lists(max_n: int, cap: int | None = None, nonincreasing: bool = True, min_n: int = 1):
    for n in range(min_n, max_n + 1):
        hi = n - 1 if cap is None else min(cap, n - 1)
        for v in product(range(hi + 1), repeat=n):
            if sum(v) % 2 == 0 and (not nonincreasing or is_nonincreasing(v)):
                yield v


def _right_transfers(x):
    n = len(x)
    for i in range(n):
        for j in range(i + 1, n):
            if x[i] >= x[j] + 2:
                y = list(x)
                y[i] -= 1
                y[j] += 1
                yield tuple(y)


# ---------------------------------------------------------------------------
# per-list checks; each returns (checked, violations, equalities)


def _check_loop_transfer(pairs):
    ap, b = split(pairs)
    n0 = count(pairs, LOOPDIGRAPH)
    if not n0:
        return 0, [], []
    out = (0, [], [])
    for a in _right_transfers(ap):
        q = join(a, b)
        n1 = count(q, LOOPDIGRAPH)
        out = _tally(out, pairs, q, n0, n1, strict=True)
    return out


def _check_digraph_transfer(pairs):
    ap, b = split(pairs)
    n0 = count(pairs, DIGRAPH)
    if not n0:
        return 0, [], []
    out = (0, [], [])
    for a in _right_transfers(ap):
        q = join(a, b)
        out = _tally(out, pairs, q, n0, count(q, DIGRAPH), strict=False)
    return out


def _check_digraph_lex(pairs):
    ap, b = split(pairs)
    n0 = count(pairs, DIGRAPH)
    if not n0:
        return 0, [], []
    out = (0, [], [])
    for a in _right_transfers(ap):
        q = join(a, b)
        if lex_sort(q)[0] != q:
            continue
        out = _tally(out, pairs, q, n0, count(q, DIGRAPH), strict=True)
    return out


def _check_left_transfer(pairs):
    ap, b = split(pairs)
    if not is_nondecreasing(b):
        return 0, [], []
    n0 = count(pairs, DIGRAPH)
    if not n0:
        return 0, [], []
    out = (0, [], [])
    n = len(ap)
    for i in range(n):
        for j in range(i + 1, n):
            if ap[i] < ap[j]:
                a = list(ap)
                a[i] += 1
                a[j] -= 1
                q = join(a, b)
                out = _tally(out, pairs, q, n0, count(q, DIGRAPH), strict=False)
    return out


def _check_opposed(pairs):
    n0 = count(pairs, DIGRAPH)
    if not n0:
        return 0, [], []
    q = opposed_sort(pairs)
    n1 = count(q, DIGRAPH)
    return _tally((0, [], []), pairs, q, n0, n1, strict=False, equal_rows=False)


def _check_graph_transfer(ap):
    n0 = count(ap, GRAPH)
    if not n0:
        return 0, [], []
    out = (0, [], [])
    for a in _right_transfers(ap):
        if is_nonincreasing(a):
            out = _tally(out, ap, a, n0, count(a, GRAPH), strict=True)
    return out


def _tally(acc, before, after, nb, na, strict, equal_rows=True):
    checked, viol, eq = acc
    row = (before, after, nb, na)
    if na < nb or (strict and na == nb):
        viol = viol + [row]
    elif na == nb and equal_rows:
        eq = eq + [row]
    return checked + 1, viol, eq


def _run(report: ExperimentReport, check: Callable, items: Iterable, jobs: int = 1) -> ExperimentReport:
    items = list(items)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(check, items, chunksize=max(1, len(items) // (8 * jobs))))
    else:
        results = map(check, items)
    for checked, viol, eq in results:
        report.checked += checked
        report.violations += viol
        report.equalities += eq
    return report


# ---------------------------------------------------------------------------
# experiments


def loop_transfer(jobs: int = 1, max_n: int = 4, cap: int = 4) -> ExperimentReport:
    r = ExperimentReport("loop-transfer", "unit transfer a'->a on loop-digraphic (a',b) gives N1(a,b) > N1(a',b)")
    return _run(r, _check_loop_transfer, balanced_lists(max_n, LOOPDIGRAPH, cap), jobs)


def loop_majorization(jobs: int = 1, max_n: int = 4, cap: int = 4) -> ExperimentReport:
    """a nonincreasing, a strictly below a' in majorization, both feasible: N1 strictly larger."""
    r = ExperimentReport("loop-majorization", "a < a' (a != a'), both loop-digraphic: N1(a,b) > N1(a',b)")
    for n in range(1, max_n + 1):
        hi = min(cap, n)
        parts: dict[int, list] = {}
        for v in product(range(hi + 1), repeat=n):
            if is_nonincreasing(v):
                parts.setdefault(sum(v), []).append(v)
        for s, vs in parts.items():
            for b in product(range(hi + 1), repeat=n):
                if sum(b) != s:
                    continue
                counts = {a: count(join(a, b), LOOPDIGRAPH) for a in vs}
                for a in vs:
                    for ap in vs:
                        if a == ap or not counts[a] or not counts[ap] or not is_majorized(a, ap):
                            continue
                        r.checked += 1
                        if counts[a] <= counts[ap]:
                            r.violations.append((join(ap, b), join(a, b), counts[ap], counts[a]))
    return r


def digraph_transfer(jobs: int = 1, max_n: int = 4) -> ExperimentReport:
    r = ExperimentReport(
        "digraph-transfer",
        "unit transfer a'->a on digraphic (a',b) gives N2(a,b) >= N2(a',b); an equality must occur",
        require_equality=True,
    )
    return _run(r, _check_digraph_transfer, balanced_lists(max_n, DIGRAPH), jobs)


def digraph_lex(jobs: int = 1, max_n: int = 4) -> ExperimentReport:
    r = ExperimentReport(
        "digraph-lex", "unit transfer a'->a, (a,b) lexicographically sorted, (a',b) digraphic: N2(a,b) > N2(a',b)"
    )
    return _run(r, _check_digraph_lex, balanced_lists(max_n, DIGRAPH), jobs)


def graph_transfer(jobs: int = 1, max_n: int = 6, cap: int = 5) -> ExperimentReport:
    r = ExperimentReport("graph-transfer", "a nonincreasing, unit transfer from graphic a': N3(a) > N3(a')")
    return _run(r, _check_graph_transfer, graph_lists(max_n, cap, nonincreasing=False), jobs)


def left_transfer(jobs: int = 1, max_n: int = 4) -> ExperimentReport:
    r = ExperimentReport(
        "left-transfer",
        "b nondecreasing, left-transfer a'->a'+e_i-e_j with i<j and a'_i < a'_j: N2(a,b) >= N2(a',b)",
    )
    return _run(r, _check_left_transfer, balanced_lists(max_n, DIGRAPH), jobs)


def opposed_dominance(jobs: int = 1, max_n: int = 4) -> ExperimentReport:
    r = ExperimentReport("opposed-dominance", "digraphic (a,b): its opposed list has N2 >= N2(a,b)")
    return _run(r, _check_opposed, balanced_lists(max_n, DIGRAPH), jobs)


def exponential_family(sizes=(4, 5, 6)) -> ExperimentReport:
    r = ExperimentReport("exponential-family", "staircase target: N1 >= 2^(n-2) and lower_bound <= N1")
    for n in sizes:
        threshold, target = staircase_family(n)
        exact = count(target, LOOPDIGRAPH)
        lb = lower_bound(target)
        r.checked += 1
        r.extra.append(
            f"n={n}\ttarget={format_list(target)}\tN1={exact}\t2^(n-2)={2 ** (n - 2)}"
            f"\tlower_bound={lb.lower_bound}\t{lb.note}"
        )
        if exact < 2 ** (n - 2) or lb.lower_bound > exact or count(threshold, LOOPDIGRAPH) != 1:
            r.violations.append((threshold, target, lb.lower_bound, exact))
    return r


def permutation_invariance(jobs: int = 1, max_n: int = 4) -> ExperimentReport:
    """Exhaustive: every loop-digraphic list and every rearrangement of b."""
    r = ExperimentReport("permutation-invariance", "N1(a,b) = N1(a,b_sigma) for every permutation sigma")
    for pairs in balanced_lists(max_n, LOOPDIGRAPH):
        a, b = split(pairs)
        n0 = count(pairs, LOOPDIGRAPH)
        if not n0:
            continue
        for bs in set(permutations(b)):
            q = join(a, bs)
            r.checked += 1
            n1 = count(q, LOOPDIGRAPH)
            if n1 != n0:
                r.violations.append((pairs, q, n0, n1))
    witness = (((2, 1), (1, 0), (0, 2)), ((2, 0), (1, 1), (0, 2)))
    n_a, n_b = (count(w, DIGRAPH) for w in witness)
    r.extra.append(f"digraph non-invariance witness\t{format_list(witness[0])}={n_a}\t{format_list(witness[1])}={n_b}")
    return r


EXTREMAL_CASES = ((4, 6, LOOPDIGRAPH), (3, 3, DIGRAPH), (4, 4, DIGRAPH), (5, 4, GRAPH), (4, 6, GRAPH))


def minconvex(cases=EXTREMAL_CASES) -> ExperimentReport:
    r = ExperimentReport("minconvex", "minconvex (opposed for digraphs) lists maximize the count")
    for n, m, kind in cases:
        rep = verify_extremal_max(n, m, kind)
        r.checked += len(rep.rows)
        r.extra.append(
            f"n={n}\tm={m}\tkind={kind.value}\treference={format_list(rep.reference)}"
            f"\tcount={rep.reference_count}\tmax={rep.max_count}\t{'PASS' if rep.passed else 'FAIL'}"
        )
        if not rep.passed:
            r.violations += [(rep.reference, lst, rep.reference_count, c) for lst, c in rep.violations] or [
                (rep.reference, rep.reference, rep.reference_count, rep.max_count)
            ]
    return r


def random_permutation_invariance(rng: random.Random, lists: int = 50, perms: int = 20, max_n: int = 4):
    """Sampled variant: ``lists`` random loop-digraphic lists, ``perms`` random b-rearrangements each."""
    universe = [p for p in balanced_lists(max_n, LOOPDIGRAPH) if is_feasible(p, LOOPDIGRAPH)]
    r = ExperimentReport("permutation-invariance-sampled", "N1(a,b) = N1(a,b_sigma)")
    for pairs in rng.sample(universe, lists):
        a, b = split(pairs)
        n0 = count_realizations(pairs, LOOPDIGRAPH).exact
        for _ in range(perms):
            bs = list(b)
            rng.shuffle(bs)
            q = join(a, bs)
            r.checked += 1
            n1 = count_realizations(q, LOOPDIGRAPH).exact
            if n1 != n0:
                r.violations.append((pairs, q, n0, n1))
    return r


EXPERIMENTS: dict[str, Callable[..., ExperimentReport]] = {
    "loop-transfer": loop_transfer,
    "loop-majorization": loop_majorization,
    "digraph-transfer": digraph_transfer,
    "digraph-lex": digraph_lex,
    "graph-transfer": graph_transfer,
    "left-transfer": left_transfer,
    "opposed-dominance": opposed_dominance,
    "exponential-family": exponential_family,
    "permutation-invariance": permutation_invariance,
    "minconvex": minconvex,
}

PARALLEL = {"loop-transfer", "digraph-transfer", "digraph-lex", "graph-transfer", "left-transfer", "opposed-dominance"}


def run_experiment(name: str, jobs: int = 1) -> ExperimentReport:
    if name not in EXPERIMENTS:
        raise KeyError(f"unknown experiment {name!r}; choose from {', '.join(EXPERIMENTS)}")
    fn = EXPERIMENTS[name]
    return fn(jobs=jobs) if name in PARALLEL else fn()
