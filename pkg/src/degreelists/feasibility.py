"""Realizability tests: Gale-Ryser, Fulkerson-Chen-Anstee, Erdős-Gallai.

Each test compares the list against its corresponding threshold list in the
majorization order. :func:`brute_force_realizable` is an independent oracle
that only searches matrices and knows nothing about the theorems.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Sequence

from .core import (
    DIGRAPH,
    GRAPH,
    LOOPDIGRAPH,
    InvalidListError,
    PairedList,
    RealizationKind,
    is_nonincreasing,
    is_paired,
    lex_sort,
    split,
    validate,
)
from .ferrers import corresponding_threshold_list
from .majorize import is_majorized


@dataclass(frozen=True)
class Verdict:
    feasible: bool
    reason: str = ""
    sorted_list: tuple = ()
    threshold: tuple = ()

    def __bool__(self) -> bool:
        return self.feasible


def _invalid(values, kind) -> str:
    report = validate(values, kind)
    return "; ".join(report.violations)


def explain(values, kind: RealizationKind, order: Sequence[int] | None = None) -> Verdict:
    """Run the characterization test for ``kind`` and keep the evidence.

    ``order`` (DIGRAPH only) is a permutation applied to the pairs before
    building the Ferrers matrix; it must leave ``a`` nonincreasing. By default
    the list is sorted lexicographically. Loop-digraph verdicts keep the
    caller's order, since ``a'`` is the conjugate of ``b`` in any order.
    """
    kind = RealizationKind.parse(kind)
    problem = _invalid(values, kind)
    if problem:
        return Verdict(False, problem)

    if kind is GRAPH:
        a = tuple(sorted(values, reverse=True))
        aprime = corresponding_threshold_list(a, GRAPH)
        ok = is_majorized(a, aprime)
        return Verdict(ok, "" if ok else f"{a} not majorized by threshold {aprime}", a, aprime)

    if kind is LOOPDIGRAPH:
        # a' does not depend on the order; only a is sorted for the comparison
        thr = corresponding_threshold_list(tuple(values), kind)
        a, aprime = tuple(sorted(split(values)[0], reverse=True)), split(thr)[0]
        ok = is_majorized(a, aprime)
        return Verdict(ok, "" if ok else f"{a} not majorized by threshold {aprime}", tuple(values), thr)
    if order is None:
        pairs, _ = lex_sort(values)
    else:
        if sorted(order) != list(range(len(values))):
            raise InvalidListError(f"{order} is not a permutation of the positions")
        pairs = tuple(values[k] for k in order)
        if not is_nonincreasing(split(pairs)[0]):
            raise InvalidListError("order must leave the indegrees nonincreasing")
    thr = corresponding_threshold_list(pairs, kind)
    a, aprime = split(pairs)[0], split(thr)[0]
    ok = is_majorized(a, aprime)
    return Verdict(ok, "" if ok else f"{a} not majorized by threshold {aprime}", pairs, thr)


def gale_ryser(pairs: PairedList) -> bool:
    """Loop-digraphic test: sorted ``a`` ≺ conjugate of ``b``."""
    return explain(pairs, LOOPDIGRAPH).feasible


def fulkerson_chen_anstee(pairs: PairedList, order: Sequence[int] | None = None) -> bool:
    """Digraphic test against the digraphic threshold list of ``pairs``."""
    return explain(pairs, DIGRAPH, order).feasible


def erdos_gallai(a: Sequence[int]) -> bool:
    """Graphic test against the graphic threshold list of ``a``."""
    return explain(tuple(a), GRAPH).feasible


def is_feasible(values, kind: RealizationKind) -> bool:
    return explain(values, kind).feasible


# ---------------------------------------------------------------------------
# brute force oracle

DEFAULT_ORACLE_LIMIT = 8


def brute_force_realizable(values, kind: RealizationKind, limit: int = DEFAULT_ORACLE_LIMIT) -> bool:
    """Search for any 0/1 matrix with the required margins and shape.

    Rows are filled one at a time; the only pruning is that residual column
    sums stay nonnegative and dead (row, residual) states are remembered.
    """
    kind = RealizationKind.parse(kind)
    n = len(values)
    if n > limit:
        raise InvalidListError(f"oracle size guard: n={n} exceeds limit {limit}")
    if n == 0:
        return True
    flat = [v for p in values for v in p] if is_paired(values) else list(values)
    if any(v < 0 for v in flat):
        return False
    if kind is GRAPH:
        if is_paired(values):
            return False
        return _search_symmetric(tuple(values))
    if not is_paired(values):
        return False
    a, b = split(values)
    if sum(a) != sum(b):
        return False
    return _search_directed(a, b, kind is DIGRAPH)


def _search_directed(a, b, loopless: bool) -> bool:
    n = len(a)

    @lru_cache(maxsize=None)
    def go(row: int, cols: tuple) -> bool:
        if row == n:
            return not any(cols)
        allowed = [j for j in range(n) if cols[j] > 0 and not (loopless and j == row)]
        for chosen in combinations(allowed, b[row]):
            nxt = list(cols)
            for j in chosen:
                nxt[j] -= 1
            if go(row + 1, tuple(nxt)):
                return True
        return False

    return go(0, tuple(a))


def _search_symmetric(d) -> bool:
    n = len(d)
    if any(x > n for x in d):
        return False

    @lru_cache(maxsize=None)
    def go(row: int, res: tuple) -> bool:
        if row == n:
            return True
        need = res[row]
        allowed = [j for j in range(row + 1, n) if res[j] > 0]
        for chosen in combinations(allowed, need):
            nxt = list(res)
            nxt[row] = 0
            for j in chosen:
                nxt[j] -= 1
            if go(row + 1, tuple(nxt)):
                return True
        return False

    return go(0, tuple(d))
