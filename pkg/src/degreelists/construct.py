"""Shifts on realizations and the transfer-path realization algorithm.

An (i, j)-shift moves a single 1 of row ``k`` from column ``i`` to column
``j``. Applied along a Muirhead transfer path that starts at a threshold
realization, shifts build a realization of any feasible list.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .core import (
    DIGRAPH,
    GRAPH,
    LOOPDIGRAPH,
    BinaryMatrix,
    InvalidListError,
    RealizationKind,
    Transfer,
    is_paired,
    lex_sort,
    split,
    validate,
)
from .feasibility import explain
from .ferrers import digraphic_ferrers, loop_digraphic_ferrers
from .majorize import is_majorized, muirhead_path


class RealizationError(RuntimeError):
    """No admissible shift on a feasible list: an implementation bug."""


def available_shifts(m: BinaryMatrix, i: int, j: int, kind: RealizationKind) -> list[int]:
    """Rows ``k`` that can move their 1 from column ``i`` to column ``j``."""
    kind = RealizationKind.parse(kind)
    if i == j:
        raise InvalidListError("a shift needs two different columns")
    out = []
    for k in range(m.n):
        if m[k, i] != 1 or m[k, j] != 0:
            continue
        if kind is DIGRAPH and k == j:
            continue
        if kind is GRAPH and k in (i, j):
            continue
        out.append(k)
    return out


def apply_shift(m: BinaryMatrix, i: int, j: int, k: int, kind: RealizationKind) -> BinaryMatrix:
    """Move row ``k``'s 1 from column ``i`` to ``j`` (and the mirror entries for GRAPH)."""
    kind = RealizationKind.parse(kind)
    if k not in available_shifts(m, i, j, kind):
        raise InvalidListError(f"row {k + 1} admits no ({i + 1},{j + 1})-shift")
    changes = {(k, i): 0, (k, j): 1}
    if kind is GRAPH:
        changes.update({(i, k): 0, (j, k): 1})
    return m.with_entries(changes)


def are_shift_adjacent(m1: BinaryMatrix, m2: BinaryMatrix, i: int, j: int, kind: RealizationKind) -> bool:
    """True iff ``m1`` and ``m2`` differ by an alternating 4-cycle on columns i, j.

    ``m1`` holds (k, i) and (k', j), ``m2`` holds (k, j) and (k', i). For
    DIGRAPH and GRAPH, k and k' must avoid i and j.
    """
    kind = RealizationKind.parse(kind)
    if m1.margins() != m2.margins():
        raise InvalidListError("matrices realize different lists")
    diff = {(r, c) for r in range(m1.n) for c in range(m1.n) if m1[r, c] != m2[r, c]}
    if kind is GRAPH:
        upper = {(r, c) for r, c in diff if r != i and r != j}
        rows = {r for r, _ in upper}
        if len(diff) != 8 or len(rows) != 2:
            return False
    elif len(diff) != 4:
        return False
    k_rows = [r for r in range(m1.n) if m1[r, i] == 1 and m2[r, i] == 0]
    kp_rows = [r for r in range(m1.n) if m1[r, j] == 1 and m2[r, j] == 0]
    if len(k_rows) != 1 or len(kp_rows) != 1:
        return False
    k, kp = k_rows[0], kp_rows[0]
    if k == kp:
        return False
    expected = {(k, i), (kp, j), (k, j), (kp, i)}
    if kind is GRAPH:
        expected |= {(c, r) for r, c in expected}
    if diff != expected or m2[k, j] != 1 or m2[kp, i] != 1:
        return False
    if kind is not LOOPDIGRAPH and ({k, kp} & {i, j}):
        return False
    return True


@dataclass(frozen=True)
class Step:
    transfer: Transfer
    row: int
    options: tuple[int, ...] = ()

    def __str__(self) -> str:
        opts = ",".join(str(k + 1) for k in self.options)
        return f"transfer {self.transfer} shift row {self.row + 1}" + (f" options {opts}" if opts else "")


@dataclass
class RealizationTrace:
    matrix: BinaryMatrix | None
    kind: RealizationKind
    ordered: tuple = ()
    permutation: tuple[int, ...] = ()
    threshold: tuple = ()
    steps: list[Step] = field(default_factory=list)
    matrices: list[BinaryMatrix] = field(default_factory=list)

    @property
    def feasible(self) -> bool:
        return self.matrix is not None


def _relabel(m: BinaryMatrix, perm: Sequence[int]) -> BinaryMatrix:
    # perm[p] is the original position of sorted position p
    n = m.n
    out = [[0] * n for _ in range(n)]
    for p in range(n):
        for q in range(n):
            out[perm[p]][perm[q]] = m[p, q]
    return BinaryMatrix(tuple(tuple(r) for r in out))


def _reverse_transfers(x: tuple[int, ...]):
    n = len(x)
    for i in range(n):
        for j in range(n - 1, i, -1):
            if x[j] > 0 and x[i] + 1 <= n - 1:
                y = list(x)
                y[i] += 1
                y[j] -= 1
                yield tuple(sorted(y, reverse=True))


def graphic_threshold_majorant(a: Sequence[int]) -> tuple[int, ...]:
    """A nonincreasing graphic threshold list majorizing the graphic list ``a``.

    Climbs the majorization order by single reverse transfers through
    graphic lists until the graphic Ferrers matrix is symmetric.
    """
    x = tuple(sorted(a, reverse=True))
    while True:
        fm = digraphic_ferrers(tuple(zip(x, x)))
        if fm.col_sums() == x and fm.is_symmetric():
            return x
        for y in _reverse_transfers(x):
            if explain(y, GRAPH).feasible:
                x = y
                break
        else:
            raise RealizationError(f"no graphic list strictly majorizes {x}, yet it is not threshold")


def realization_trace(values, kind: RealizationKind, enumerate_shifts: bool = False) -> RealizationTrace:
    """Build a realization by shifts along the Muirhead path.

    The list is sorted (lexicographically for digraphs, nonincreasing ``a``
    otherwise), the threshold realization is built, one shift per transfer is
    applied choosing the smallest admissible row, and the result is mapped
    back to the caller's labelling.
    """
    kind = RealizationKind.parse(kind)
    if validate(values, kind).violations or not explain(values, kind).feasible:
        return RealizationTrace(None, kind)

    if kind is GRAPH:
        perm = tuple(sorted(range(len(values)), key=lambda p: -values[p]))
        a = tuple(values[p] for p in perm)
        start_list = graphic_threshold_majorant(a)
        m = digraphic_ferrers(tuple(zip(start_list, start_list)))
        ordered, threshold = a, start_list
    else:
        if kind is DIGRAPH:
            ordered, perm = lex_sort(values)
            m = digraphic_ferrers(ordered)
        else:
            perm = tuple(sorted(range(len(values)), key=lambda p: -values[p][0]))
            ordered = tuple(values[p] for p in perm)
            m = loop_digraphic_ferrers(ordered)
        a = split(ordered)[0]
        start_list = m.col_sums()
        threshold = tuple(zip(start_list, split(ordered)[1]))

    if not is_majorized(a, start_list):
        raise RealizationError(f"{a} is feasible but not majorized by its threshold {start_list}")
    path = muirhead_path(a, start_list)
    trace = RealizationTrace(None, kind, ordered, perm, threshold, matrices=[m])
    for t in path.steps:
        options = available_shifts(m, t.i, t.j, kind)
        if not options:
            raise RealizationError(f"no admissible shift for {t} on\n{m}")
        m = apply_shift(m, t.i, t.j, options[0], kind)
        trace.steps.append(Step(t, options[0], tuple(options) if enumerate_shifts else ()))
        trace.matrices.append(m)
    got = m.col_sums() if kind is GRAPH else m.margins()
    if got != ordered or not m.satisfies(kind):
        raise RealizationError(f"realized margins {got} differ from {ordered}")
    trace.matrix = _relabel(m, perm)
    return trace


def realize(values, kind: RealizationKind) -> BinaryMatrix | None:
    """A realization of ``values``, or ``None`` when the list is infeasible."""
    if not is_paired(values) and RealizationKind.parse(kind) is not GRAPH:
        raise InvalidListError("directed kinds need a paired list")
    return realization_trace(values, kind).matrix
