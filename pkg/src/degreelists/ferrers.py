"""Ferrers matrices, corresponding threshold lists and threshold detection."""

from __future__ import annotations

from .core import (
    DIGRAPH,
    GRAPH,
    LOOPDIGRAPH,
    BinaryMatrix,
    InvalidListError,
    PairedList,
    RealizationKind,
    is_nonincreasing,
    is_paired,
    join,
    lex_sort,
    split,
)
from .majorize import conjugate


def _check_a_sorted(pairs: PairedList) -> None:
    a, _ = split(pairs)
    if not is_nonincreasing(a):
        raise InvalidListError(f"indegrees {a} must be nonincreasing")


def loop_digraphic_ferrers(pairs: PairedList) -> BinaryMatrix:
    """Row ``i`` holds ``b_i`` leading ones."""
    _check_a_sorted(pairs)
    n = len(pairs)
    rows = []
    for _, b in pairs:
        if not 0 <= b <= n:
            raise InvalidListError(f"outdegree {b} outside [0, {n}]")
        rows.append((1,) * b + (0,) * (n - b))
    return BinaryMatrix(tuple(rows))


def digraphic_ferrers(pairs: PairedList) -> BinaryMatrix:
    """Row ``i`` fills the first ``b_i`` off-diagonal columns, skipping column ``i``."""
    _check_a_sorted(pairs)
    n = len(pairs)
    rows = []
    for i, (_, b) in enumerate(pairs):
        if not 0 <= b <= n - 1:
            raise InvalidListError(f"outdegree {b} outside [0, {n - 1}]")
        # 1-based: j <= b for j < i, j <= b + 1 for j > i
        rows.append(tuple(int(j != i and (j + 1 <= b if j < i else j <= b)) for j in range(n)))
    return BinaryMatrix(tuple(rows))


def ferrers_matrix(values, kind: RealizationKind) -> BinaryMatrix:
    kind = RealizationKind.parse(kind)
    if kind is LOOPDIGRAPH:
        return loop_digraphic_ferrers(values)
    if kind is DIGRAPH:
        return digraphic_ferrers(values)
    return digraphic_ferrers(join(values, values))


def corresponding_threshold_list(values, kind: RealizationKind):
    """The threshold list ``(a', b)`` whose Ferrers matrix has row sums ``b``.

    For GRAPH the input is a plain list ``a`` and ``a'`` alone is returned.
    The caller's ordering is used as is. Digraphs need ``a`` nonincreasing;
    for loop-digraphs ``a'`` is the conjugate of ``b`` whatever the order of ``a``.
    """
    kind = RealizationKind.parse(kind)
    if kind is LOOPDIGRAPH:
        b = split(values)[1]
        return join(conjugate(b, len(b)), b)
    if kind is GRAPH:
        if is_paired(values):
            raise InvalidListError("graph kind expects a plain degree list")
        if not is_nonincreasing(values):
            raise InvalidListError(f"{tuple(values)} must be nonincreasing")
        return ferrers_matrix(tuple(values), GRAPH).col_sums()
    m = ferrers_matrix(values, kind)
    return join(m.col_sums(), split(values)[1])


def _fast_threshold(values, kind: RealizationKind) -> bool:
    if kind is GRAPH:
        a = tuple(sorted(values, reverse=True))
        return corresponding_threshold_list(a, GRAPH) == a
    if kind is LOOPDIGRAPH:
        pairs = tuple(sorted(values, key=lambda p: -p[0]))
    else:
        pairs, _ = lex_sort(values)
    return corresponding_threshold_list(pairs, kind) == pairs


def is_threshold(values, kind: RealizationKind, *, fast: bool = True) -> bool:
    """True iff the list has exactly one realization of the given kind.

    With ``fast`` a Ferrers comparison may confirm the answer without
    counting; a negative fast answer always falls back to the exact count.
    """
    from .count import count_realizations
    from .feasibility import is_feasible

    kind = RealizationKind.parse(kind)
    if not is_feasible(values, kind):
        raise InvalidListError(f"{tuple(values)} is not realizable as a {kind.value}")
    if fast and _fast_threshold(values, kind):
        return True
    return count_realizations(values, kind).exact == 1


def has_prefix_rows(m: BinaryMatrix) -> bool:
    """Every row is a block of ones followed by zeros."""
    return all(all(x >= y for x, y in zip(r, r[1:])) for r in m.rows)


def threshold_of(values, kind: RealizationKind):
    """Threshold list used by the feasibility tests, with the matching sort order.

    Returns ``(sorted_values, threshold)`` where the input was sorted with
    nonincreasing ``a`` (lexicographic for DIGRAPH, the convention used by
    the CLI).
    """
    kind = RealizationKind.parse(kind)
    if kind is GRAPH:
        a = tuple(sorted(values, reverse=True))
        return a, corresponding_threshold_list(a, GRAPH)
    if kind is LOOPDIGRAPH:
        pairs = tuple(sorted(values, key=lambda p: -p[0]))
    else:
        pairs, _ = lex_sort(values)
    return pairs, corresponding_threshold_list(pairs, kind)

