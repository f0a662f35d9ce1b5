"""Minconvex and opposed lists, and the extremal-count experiment."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Sequence, Union

from .core import (
    DIGRAPH,
    GRAPH,
    LOOPDIGRAPH,
    IntList,
    InvalidListError,
    PairedList,
    RealizationKind,
    format_list,
    is_nonincreasing,
    join,
)
from .count import count
from .majorize import is_majorized

Sigma = Union[str, Sequence[int], None]


def minconvex_base(n: int, m: int) -> IntList:
    """The most balanced nonincreasing list of length ``n`` summing to ``m``."""
    if n < 1 or not 0 <= m <= n * n:
        raise InvalidListError(f"need n >= 1 and 0 <= m <= n^2, got n={n}, m={m}")
    q, r = divmod(m, n)
    return (q + 1,) * r + (q,) * (n - r)


def _check_bounds(n: int, m: int, kind: RealizationKind) -> None:
    if kind is LOOPDIGRAPH and m > n * n:
        raise InvalidListError(f"loop-digraph lists need m <= n^2 = {n * n}")
    if kind is DIGRAPH and m > n * (n - 1):
        raise InvalidListError(f"digraph lists need m <= n(n-1) = {n * (n - 1)}")
    if kind is GRAPH and (m % 2 or m > n * (n - 1)):
        raise InvalidListError(f"graph lists need an even m <= n(n-1) = {n * (n - 1)}")


def opposed_sort(pairs: PairedList) -> PairedList:
    """Sort pairs by nondecreasing ``b`` (stable), then put ``a`` in nonincreasing order."""
    by_b = sorted(pairs, key=lambda p: p[1])
    a = sorted((p[0] for p in by_b), reverse=True)
    return join(a, [p[1] for p in by_b])


def minconvex_paired(n: int, m: int, kind: RealizationKind = LOOPDIGRAPH, sigma: Sigma = None) -> PairedList:
    """Pair the minconvex list with a rearrangement of itself.

    ``sigma`` is ``"identity"``, ``"opposed"`` (second component
    nondecreasing) or an explicit permutation with ``second[i] =
    alpha[sigma[i]]``. The default is opposed for digraphs and identity
    otherwise.
    """
    kind = RealizationKind.parse(kind)
    alpha = minconvex_base(n, m)
    _check_bounds(n, m, kind)
    if sigma is None:
        sigma = "opposed" if kind is DIGRAPH else "identity"
    if sigma == "identity":
        second = alpha
    elif sigma == "opposed":
        second = tuple(sorted(alpha))
    else:
        if sorted(sigma) != list(range(n)):
            raise InvalidListError(f"{tuple(sigma)} is not a permutation of 0..{n - 1}")
        second = tuple(alpha[k] for k in sigma)
    return join(alpha, second)


def is_minconvex(values: Sequence[int]) -> bool:
    return bool(values) and max(values) - min(values) <= 1


def majorization_floor_check(a: Sequence[int], n: int, m: int) -> bool:
    """True iff the minconvex list of (n, m) is majorized by ``a``; never false for valid input."""
    a = tuple(a)
    if len(a) != n or sum(a) != m or not is_nonincreasing(a):
        raise InvalidListError(f"{a} must be nonincreasing of length {n} with sum {m}")
    return is_majorized(minconvex_base(n, m), a)


def staircase_family(n: int) -> tuple[PairedList, PairedList]:
    """Threshold staircase list and its two-column-shifted target.

    threshold: ``((n-1,0),(n-2,1),...,(0,n-1))``;
    target: ``((n-2,0),(n-2,1),(n-3,2),...,(1,n-2),(1,n-1))``.
    """
    if n < 3:
        raise InvalidListError(f"staircase family needs n >= 3, got {n}")
    b = tuple(range(n))
    threshold = join(tuple(n - 1 - i for i in range(n)), b)
    a = [n - 1 - i for i in range(n)]
    a[0] -= 1
    a[-1] += 1
    return threshold, join(a, b)


# ---------------------------------------------------------------------------
# extremal experiment


def compositions(total: int, n: int, hi: int) -> list[tuple[int, ...]]:
    """All length-``n`` lists with entries in [0, hi] summing to ``total``, sorted."""
    return [v for v in product(range(hi + 1), repeat=n) if sum(v) == total]


def partitions(total: int, n: int, hi: int) -> list[tuple[int, ...]]:
    return [v for v in compositions(total, n, hi) if is_nonincreasing(v)]


@dataclass
class ExtremalReport:
    n: int
    m: int
    kind: RealizationKind
    theorem: str
    reference: tuple
    reference_count: int
    rows: list[tuple[tuple, int, str]] = field(default_factory=list)
    violations: list[tuple] = field(default_factory=list)

    @property
    def max_count(self) -> int:
        return max((c for _, c, _ in self.rows), default=0)

    @property
    def maximizers(self) -> list[tuple]:
        top = self.max_count
        return [lst for lst, c, _ in self.rows if c == top]

    @property
    def passed(self) -> bool:
        return not self.violations and self.reference_count == self.max_count

    def to_tsv(self) -> str:
        lines = [
            f"# theorem\t{self.theorem}",
            f"# n={self.n}\tm={self.m}\tkind={self.kind.value}\treference={format_list(self.reference)}"
            f"\treference_count={self.reference_count}\tresult={'PASS' if self.passed else 'FAIL'}",
            "list\tcount\tflags",
        ]
        lines += [f"{format_list(lst)}\t{c}\t{flags}" for lst, c, flags in self.rows]
        return "\n".join(lines) + "\n"


_THEOREMS = {
    LOOPDIGRAPH: "minconvex-loopdigraph: minconvex lists strictly maximize N1",
    DIGRAPH: "minconvex-digraph: the opposed minconvex list maximizes N2",
    GRAPH: "minconvex-graph: the minconvex list maximizes N3",
}


def verify_extremal_max(n: int, m: int, kind: RealizationKind) -> ExtremalReport:
    """Count every realizable list with ``n`` entries and sum ``m``.

    ``a`` runs over nonincreasing lists, ``b`` over every arrangement. The
    loop-digraph check is strict against lists that are not minconvex; the
    digraph and graph checks allow ties.
    """
    kind = RealizationKind.parse(kind)
    _check_bounds(n, m, kind)
    alpha = minconvex_base(n, m)
    hi = kind.max_entry(n)

    if kind is GRAPH:
        reference = alpha
        ref_count = count(alpha, GRAPH)
        report = ExtremalReport(n, m, kind, _THEOREMS[kind], reference, ref_count)
        for a in partitions(m, n, hi):
            c = count(a, GRAPH)
            if not c:
                continue
            flags = "minconvex" if a == alpha else ""
            if c > ref_count:
                report.violations.append((a, c))
            report.rows.append((a, c, flags))
    else:
        reference = minconvex_paired(n, m, kind)
        ref_count = count(reference, kind)
        report = ExtremalReport(n, m, kind, _THEOREMS[kind], reference, ref_count)
        bs = compositions(m, n, hi)
        for a in partitions(m, n, hi):
            for b in bs:
                pairs = join(a, b)
                c = count(pairs, kind)
                if not c:
                    continue
                mc = a == alpha and sorted(b, reverse=True) == list(alpha)
                flags = ",".join(f for f, on in (("minconvex", mc), ("reference", pairs == reference)) if on)
                if kind is LOOPDIGRAPH:
                    bad = c >= ref_count if not mc else c != ref_count
                else:
                    bad = c > ref_count
                if bad:
                    report.violations.append((pairs, c))
                report.rows.append((pairs, c, flags))
    top = report.max_count
    report.rows = [(lst, c, (f + ",max" if f else "max") if c == top else f) for lst, c, f in report.rows]
    return report
