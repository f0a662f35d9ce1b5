"""Majorization order, conjugate partitions and Muirhead transfer paths."""

from __future__ import annotations

from itertools import accumulate
from math import comb
from typing import Sequence

from .core import (
    Direction,
    IntList,
    InvalidListError,
    Transfer,
    TransferPath,
    is_nonincreasing,
)


def prefix_sums(values: Sequence[int]) -> list[int]:
    return list(accumulate(values))


def is_majorized(a: Sequence[int], aprime: Sequence[int]) -> bool:
    """True iff ``a`` is majorized by ``aprime`` (a ≺ a′).

    Every proper prefix sum of ``a`` is at most the matching prefix sum of
    ``aprime`` and the totals agree. No sorting is applied to either list.
    """
    if len(a) != len(aprime):
        raise InvalidListError(f"length mismatch: {len(a)} != {len(aprime)}")
    pa, pb = prefix_sums(a), prefix_sums(aprime)
    if not pa:
        return True
    return pa[-1] == pb[-1] and all(x <= y for x, y in zip(pa, pb))


def conjugate(b: Sequence[int], n: int | None = None) -> IntList:
    """Conjugate partition of ``b`` truncated to length ``n``.

    Entry ``i`` (1-based) counts the ``b_j >= i``; these are the column sums
    of the loop-digraphic Ferrers matrix with row sums ``b``.
    """
    n = len(b) if n is None else n
    if any(x < 0 or x > n for x in b):
        raise InvalidListError(f"entries of {tuple(b)} must lie in [0, {n}]")
    return tuple(sum(1 for x in b if x >= i) for i in range(1, n + 1))


def apply_transfer(x: Sequence[int], t: Transfer) -> IntList:
    """Apply a unit transfer to ``x``.

    RIGHT moves one unit from ``i`` to ``j`` and needs ``x[i] >= x[j] + 2``.
    LEFT moves one unit from ``j`` to ``i`` and needs ``x[i] <= x[j] + 1``.
    Both need ``i < j``.
    """
    i, j = t.i, t.j
    if not (0 <= i < j < len(x)):
        raise InvalidListError(f"transfer {t} needs 1 <= i < j <= {len(x)}")
    out = list(x)
    if t.direction is Direction.RIGHT:
        if x[i] < x[j] + 2:
            raise InvalidListError(f"transfer {t} on {tuple(x)}: {x[i]} < {x[j]} + 2")
        out[i] -= 1
        out[j] += 1
    else:
        if x[i] > x[j] + 1:
            raise InvalidListError(f"left-transfer {t} on {tuple(x)}: {x[i]} > {x[j]} + 1")
        if x[j] == 0:
            raise InvalidListError(f"left-transfer {t} on {tuple(x)} would go negative")
        out[i] += 1
        out[j] -= 1
    return tuple(out)


def unit_transfers(x: Sequence[int]) -> list[Transfer]:
    """Every RIGHT transfer applicable to ``x``."""
    n = len(x)
    return [Transfer(i, j) for i in range(n) for j in range(i + 1, n) if x[i] >= x[j] + 2]


def muirhead_path(a: Sequence[int], aprime: Sequence[int]) -> TransferPath:
    """Decompose ``aprime`` -> ``a`` into unit transfers.

    Each step uses the first index ``l`` whose prefix sum in ``a`` falls below
    the current one, and the least ``k`` with ``current[k] < a[k]``. The path
    has exactly half the L1 distance between the lists as its length.
    """
    a = tuple(a)
    cur = tuple(aprime)
    if not is_nonincreasing(a):
        raise InvalidListError(f"target {a} must be nonincreasing")
    if not is_majorized(a, cur):
        raise InvalidListError(f"{a} is not majorized by {cur}")
    pa = prefix_sums(a)
    steps: list[Transfer] = []
    inter: list[IntList] = []
    while cur != a:
        pc = prefix_sums(cur)
        ell = next(idx for idx in range(len(a)) if pa[idx] < pc[idx])
        k = next(idx for idx in range(len(a)) if cur[idx] < a[idx])
        t = Transfer(ell, k)
        cur = apply_transfer(cur, t)
        steps.append(t)
        inter.append(cur)
    return TransferPath(start=tuple(aprime), steps=tuple(steps), intermediates=tuple(inter))


def l1_half(a: Sequence[int], aprime: Sequence[int]) -> int:
    total = sum(abs(x - y) for x, y in zip(a, aprime))
    return total // 2


def convex_order_check(a: Sequence[int], aprime: Sequence[int]) -> bool:
    """Compare ``a`` and ``aprime`` through every hinge ``x -> max(0, x - t)``.

    For integer lists with equal sums the hinge family decides majorization of
    the nonincreasing rearrangements, so this agrees with :func:`is_majorized`
    whenever ``a`` and ``aprime`` are nonincreasing.
    """
    if len(a) != len(aprime):
        raise InvalidListError(f"length mismatch: {len(a)} != {len(aprime)}")
    if sum(a) != sum(aprime):
        raise InvalidListError(f"unequal sums {sum(a)} and {sum(aprime)}")
    top = max(list(a) + list(aprime) + [0])
    for t in range(top + 1):
        if sum(max(0, x - t) for x in a) > sum(max(0, x - t) for x in aprime):
            return False
    return True


def pascal_inequality(c: int, ell: int) -> tuple[int, int]:
    """Return ``(C(2c-l, c-l+1), C(2c-l, c))`` as exact integers."""
    if not 1 <= ell < c:
        raise ValueError(f"need 1 <= ell < c, got c={c}, ell={ell}")
    return comb(2 * c - ell, c - ell + 1), comb(2 * c - ell, c)
