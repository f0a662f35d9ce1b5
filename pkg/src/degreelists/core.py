"""Shared types for degree lists and their realizations.

Lists are plain tuples: an ``IntList`` is ``tuple[int, ...]`` and a
``PairedList`` is ``tuple[tuple[int, int], ...]`` of (indegree, outdegree)
pairs. A realization is stored as a :class:`BinaryMatrix` whose row sums are
the outdegrees and whose column sums are the indegrees.

Indices are 0-based inside the library. Anything shown to a user
(``Transfer.__str__``, CLI output, error messages) is 1-based.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from typing import Iterable, Sequence, Union

IntList = tuple[int, ...]
PairedList = tuple[tuple[int, int], ...]
DegreeList = Union[IntList, PairedList]


class RealizationKind(enum.Enum):
    GRAPH = "graph"
    LOOPDIGRAPH = "loopdigraph"
    DIGRAPH = "digraph"

    @classmethod
    def parse(cls, value: "str | RealizationKind") -> "RealizationKind":
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower().replace("-", "").replace("_", ""))
        except ValueError:
            raise ValueError(f"unknown realization kind {value!r}") from None

    def max_entry(self, n: int) -> int:
        return n if self is RealizationKind.LOOPDIGRAPH else n - 1


GRAPH = RealizationKind.GRAPH
LOOPDIGRAPH = RealizationKind.LOOPDIGRAPH
DIGRAPH = RealizationKind.DIGRAPH


class InvalidListError(ValueError):
    """A degree list violates a precondition of the requested operation."""


def as_intlist(values: Iterable[int]) -> IntList:
    out = tuple(int(v) for v in values)
    if any(v < 0 for v in out):
        raise InvalidListError(f"negative entry in {out}")
    return out


def as_pairs(pairs: Iterable[Sequence[int]]) -> PairedList:
    out = []
    for p in pairs:
        if len(p) != 2:
            raise InvalidListError(f"pair {tuple(p)} does not have two entries")
        a, b = int(p[0]), int(p[1])
        if a < 0 or b < 0:
            raise InvalidListError(f"negative entry in pair {(a, b)}")
        out.append((a, b))
    return tuple(out)


def split(pairs: PairedList) -> tuple[IntList, IntList]:
    """Return the indegree and outdegree columns of a paired list."""
    return tuple(p[0] for p in pairs), tuple(p[1] for p in pairs)


def join(a: Sequence[int], b: Sequence[int]) -> PairedList:
    if len(a) != len(b):
        raise InvalidListError(f"length mismatch: {len(a)} != {len(b)}")
    return tuple((int(x), int(y)) for x, y in zip(a, b))


def is_paired(values) -> bool:
    return len(values) > 0 and isinstance(values[0], (tuple, list))


@dataclass(frozen=True)
class BinaryMatrix:
    """Square 0/1 adjacency matrix, stored row by row."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.rows)
        rows = tuple(tuple(int(x) for x in r) for r in self.rows)
        for r in rows:
            if len(r) != n:
                raise ValueError(f"matrix is not square: row of length {len(r)} in {n} rows")
            if any(x not in (0, 1) for x in r):
                raise ValueError("matrix entries must be 0 or 1")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def zeros(cls, n: int) -> "BinaryMatrix":
        return cls(tuple((0,) * n for _ in range(n)))

    @classmethod
    def from_text(cls, text: str) -> "BinaryMatrix":
        lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
        return cls(tuple(tuple(int(ch) for ch in ln.replace(" ", "")) for ln in lines))

    @property
    def n(self) -> int:
        return len(self.rows)

    def __getitem__(self, idx: tuple[int, int]) -> int:
        i, j = idx
        return self.rows[i][j]

    def row_sums(self) -> IntList:
        return tuple(sum(r) for r in self.rows)

    def col_sums(self) -> IntList:
        return tuple(sum(col) for col in zip(*self.rows)) if self.rows else ()

    def margins(self) -> PairedList:
        """The (indegree, outdegree) list this matrix realizes."""
        return join(self.col_sums(), self.row_sums())

    def is_symmetric(self) -> bool:
        return all(self.rows[i][j] == self.rows[j][i] for i in range(self.n) for j in range(i))

    def has_zero_diagonal(self) -> bool:
        return all(self.rows[i][i] == 0 for i in range(self.n))

    def satisfies(self, kind: RealizationKind) -> bool:
        if kind is LOOPDIGRAPH:
            return True
        if kind is DIGRAPH:
            return self.has_zero_diagonal()
        return self.has_zero_diagonal() and self.is_symmetric()

    def with_entries(self, changes: dict[tuple[int, int], int]) -> "BinaryMatrix":
        rows = [list(r) for r in self.rows]
        for (i, j), v in changes.items():
            rows[i][j] = v
        return BinaryMatrix(tuple(tuple(r) for r in rows))

    def to_text(self) -> str:
        return "\n".join("".join(str(x) for x in r) for r in self.rows)

    def __str__(self) -> str:
        return self.to_text()


class Direction(enum.Enum):
    RIGHT = "right"
    LEFT = "left"


@dataclass(frozen=True)
class Transfer:
    """A unit (i, j)-transfer (RIGHT) or (i, j)-left-transfer (LEFT), 0-based."""

    i: int
    j: int
    direction: Direction = Direction.RIGHT

    def one_based(self) -> tuple[int, int]:
        return (self.i + 1, self.j + 1)

    def __str__(self) -> str:
        tag = "" if self.direction is Direction.RIGHT else "L"
        return f"{tag}({self.i + 1},{self.j + 1})"


@dataclass(frozen=True)
class TransferPath:
    start: IntList
    steps: tuple[Transfer, ...] = ()
    intermediates: tuple[IntList, ...] = field(default=())

    @property
    def kappa(self) -> int:
        return len(self.steps)

    @property
    def end(self) -> IntList:
        return self.intermediates[-1] if self.intermediates else self.start

    def lists(self) -> tuple[IntList, ...]:
        """Every list on the path, start included."""
        return (self.start,) + self.intermediates


@dataclass
class ValidationReport:
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok


def validate(values, kind: RealizationKind, strict: bool = False) -> ValidationReport:
    """Check entry bounds, balance and (in strict mode) the zero conventions.

    Never raises; every problem found is recorded as a message. Positions in
    messages are 1-based.
    """
    kind = RealizationKind.parse(kind)
    report = ValidationReport()
    n = len(values)
    if n == 0:
        report.violations.append("empty list")
        return report
    hi = kind.max_entry(n)
    if kind is GRAPH:
        if is_paired(values):
            report.violations.append("graph kind expects a plain degree list")
            return report
        for pos, d in enumerate(values, 1):
            if d < 0 or d > hi:
                report.violations.append(f"entry {d} at position {pos} outside [0, {hi}]")
            elif strict and d == 0:
                report.violations.append(f"forbidden 0 degree at position {pos}")
        if sum(values) % 2:
            report.violations.append(f"odd degree sum {sum(values)}")
        return report

    if not is_paired(values):
        report.violations.append(f"{kind.value} kind expects a paired list")
        return report
    for pos, (a, b) in enumerate(values, 1):
        for label, v in (("indegree", a), ("outdegree", b)):
            if v < 0 or v > hi:
                report.violations.append(f"{label} {v} at position {pos} outside [0, {hi}]")
        if strict and a == 0 and b == 0:
            report.violations.append(f"forbidden (0,0) pair at position {pos}")
    sa, sb = sum(p[0] for p in values), sum(p[1] for p in values)
    if sa != sb:
        report.violations.append(f"unbalanced sums: indegrees {sa} != outdegrees {sb}")
    return report


def lex_sort(pairs: PairedList) -> tuple[PairedList, tuple[int, ...]]:
    """Sort pairs lexicographically nonincreasing (a first, then b).

    Returns the sorted list and ``perm`` with ``sorted[k] == pairs[perm[k]]``.
    Equal pairs keep their relative order.
    """
    perm = tuple(sorted(range(len(pairs)), key=lambda k: (-pairs[k][0], -pairs[k][1])))
    return tuple(pairs[k] for k in perm), perm


def sort_by_a(pairs: PairedList) -> tuple[PairedList, tuple[int, ...]]:
    """Stable sort putting the a-components in nonincreasing order."""
    perm = tuple(sorted(range(len(pairs)), key=lambda k: -pairs[k][0]))
    return tuple(pairs[k] for k in perm), perm


def is_nonincreasing(values: Sequence[int]) -> bool:
    return all(x >= y for x, y in zip(values, values[1:]))


def is_nondecreasing(values: Sequence[int]) -> bool:
    return all(x <= y for x, y in zip(values, values[1:]))


# ---------------------------------------------------------------------------
# text / JSON formats


def parse_list(text: str):
    """Parse a degree list from JSON or plain text.

    JSON: ``{"pairs": [[a, b], ...]}`` or ``{"degrees": [d, ...]}`` (a bare
    JSON array is also accepted). Plain text: one ``a b`` pair per line, or
    whitespace separated degrees on a single line or one per line.
    """
    text = text.strip()
    if not text:
        raise InvalidListError("empty input")
    if text[0] in "{[":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InvalidListError(f"malformed JSON: {exc}") from None
        if isinstance(data, dict):
            if "pairs" in data:
                return as_pairs(data["pairs"])
            if "degrees" in data:
                return as_intlist(data["degrees"])
            raise InvalidListError('JSON input needs a "pairs" or "degrees" key')
        if data and isinstance(data[0], list):
            return as_pairs(data)
        return as_intlist(data)

    lines = [ln.split("#", 1)[0].split() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    try:
        if all(len(ln) == 2 for ln in lines) and len(lines) > 1:
            return as_pairs([[int(x) for x in ln] for ln in lines])
        if all(len(ln) == 1 for ln in lines) or len(lines) == 1:
            return as_intlist(int(x) for ln in lines for x in ln)
    except ValueError:
        raise InvalidListError("non-integer token in input") from None
    raise InvalidListError("cannot tell pairs from degrees: use one pair per line")


def format_list(values) -> str:
    if is_paired(values):
        return "(" + ",".join(f"({a},{b})" for a, b in values) + ")"
    return "(" + ",".join(str(v) for v in values) + ")"


def to_json(values) -> dict:
    if is_paired(values):
        return {"pairs": [list(p) for p in values]}
    return {"degrees": list(values)}
