"""Standard Young tableaux of the near-hook shape (n+2, 2, 1^n).

Boxes are addressed 1-based as (row, column) in English orientation. The
first row is the *arm*, the first column the *leg*, and box (2, 2) the
*heart*; the corner entry 1 belongs to both arm and leg.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import total_ordering
from itertools import chain
from typing import Iterable, Iterator, Sequence

from .errors import DEFAULT_CAP, ContractViolation, ResourceLimitError, ShapeMismatchError

Rows = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class ThetaShape:
    n: int

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"n must be non-negative, got {self.n}")

    @property
    def rows(self) -> tuple[int, ...]:
        return (self.n + 2, 2) + (1,) * self.n

    @property
    def size(self) -> int:
        return 2 * self.n + 4

    def conjugate(self) -> tuple[int, ...]:
        return conjugate(self.rows)

    def hook_lengths(self) -> list[list[int]]:
        return hook_lengths(self.rows)


def conjugate(partition: Sequence[int]) -> tuple[int, ...]:
    if not partition:
        return ()
    return tuple(sum(1 for r in partition if r > j) for j in range(partition[0]))


def _check_partition(partition: Sequence[int]) -> None:
    for k, part in enumerate(partition):
        if not isinstance(part, int) or part <= 0:
            raise ValueError(f"partition parts must be positive integers: {partition}")
        if k and part > partition[k - 1]:
            raise ValueError(f"partition {partition} is not weakly decreasing")


def hook_lengths(partition: Sequence[int]) -> list[list[int]]:
    _check_partition(partition)
    cols = conjugate(partition)
    return [
        [(r - j - 1) + (cols[j] - i - 1) + 1 for j in range(r)]
        for i, r in enumerate(partition)
    ]


def hook_length_count(partition: Sequence[int]) -> int:
    """Number of standard Young tableaux of ``partition``, exactly.

    >>> hook_length_count((3, 2, 1))
    16
    """
    partition = tuple(partition)
    hooks = hook_lengths(partition)
    # Python ints are unbounded, so N! // prod(hooks) is exact at any size.
    numerator = math.factorial(sum(partition))
    denominator = math.prod(chain.from_iterable(hooks))
    count, rem = divmod(numerator, denominator)
    assert rem == 0, (partition, rem)
    return count


@dataclass(frozen=True)
class TableauVerdict:
    valid: bool
    reason: str | None = None  # "entries", "row", "column" or "corner"
    box: tuple[int, int] | None = None  # 1-based (row, column)
    detail: str = ""

    def __bool__(self) -> bool:
        return self.valid

    def __str__(self) -> str:
        if self.valid:
            return "valid"
        where = f" at box {self.box}" if self.box else ""
        return f"invalid ({self.reason}{where}): {self.detail}"


def validate_tableau(filling: Sequence[Sequence[int]], n: int) -> TableauVerdict:
    """Check a row-major filling of the n-th shape for standardness.

    Raises ShapeMismatchError when the row lengths are not (n+2, 2, 1^n);
    every other defect is reported through the verdict.
    """
    rows = tuple(tuple(r) for r in filling)
    want = ThetaShape(n).rows
    got = tuple(len(r) for r in rows)
    if got != want:
        raise ShapeMismatchError(f"row lengths {got} do not match shape {want} for n={n}")

    entries = sorted(chain.from_iterable(rows))
    if entries != list(range(1, 2 * n + 5)):
        return TableauVerdict(False, "entries", None, f"entries are not exactly 1..{2 * n + 4}")
    for i, row in enumerate(rows):
        for j in range(1, len(row)):
            if row[j] <= row[j - 1]:
                return TableauVerdict(
                    False, "row", (i + 1, j + 1), f"row {i + 1} not increasing"
                )
    for i in range(1, len(rows)):
        for j in range(len(rows[i])):
            if rows[i][j] <= rows[i - 1][j]:
                return TableauVerdict(
                    False, "column", (i + 1, j + 1), f"column {j + 1} not increasing"
                )
    if rows[0][0] != 1:  # implied by the checks above
        return TableauVerdict(False, "corner", (1, 1), "corner entry is not 1")
    return TableauVerdict(True)


@total_ordering
@dataclass(frozen=True, eq=True, slots=True)
class StandardTableau:
    n: int
    rows: Rows

    def __post_init__(self):
        verdict = validate_tableau(self.rows, self.n)
        if not verdict:
            raise ContractViolation(f"{format_tableau(self.rows)} is {verdict}")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> StandardTableau:
        """Build a tableau, inferring n from the number of rows."""
        rows = tuple(tuple(r) for r in rows)
        if len(rows) < 2:
            raise ShapeMismatchError(f"{len(rows)} rows cannot form a theta shape")
        return cls(len(rows) - 2, rows)

    @classmethod
    def parse(cls, text: str) -> StandardTableau:
        return cls.from_rows(parse_tableau(text))

    @classmethod
    def _trusted(cls, n: int, rows: Rows) -> StandardTableau:
        obj = object.__new__(cls)
        object.__setattr__(obj, "n", n)
        object.__setattr__(obj, "rows", rows)
        return obj

    @property
    def shape(self) -> ThetaShape:
        return ThetaShape(self.n)

    def reading_word(self) -> tuple[int, ...]:
        return tuple(chain.from_iterable(self.rows))

    def __getitem__(self, box: tuple[int, int]) -> int:
        i, j = box
        if i < 1 or j < 1:
            raise IndexError(box)
        return self.rows[i - 1][j - 1]

    def __lt__(self, other):
        if not isinstance(other, StandardTableau):
            return NotImplemented
        return (self.n, self.reading_word()) < (other.n, other.reading_word())

    def __str__(self) -> str:
        return format_tableau(self.rows)


@dataclass(frozen=True)
class RegionAssignment:
    arm: frozenset[int]
    leg: frozenset[int]
    heart: int


def regions(t: StandardTableau) -> RegionAssignment:
    return RegionAssignment(
        arm=frozenset(t.rows[0]),
        leg=frozenset(row[0] for row in t.rows),
        heart=t.rows[1][1],
    )


def region_of(t: StandardTableau) -> list[str]:
    """Region letter per entry: ``where[v]`` is "A", "L" or "H" for v >= 2.

    Index 0 is unused and index 1 (the shared corner) is "C".
    """
    where = [""] * (2 * t.n + 5)
    for v in t.rows[0]:
        where[v] = "A"
    for row in t.rows[1:]:
        where[row[0]] = "L"
    where[1] = "C"
    where[t.rows[1][1]] = "H"
    return where


def transpose_rows(rows: Rows) -> Rows:
    return tuple(
        tuple(row[j] for row in rows if len(row) > j) for j in range(len(rows[0]))
    )


def transpose(t: StandardTableau) -> StandardTableau:
    # The shape is self-conjugate, so the result lives in the same family.
    return StandardTableau._trusted(t.n, transpose_rows(t.rows))


def standard_fillings(shape: Sequence[int]) -> list[Rows]:
    """All standard fillings of ``shape``, by placing 1, 2, ... in turn.

    Each value goes at the end of any row whose box above is already
    filled. Output order is the search order, not sorted.
    """
    shape = tuple(shape)
    _check_partition(shape)
    total = sum(shape)
    rows: list[list[int]] = [[] for _ in shape]
    out: list[Rows] = []

    def place(v: int) -> None:
        if v > total:
            out.append(tuple(tuple(r) for r in rows))
            return
        for r, cap in enumerate(shape):
            length = len(rows[r])
            if length < cap and (r == 0 or len(rows[r - 1]) > length):
                rows[r].append(v)
                place(v + 1)
                rows[r].pop()

    place(1)
    return out


def enumerate_tableaux(n: int, cap: int = DEFAULT_CAP) -> list[StandardTableau]:
    """Every standard tableau of the n-th shape, sorted by reading word."""
    from .enumeration import count_tableaux_closed_form

    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    predicted = count_tableaux_closed_form(n)
    if predicted > cap:
        raise ResourceLimitError("tableaux", n, predicted, cap)
    fillings = standard_fillings(ThetaShape(n).rows)
    fillings.sort(key=lambda rows: tuple(chain.from_iterable(rows)))
    return [StandardTableau._trusted(n, rows) for rows in fillings]


# -- text format --------------------------------------------------------------


def format_tableau(rows: Iterable[Iterable[int]]) -> str:
    """``123/45/6`` style; comma-separated entries once any entry exceeds 9."""
    rows = [tuple(r) for r in rows]
    wide = any(v > 9 for r in rows for v in r)
    sep = "," if wide else ""
    return "/".join(sep.join(map(str, r)) for r in rows)


def parse_tableau(text: str) -> Rows:
    """Inverse of :func:`format_tableau`; accepts either entry style.

    A comma anywhere switches the whole tableau to comma-separated rows, so
    a one-entry row like ``10`` is read as ten, not as 1 and 0.
    """
    text = text.strip()
    if not text:
        raise ValueError("empty tableau")
    wide = "," in text
    rows = []
    for part in text.split("/"):
        part = part.strip()
        if not part:
            raise ValueError(f"empty row in {text!r}")
        items = part.split(",") if wide else list(part)
        try:
            rows.append(tuple(int(item) for item in items))
        except ValueError:
            raise ValueError(f"bad row {part!r} in {text!r}") from None
    return tuple(rows)


def render_tableau_text(t: StandardTableau) -> str:
    width = len(str(2 * t.n + 4))
    return "".join(" ".join(str(v).rjust(width) for v in row) + "\n" for row in t.rows)


def read_tableau_lines(lines: Iterable[str]) -> Iterator[tuple[int, int | None, str]]:
    """Yield ``(line_number, header_n, text)`` for each tableau line.

    ``header_n`` is the value from the most recent ``n=<k>`` header, or None
    before any header.
    """
    header = None
    for lineno, raw in enumerate(lines, 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("n="):
            try:
                header = int(line[2:])
            except ValueError:
                raise ValueError(f"line {lineno}: bad header {line!r}") from None
            continue
        yield lineno, header, line


def write_tableau_lines(tableaux: Iterable[StandardTableau]) -> Iterator[str]:
    """Serialize tableaux, emitting an ``n=<k>`` header whenever n changes."""
    current = None
    for t in tableaux:
        if t.n != current:
            current = t.n
            yield f"n={current}"
        yield str(t)
