"""Quadrant lattice paths from (0, 0) to (n, n) with 2n+2 unit steps.

Paths are stored as their letter word over ``N S E W``; index 1 is the
first step. Lexicographic order on words is the enumeration order, and
since ``E < N < S < W`` is also the ASCII order plain string comparison
does the job.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .errors import DEFAULT_CAP, ContractViolation, ResourceLimitError


class Step(str, enum.Enum):
    N = "N"
    S = "S"
    E = "E"
    W = "W"

    @property
    def displacement(self) -> tuple[int, int]:
        return _DISPLACEMENT[self.value]

    @property
    def is_forward(self) -> bool:
        return self.value in "NE"

    @property
    def is_backward(self) -> bool:
        return self.value in "SW"


_DISPLACEMENT = {"N": (0, 1), "S": (0, -1), "E": (1, 0), "W": (-1, 0)}
BACKWARD = frozenset("SW")


@dataclass(frozen=True)
class PathVerdict:
    valid: bool
    reason: str | None = None  # one of REASONS, None when valid
    index: int | None = None  # 1-based step index where the failure shows
    detail: str = ""

    def __bool__(self) -> bool:
        return self.valid

    def __str__(self) -> str:
        if self.valid:
            return "valid"
        where = f" at step {self.index}" if self.index is not None else ""
        return f"invalid ({self.reason}{where}): {self.detail}"


REASONS = (
    "bad-letter",
    "length",
    "quadrant",
    "endpoint",
    "backward-count",
    "letter-count",
)


def _as_word(word: str | Sequence[Step | str]) -> str:
    if isinstance(word, str):
        return word
    return "".join(str(s.value) if isinstance(s, Step) else str(s) for s in word)


def validate_path(word, n: int) -> PathVerdict:
    """Check ``word`` against every defining condition of the path family.

    Never raises for bad input; the first failed condition is reported in
    the returned verdict.
    """
    word = _as_word(word)
    for i, c in enumerate(word, 1):
        if c not in _DISPLACEMENT:
            return PathVerdict(False, "bad-letter", i, f"unknown step {c!r}")
    if n < 0:
        return PathVerdict(False, "length", None, f"n={n} is negative")
    if len(word) != 2 * n + 2:
        return PathVerdict(
            False, "length", None, f"length {len(word)} != 2n+2 = {2 * n + 2}"
        )
    x = y = 0
    for i, c in enumerate(word, 1):
        dx, dy = _DISPLACEMENT[c]
        x += dx
        y += dy
        if x < 0 or y < 0:
            return PathVerdict(
                False, "quadrant", i, f"step {i} reaches ({x}, {y})"
            )
    if (x, y) != (n, n):
        return PathVerdict(
            False, "endpoint", len(word), f"endpoint ({x}, {y}) != ({n}, {n})"
        )
    # The two checks below cannot fail once length and endpoint hold; they
    # are kept so the verdict names every invariant of the type.
    backs = [i for i, c in enumerate(word, 1) if c in BACKWARD]
    if len(backs) != 1:
        return PathVerdict(
            False, "backward-count", None, f"{len(backs)} backward steps"
        )
    n_north, n_east = word.count("N"), word.count("E")
    want = (n + 1, n) if word[backs[0] - 1] == "S" else (n, n + 1)
    if (n_north, n_east) != want:
        return PathVerdict(
            False,
            "letter-count",
            None,
            f"{n_north} N and {n_east} E, expected {want[0]} N and {want[1]} E",
        )
    return PathVerdict(True)


@dataclass(frozen=True, order=True, slots=True)
class LatticePath:
    n: int
    word: str

    def __post_init__(self):
        verdict = validate_path(self.word, self.n)
        if not verdict:
            raise ContractViolation(f"{self.word!r} is not a path for n={self.n}: {verdict}")

    @classmethod
    def from_word(cls, word: str) -> LatticePath:
        """Build a path, inferring n from the word length."""
        word = word.strip()
        if len(word) < 2 or len(word) % 2:
            raise ContractViolation(f"{word!r} has odd or too short length {len(word)}")
        return cls(len(word) // 2 - 1, word)

    @classmethod
    def _trusted(cls, n: int, word: str) -> LatticePath:
        # Skips validation; only for producers that guarantee validity or for
        # callers that validate the word themselves.
        obj = object.__new__(cls)
        object.__setattr__(obj, "n", n)
        object.__setattr__(obj, "word", word)
        return obj

    @property
    def steps(self) -> tuple[Step, ...]:
        return tuple(Step(c) for c in self.word)

    def __len__(self) -> int:
        return len(self.word)

    def __getitem__(self, i: int) -> str:
        """1-based step access, matching the p_1 ... p_{2n+2} indexing."""
        if not 1 <= i <= len(self.word):
            raise IndexError(i)
        return self.word[i - 1]

    def __str__(self) -> str:
        return self.word


def backward_step_index(path: LatticePath | str) -> int:
    word = path.word if isinstance(path, LatticePath) else path
    found = [i for i, c in enumerate(word, 1) if c in BACKWARD]
    if len(found) != 1:
        raise ContractViolation(
            f"{word!r} has {len(found)} backward steps, expected exactly one"
        )
    return found[0]


def trace_positions(path) -> list[tuple[int, int]]:
    word = path.word if isinstance(path, LatticePath) else _as_word(path)
    x = y = 0
    out = [(0, 0)]
    for c in word:
        try:
            dx, dy = _DISPLACEMENT[c]
        except KeyError:
            raise ValueError(f"unknown step {c!r}") from None
        x += dx
        y += dy
        out.append((x, y))
    return out


def _forward_words(n_north: int, n_east: int) -> Iterator[str]:
    length = n_north + n_east
    for east_at in combinations(range(length), n_east):
        letters = ["N"] * length
        for k in east_at:
            letters[k] = "E"
        yield "".join(letters)


def enumerate_paths(n: int, cap: int = DEFAULT_CAP) -> list[LatticePath]:
    """All paths for ``n`` in lexicographic word order.

    Constructive: pick the backward letter, then interleave the forward
    letters and choose where the backward step sits. A backward ``S`` at
    position j stays in the quadrant iff some ``N`` precedes it (``W``
    likewise needs an earlier ``E``).
    """
    from .enumeration import count_paths_closed_form

    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    predicted = count_paths_closed_form(n)
    if predicted > cap:
        raise ResourceLimitError("paths", n, predicted, cap)

    words = []
    for back, counts, needs in (("S", (n + 1, n), "N"), ("W", (n, n + 1), "E")):
        for fwd in _forward_words(*counts):
            for j in range(1, 2 * n + 2):
                prefix = fwd[:j]
                if needs in prefix:
                    words.append(prefix + back + fwd[j:])
    words.sort()
    return [LatticePath._trusted(n, w) for w in words]


def brute_force_paths(n: int) -> list[str]:
    """Every quadrant word of length 2n+2 ending at (n, n), by full scan.

    Exponential (4**(2n+2) words); intended as an oracle for small n only.
    """
    from itertools import product

    found = []
    for letters in product("ENSW", repeat=2 * n + 2):
        x = y = 0
        for c in letters:
            dx, dy = _DISPLACEMENT[c]
            x += dx
            y += dy
            if x < 0 or y < 0:
                break
        else:
            if (x, y) == (n, n):
                found.append("".join(letters))
    return found


# -- text rendering ---------------------------------------------------------


def render_path_text(path) -> str:
    """Draw a path on its bounding grid.

    Each lattice point shows the comma-separated times (0 = start) at which
    the walk stands on it, or ``.`` if never visited. Runs of ``-`` and a
    ``|`` mark traversed edges. The y axis runs down the left, the x axis along the
    bottom. :func:`parse_path_render` inverts this.
    """
    word = path.word if isinstance(path, LatticePath) else _as_word(path)
    points = trace_positions(word)
    times: dict[tuple[int, int], list[int]] = {}
    for t, p in enumerate(points):
        times.setdefault(p, []).append(t)
    edges = {frozenset(pair) for pair in zip(points, points[1:])}

    xs = [p[0] for p in points]
    ys = [p[1] for p in points]
    x_lo, x_hi = min(0, *xs), max(0, *xs)
    y_lo, y_hi = min(0, *ys), max(0, *ys)

    def label(p):
        return ",".join(map(str, times[p])) if p in times else "."

    width = max(
        [len(label((x, y))) for x in range(x_lo, x_hi + 1) for y in range(y_lo, y_hi + 1)]
        + [len(str(x)) for x in range(x_lo, x_hi + 1)]
    )
    yw = max(len(str(y)) for y in range(y_lo, y_hi + 1))

    lines = []
    for y in range(y_hi, y_lo - 1, -1):
        row = []
        for x in range(x_lo, x_hi + 1):
            text = label((x, y))
            if x < x_hi and frozenset([(x, y), (x + 1, y)]) in edges:
                row.append(text + " " + "-" * (width - len(text) + 1) + " ")
            else:
                row.append(text.ljust(width + 3))
        lines.append((f"{y:>{yw}} | " + "".join(row)).rstrip())
        if y > y_lo:
            row = []
            for x in range(x_lo, x_hi + 1):
                mark = "|" if frozenset([(x, y - 1), (x, y)]) in edges else " "
                row.append(mark.ljust(width + 3))
            lines.append((" " * yw + " | " + "".join(row)).rstrip())
    span = (x_hi - x_lo + 1) * (width + 3) - 3
    lines.append(" " * yw + " +-" + "-" * span)
    lines.append(
        (" " * (yw + 3) + "   ".join(str(x).ljust(width) for x in range(x_lo, x_hi + 1))).rstrip()
    )
    return "\n".join(lines) + "\n"


def parse_path_render(text: str) -> str:
    """Recover the step word from :func:`render_path_text` output."""
    rows = []
    x_labels = None
    for line in text.splitlines():
        head, bar, body = line.partition("|")
        if bar and head.strip():
            rows.append((int(head), [t for t in body.split() if t.strip("-")]))
        elif not bar and line.strip() and not line.strip().startswith("+"):
            x_labels = [int(t) for t in line.split()]
    if x_labels is None or not rows:
        raise ValueError("not a rendered path")
    visits = {}
    for y, cells in rows:
        if len(cells) != len(x_labels):
            raise ValueError(f"row y={y} has {len(cells)} cells, expected {len(x_labels)}")
        for x, cell in zip(x_labels, cells):
            if cell != ".":
                for t in cell.split(","):
                    visits[int(t)] = (x, y)
    if sorted(visits) != list(range(len(visits))):
        raise ValueError("visit times are not contiguous from 0")
    inverse = {v: k for k, v in _DISPLACEMENT.items()}
    word = []
    for t in range(1, len(visits)):
        (x0, y0), (x1, y1) = visits[t - 1], visits[t]
        try:
            word.append(inverse[(x1 - x0, y1 - y0)])
        except KeyError:
            raise ValueError(f"times {t - 1} and {t} are not adjacent") from None
    return "".join(word)


# -- text format --------------------------------------------------------------


def read_path_lines(lines: Iterable[str]) -> Iterator[tuple[int, str]]:
    """Yield ``(line_number, word)`` for each non-comment, non-blank line."""
    for lineno, raw in enumerate(lines, 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line
