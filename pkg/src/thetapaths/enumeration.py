"""Closed-form counts and the four-route count cross-check."""

from __future__ import annotations

import math
from dataclasses import dataclass, fields

from .errors import DEFAULT_CAP


def _closed_form(n: int) -> int:
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    numerator = math.comb(2 * n, n) * (2 * n + 1) * (4 * n + 4)
    count, rem = divmod(numerator, n + 2)
    if rem:
        raise ArithmeticError(f"closed form not integral at n={n}: remainder {rem}")
    return count


def count_paths_closed_form(n: int) -> int:
    """binom(2n, n) * (4n+4)(2n+1) / (n+2), in exact integer arithmetic."""
    return _closed_form(n)


def count_tableaux_closed_form(n: int) -> int:
    # Same right-hand side as the path count; kept as its own entry point so
    # reports can name the route.
    return _closed_form(n)


@dataclass
class CountReport:
    n: int
    closed_form_paths: int
    closed_form_tableaux: int
    hook_length: int
    enumerated_paths: int | None = None
    enumerated_tableaux: int | None = None

    def values(self) -> list[int]:
        return [
            getattr(self, f.name)
            for f in fields(self)
            if f.name != "n" and getattr(self, f.name) is not None
        ]

    @property
    def consistent(self) -> bool:
        return len(set(self.values())) == 1

    def to_text(self) -> str:
        rows = [(f.name, getattr(self, f.name)) for f in fields(self)]
        rows.append(("consistent", self.consistent))
        width = max(len(k) for k, _ in rows)
        return "".join(
            f"{k.ljust(width)}  {'-' if v is None else v}\n" for k, v in rows
        )

    @staticmethod
    def machine_header() -> str:
        return "\t".join([f.name for f in fields(CountReport)] + ["consistent"])

    def to_machine(self) -> str:
        cells = ["" if getattr(self, f.name) is None else str(getattr(self, f.name)) for f in fields(self)]
        return "\t".join(cells + [str(self.consistent).lower()])


def cross_check(n: int, exhaustive: bool = False, cap: int = DEFAULT_CAP) -> CountReport:
    from .lattice_paths import enumerate_paths
    from .tableaux import ThetaShape, enumerate_tableaux, hook_length_count

    report = CountReport(
        n=n,
        closed_form_paths=count_paths_closed_form(n),
        closed_form_tableaux=count_tableaux_closed_form(n),
        hook_length=hook_length_count(ThetaShape(n).rows),
    )
    if exhaustive:
        report.enumerated_paths = len(enumerate_paths(n, cap=cap))
        report.enumerated_tableaux = len(enumerate_tableaux(n, cap=cap))
    return report
