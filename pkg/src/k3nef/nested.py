"""The nested Hilbert scheme X^[n,n+1] for a case I surface.

Divisors are written in the basis

    w1^a, w2^a, w1^b, w2^b, B^a/2, B^b/2

where ``^a`` pulls back from X^[n] and ``^b`` from X^[n+1].  The difference
classes ``L^diff = L^b - L^a`` may also be carried as separate terms so that
the printed intersection table can be evaluated column by column.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .errors import PreconditionError, ThresholdNotMet
from .exact import Rational, q
from .hilb import min_threshold_n
from .picard import W1, W2, Case, SurfaceK3, intersect


class NestedCurve(str, enum.Enum):
    C1a = "C1a"
    C2a = "C2a"
    C1b = "C1b"
    C2b = "C2b"
    C0a = "C0a"
    C0b = "C0b"
    Aa = "Aa"
    Ab = "Ab"


COLUMNS = ("w1a", "w1b", "w1diff", "w2a", "w2b", "w2diff", "Ba", "Bb", "Bdiff")

# Entries as printed.  ("w", i, j) stands for w_i . C_j.
_X = lambda i, j: ("w", i, j)  # noqa: E731
PRINTED_TABLE = {
    NestedCurve.C1a: (_X(1, 1), _X(1, 1), 0, _X(2, 1), _X(2, 1), 0, 0, 0, 0),
    NestedCurve.C2a: (_X(1, 2), _X(1, 2), 0, _X(2, 2), _X(2, 2), 0, 0, 0, 0),
    NestedCurve.C1b: (0, _X(1, 1), _X(1, 1), 0, _X(2, 1), _X(2, 1), 0, 0, 0),
    NestedCurve.C2b: (0, _X(1, 2), _X(1, 2), 0, _X(2, 2), _X(2, 2), 0, 0, 0),
    NestedCurve.C0a: (_X(1, 1), _X(1, 1), 0, _X(2, 1), _X(2, 1), 0, 2, 2, 0),
    NestedCurve.C0b: (0, _X(1, 1), _X(1, 1), 0, _X(2, 1), 0, 0, 2, 2),
    NestedCurve.Aa: (0, 0, 0, 0, 0, 0, -2, 0, 2),
    NestedCurve.Ab: (0, 0, 0, 0, 0, 0, 0, -2, -2),
}


@dataclass(frozen=True)
class NestedDiv:
    w1a: Fraction = Fraction(0)
    w2a: Fraction = Fraction(0)
    w1b: Fraction = Fraction(0)
    w2b: Fraction = Fraction(0)
    ba: Fraction = Fraction(0)  # coefficient of B^a / 2
    bb: Fraction = Fraction(0)  # coefficient of B^b / 2
    w1diff: Fraction = Fraction(0)
    w2diff: Fraction = Fraction(0)
    bdiff: Fraction = Fraction(0)  # coefficient of B^diff / 2

    def __post_init__(self):
        for name in self.__dataclass_fields__:
            object.__setattr__(self, name, q(getattr(self, name)))

    def reduced(self) -> "NestedDiv":
        """Fold the difference terms into the six basis coordinates."""
        return NestedDiv(
            self.w1a - self.w1diff,
            self.w2a - self.w2diff,
            self.w1b + self.w1diff,
            self.w2b + self.w2diff,
            self.ba - self.bdiff,
            self.bb + self.bdiff,
        )

    @property
    def coords(self) -> tuple[Fraction, ...]:
        r = self.reduced()
        return (r.w1a, r.w2a, r.w1b, r.w2b, r.ba, r.bb)

    def column_weights(self) -> dict[str, Fraction]:
        """Coefficient on each table column (B columns count B, not B/2)."""
        return {
            "w1a": self.w1a, "w1b": self.w1b, "w1diff": self.w1diff,
            "w2a": self.w2a, "w2b": self.w2b, "w2diff": self.w2diff,
            "Ba": self.ba / 2, "Bb": self.bb / 2, "Bdiff": self.bdiff / 2,
        }


def _require_case1(surface: SurfaceK3) -> None:
    if surface.case is not Case.I:
        raise PreconditionError("the nested table is only set up for case I", "case I")


def _entry_value(surface: SurfaceK3, entry) -> Fraction:
    if isinstance(entry, tuple):
        _, i, j = entry
        return intersect(surface, W1 if i == 1 else W2, W1 if j == 1 else W2)
    return Fraction(entry)


def nested_table(surface: SurfaceK3, as_printed: bool = True) -> dict[NestedCurve, dict[str, Fraction]]:
    """The 8 x 9 table; with ``as_printed=False`` the diff columns are b minus a."""
    _require_case1(surface)
    out = {}
    for curve, entries in PRINTED_TABLE.items():
        row = {col: _entry_value(surface, e) for col, e in zip(COLUMNS, entries)}
        if not as_printed:
            for base in ("w1", "w2", "B"):
                row[f"{base}diff"] = row[f"{base}b"] - row[f"{base}a"]
        out[curve] = row
    return out


def diff_inconsistencies(surface: SurfaceK3) -> list[tuple[NestedCurve, str]]:
    """Cells of the printed table where ``col^diff != col^b - col^a``."""
    printed = nested_table(surface, as_printed=True)
    fixed = nested_table(surface, as_printed=False)
    return [
        (curve, col)
        for curve in NestedCurve
        for col in COLUMNS
        if printed[curve][col] != fixed[curve][col]
    ]


def _pair_row(row: dict[str, Fraction], div: NestedDiv, as_printed: bool) -> Fraction:
    weights = (div if as_printed else div.reduced()).column_weights()
    return sum((weights[col] * row[col] for col in COLUMNS), Fraction(0))


def nested_pair(surface: SurfaceK3, curve: NestedCurve, div: NestedDiv, as_printed: bool = False) -> Fraction:
    row = nested_table(surface, as_printed=as_printed)[NestedCurve(curve)]
    return _pair_row(row, div, as_printed)


def nested_nef_generators(k: int, n: int) -> list[tuple[str, NestedDiv]]:
    """The six generators of Nef(X^[n,n+1]) for n past the case I threshold."""
    surface = SurfaceK3(Case.I, k)
    if n < min_threshold_n(surface):
        raise ThresholdNotMet(
            f"threshold n ≥ 9k/8 not met for k={k}, n={n}; D_n is not known",
            "n >= 9k/8",
        )
    t_a = Fraction(n, k)
    t_b = Fraction(n + 1, k)
    return [
        ("pr_a*(w1)", NestedDiv(w1a=1)),
        ("pr_a*(w2)", NestedDiv(w2a=1)),
        ("w1_diff", NestedDiv(w1diff=1).reduced()),
        ("w2_diff", NestedDiv(w2diff=1).reduced()),
        ("pr_a*(D_n)", NestedDiv(w1a=t_a, w2a=t_a, ba=-1)),
        ("pr_b*(D_n+1)", NestedDiv(w1b=t_b, w2b=t_b, bb=-1)),
    ]


@dataclass(frozen=True)
class NestedReport:
    k: int
    n: int
    pairings: dict[str, dict[NestedCurve, Fraction]]
    zero_witnesses: dict[str, tuple[NestedCurve, ...]]
    failures: tuple[str, ...]
    inconsistent_cells: tuple[tuple[NestedCurve, str], ...]

    @property
    def ok(self) -> bool:
        return not self.failures


def _expected_values(k: int, n: int) -> dict[tuple[str, NestedCurve], Fraction]:
    return {
        ("pr_a*(D_n)", NestedCurve.C0a): Fraction(n - 1),
        ("pr_a*(D_n)", NestedCurve.Aa): Fraction(1),
        ("pr_a*(D_n)", NestedCurve.C1a): Fraction(n),
        ("pr_b*(D_n+1)", NestedCurve.C0b): Fraction(n),
        ("pr_b*(D_n+1)", NestedCurve.Ab): Fraction(1),
    }


def nested_verify(k: int, n: int) -> NestedReport:
    """Pair every generator with every curve (diff columns recomputed).

    Failures are negative pairings, generators with no orthogonal curve, and
    mismatches against the closed-form values for D_n and D_{n+1}.
    """
    surface = SurfaceK3(Case.I, k)
    gens = nested_nef_generators(k, n)
    table = nested_table(surface, as_printed=False)
    pairings: dict[str, dict[NestedCurve, Fraction]] = {}
    zeros: dict[str, tuple[NestedCurve, ...]] = {}
    failures = []
    for name, div in gens:
        row = {c: _pair_row(table[c], div, False) for c in NestedCurve}
        pairings[name] = row
        zeros[name] = tuple(c for c, v in row.items() if v == 0)
        for c, v in row.items():
            if v < 0:
                failures.append(f"{name}.{c.value} = {v} < 0")
        if not zeros[name]:
            failures.append(f"{name} has no orthogonal curve")
    for (name, c), want in _expected_values(k, n).items():
        got = pairings[name][c]
        if got != want:
            failures.append(f"{name}.{c.value} = {got}, expected {want}")
    return NestedReport(k, n, pairings, zeros, tuple(failures), tuple(diff_inconsistencies(surface)))
