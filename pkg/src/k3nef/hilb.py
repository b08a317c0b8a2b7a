"""Divisors and curves on the Hilbert scheme of n points, and its nef and Mori cones.

Coordinates on N^1(X^[n]) are ``(a, b, c)`` for ``a w1^[n] + b w2^[n] + c B/2``.
Half of the exceptional divisor B is used as the third generator because it
is integral in the Picard group; a nef divisor ``M^[n] - B/2`` therefore has
``c = -1``.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .cone import RatCone, dual_cone
from .errors import PreconditionError, ThresholdNotMet
from .exact import Rational, q
from .picard import W1, W2, Case, Div, SurfaceK3, genus_adjunction, intersect


@dataclass(frozen=True)
class HDiv:
    a: Fraction = Fraction(0)
    b: Fraction = Fraction(0)
    c: Fraction = Fraction(0)

    def __post_init__(self):
        for name in ("a", "b", "c"):
            object.__setattr__(self, name, q(getattr(self, name)))

    @classmethod
    def induced(cls, d: Div, half_b: Rational = 0) -> "HDiv":
        """``D^[n] + half_b * B/2``."""
        return cls(d.a, d.b, half_b)

    @property
    def surface_part(self) -> Div:
        return Div(self.a, self.b)

    def __iter__(self):
        yield self.a
        yield self.b
        yield self.c

    def __add__(self, other: "HDiv") -> "HDiv":
        return HDiv(self.a + other.a, self.b + other.b, self.c + other.c)

    def __sub__(self, other: "HDiv") -> "HDiv":
        return HDiv(self.a - other.a, self.b - other.b, self.c - other.c)

    def __mul__(self, t: Rational) -> "HDiv":
        t = q(t)
        return HDiv(t * self.a, t * self.b, t * self.c)

    __rmul__ = __mul__


B_HALF = HDiv(0, 0, 1)
B = HDiv(0, 0, 2)


class CurveKind(str, enum.Enum):
    INDUCED = "induced"
    CONTRACTED = "contracted"


@dataclass(frozen=True)
class HCurve:
    """A curve class on X^[n].

    ``INDUCED`` is the rational curve C_[n] traced by the fibres of a g^1_n on
    a curve C of class ``curve``.  Existence of the g^1_n is an assumption
    carried in ``assumes_pencil``; nothing here checks it.  ``CONTRACTED`` is
    the class C_0 of a curve in a fibre of the Hilbert-Chow morphism.
    """

    kind: CurveKind
    curve: Div | None = None
    genus: Fraction | None = None
    assumes_pencil: bool = False
    label: str = ""

    @classmethod
    def induced(cls, surface: SurfaceK3, c: Div, genus: Rational | None = None, label: str = "") -> "HCurve":
        g = genus_adjunction(surface, c) if genus is None else q(genus)
        return cls(CurveKind.INDUCED, c, g, True, label or f"C[{c.a},{c.b}]_[n]")

    @classmethod
    def contracted(cls) -> "HCurve":
        return cls(CurveKind.CONTRACTED, label="C_0")


def w_curve(surface: SurfaceK3, i: int) -> HCurve:
    """The curve w_{i,[n]}."""
    return HCurve.induced(surface, W1 if i == 1 else W2, label=f"w_{i},[n]")


C0 = HCurve.contracted()


def pair_hilb(surface: SurfaceK3, n: int, d: HDiv, curve: HCurve) -> Fraction:
    """Intersection number of a divisor and a curve on X^[n].

    Uses ``D^[n].C_[n] = D.C``, ``B.C_[n] = 2g(C) - 2 + 2n``, ``D^[n].C_0 = 0``
    and ``B.C_0 = -2``; the B/2 coordinate halves the B entries.
    """
    if n < 1:
        raise PreconditionError("number of points must be positive", "n >= 1")
    if curve.kind is CurveKind.CONTRACTED:
        return -d.c
    return intersect(surface, d.surface_part, curve.curve) + d.c * (curve.genus - 1 + n)


def curve_functional(surface: SurfaceK3, n: int, curve: HCurve) -> tuple[Fraction, ...]:
    """Coordinates of a curve class in the basis of N_1 dual to (w1^[n], w2^[n], B/2)."""
    return tuple(pair_hilb(surface, n, basis, curve) for basis in (HDiv(1, 0, 0), HDiv(0, 1, 0), B_HALF))


def mori_generators(surface: SurfaceK3) -> list[HCurve]:
    return [w_curve(surface, 1), w_curve(surface, 2), C0]


def lambda_cone(surface: SurfaceK3, n: int) -> RatCone:
    """Divisors pairing nonnegatively with w_{1,[n]}, w_{2,[n]} and C_0."""
    if n < 2:
        raise PreconditionError("the cone Lambda is defined for n >= 2", "n >= 2")
    forms = [curve_functional(surface, n, c) for c in mori_generators(surface)]
    return dual_cone(forms)


def lambda_case1_closed_form(k: int, n: int) -> RatCone:
    """Nef(X) together with ``(n/k)(w1^[n] + w2^[n]) - B/2``."""
    SurfaceK3(Case.I, k)
    if n < 2:
        raise PreconditionError("closed form needs n > 1", "n > 1")
    t = Fraction(n, k)
    return RatCone(3, ((1, 0, 0), (0, 1, 0), (t, t, -1)))


def case1_extremal_divisor(k: int, n: int) -> HDiv:
    t = Fraction(n, k)
    return HDiv(t, t, -1)


def case2_quartic(k: int, n: int) -> int:
    return (
        32 * (k * k + 2 * k + 1) * n**4
        - 4 * k * (25 * k * k + 41 * k + 16) * n**3
        + 4 * k**2 * (26 * k * k + 33 * k + 7) * n**2
        - 4 * k**3 * (9 * k * k + 8 * k - 1) * n
        - k**4
    )


def case3_quadratic(k: int, n: int) -> int:
    return 8 * n * n + (2 - 9 * k) * n + 8


def threshold_holds(surface: SurfaceK3, n: int) -> bool:
    """Whether n is in the range where Nef(X^[n]) is known to equal Lambda."""
    if n < 2:
        raise PreconditionError("thresholds are stated for n >= 2", "n >= 2")
    k = surface.k
    if surface.case is Case.I:
        return Fraction(n) >= Fraction(9 * k, 8)
    if surface.case is Case.II:
        return n > k and case2_quartic(k, n) >= 0
    return k >= 3 and n >= k and case3_quadratic(k, n) >= 0


THRESHOLD_TEXT = {
    Case.I: "n >= 9k/8",
    Case.II: "n > k and 32(k^2+2k+1)n^4 - 4k(25k^2+41k+16)n^3 + 4k^2(26k^2+33k+7)n^2 - 4k^3(9k^2+8k-1)n - k^4 >= 0",
    Case.III: "n >= k >= 3 and 8n^2 + (2-9k)n + 8 >= 0",
}


def min_threshold_n(surface: SurfaceK3) -> int:
    """Least n >= 2 passing :func:`threshold_holds`."""
    if surface.case is Case.III and surface.k < 3:
        raise ThresholdNotMet("case III needs k >= 3 for any n", "k >= 3")
    n = 2
    # both polynomials have positive leading coefficient, so this terminates
    while not threshold_holds(surface, n):
        n += 1
    return n


def _require_threshold(surface: SurfaceK3, n: int) -> None:
    if not threshold_holds(surface, n):
        text = THRESHOLD_TEXT[surface.case]
        raise ThresholdNotMet(
            f"threshold {text.replace('>=', '≥')} not met for case {surface.case.value}, k={surface.k}, n={n}",
            text,
        )


def nef_cone_hilb(surface: SurfaceK3, n: int) -> RatCone:
    _require_threshold(surface, n)
    return lambda_cone(surface, n)


def mori_cone_hilb(surface: SurfaceK3, n: int) -> list[HCurve]:
    _require_threshold(surface, n)
    return mori_generators(surface)
