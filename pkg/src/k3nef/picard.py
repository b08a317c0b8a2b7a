"""Picard lattices of Mori dream K3 surfaces of Picard rank two.

The divisor class group is ``Z w1 + Z w2`` and the intersection form is one
of three Gram matrices, indexed by the genera of ``w1`` and ``w2``:

    I   [[0, k], [k, 0]]      both elliptic, k >= 2
    II  [[-2, k], [k, 0]]     w1 rational, w2 elliptic, k >= 1
    III [[-2, k], [k, -2]]    both rational, k >= 1
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .cone import Pairing, RatCone, dual_cone
from .errors import InvalidSurface
from .exact import Rational, q


class Case(str, enum.Enum):
    I = "I"
    II = "II"
    III = "III"


_SELF_INTERSECTIONS = {Case.I: (0, 0), Case.II: (-2, 0), Case.III: (-2, -2)}


@dataclass(frozen=True)
class SurfaceK3:
    case: Case
    k: int

    def __post_init__(self):
        try:
            case = Case(self.case)
        except ValueError:
            raise InvalidSurface(f"unknown case {self.case!r}; expected I, II or III", "case in {I, II, III}") from None
        object.__setattr__(self, "case", case)
        if isinstance(self.k, bool) or int(self.k) != self.k:
            raise InvalidSurface(f"k must be an integer, got {self.k!r}", "k integer")
        object.__setattr__(self, "k", int(self.k))
        if self.k <= 0:
            raise InvalidSurface(f"k = w1.w2 must be positive, got {self.k}", "k >= 1")
        if case is Case.I and self.k < 2:
            raise InvalidSurface("case I requires k >= 2", "k >= 2 in case I")

    @property
    def gram(self) -> tuple[tuple[int, int], tuple[int, int]]:
        s1, s2 = _SELF_INTERSECTIONS[self.case]
        return ((s1, self.k), (self.k, s2))

    @property
    def pairing(self) -> Pairing:
        return Pairing(self.gram)

    @property
    def is_hyperbolic(self) -> bool:
        """Whether the Gram matrix has signature (1, 1), as the Hodge index theorem demands.

        False only for case III with k in {1, 2}.
        """
        g = self.gram
        return g[0][0] * g[1][1] - g[0][1] ** 2 < 0


def make_surface(case, k: int) -> SurfaceK3:
    return SurfaceK3(case, k)


@dataclass(frozen=True)
class Div:
    """The divisor class ``a*w1 + b*w2`` with rational coefficients."""

    a: Fraction = Fraction(0)
    b: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "a", q(self.a))
        object.__setattr__(self, "b", q(self.b))

    def __add__(self, other: "Div") -> "Div":
        return Div(self.a + other.a, self.b + other.b)

    def __sub__(self, other: "Div") -> "Div":
        return Div(self.a - other.a, self.b - other.b)

    def __neg__(self) -> "Div":
        return Div(-self.a, -self.b)

    def __mul__(self, c: Rational) -> "Div":
        c = q(c)
        return Div(c * self.a, c * self.b)

    __rmul__ = __mul__

    def __iter__(self):
        yield self.a
        yield self.b

    @property
    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0


W1 = Div(1, 0)
W2 = Div(0, 1)
ZERO = Div(0, 0)


def intersect(surface: SurfaceK3, d1: Div, d2: Div) -> Fraction:
    return surface.pairing(tuple(d1), tuple(d2))


def genus_adjunction(surface: SurfaceK3, c: Div) -> Fraction:
    """Arithmetic genus ``(C^2 + 2)/2`` of a curve class on a K3 surface."""
    return (intersect(surface, c, c) + 2) / 2


def eff_cone_X(surface: SurfaceK3) -> RatCone:
    return RatCone(2, ((1, 0), (0, 1)))


def nef_cone_X(surface: SurfaceK3) -> RatCone:
    """Dual of the effective cone under the intersection form."""
    return dual_cone(eff_cone_X(surface).rays, surface.pairing)


def nef_cone_X_listed(surface: SurfaceK3) -> RatCone:
    """The closed-form generators, kept separate so the duality result can be checked against them."""
    k = surface.k
    if surface.case is Case.I:
        rays = ((1, 0), (0, 1))
    elif surface.case is Case.II:
        rays = ((k, 2), (0, 1))
    else:
        rays = ((k, 2), (2, k))
    return RatCone(2, rays)


def is_ample(surface: SurfaceK3, h: Div) -> bool:
    """Strictly positive on both effective generators and on itself."""
    return (
        intersect(surface, h, W1) > 0
        and intersect(surface, h, W2) > 0
        and intersect(surface, h, h) > 0
    )
