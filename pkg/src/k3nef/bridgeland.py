"""Numerical Bridgeland walls in an (H, D)-slice of a K3 surface.

Only numerics are modelled: Chern characters, slopes, central charges and
the centers/radii of the semicircular walls.  Hearts, stability of actual
objects and moduli spaces are not.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import (
    BelowThreshold,
    EqualSlopes,
    HorizontalDegenerate,
    PreconditionError,
    VerticalWall,
)
from .exact import Rational, q
from .hilb import HDiv
from .picard import W1, W2, Case, Div, SurfaceK3, intersect, is_ample


@dataclass(frozen=True)
class ChernChar:
    ch0: Fraction
    ch1: Div
    ch2: Fraction

    def __post_init__(self):
        object.__setattr__(self, "ch0", q(self.ch0))
        object.__setattr__(self, "ch2", q(self.ch2))


def ideal_sheaf(n: int) -> ChernChar:
    """Chern character (1, 0, -n) of the ideal sheaf of n points."""
    return ChernChar(1, Div(0, 0), -n)


def twisted_line_bundle(surface: SurfaceK3, line: Div, m: int = 0) -> ChernChar:
    """Chern character of ``L ⊗ I_Z'`` with Z' of length m."""
    return ChernChar(1, line, intersect(surface, line, line) / 2 - m)


@dataclass(frozen=True)
class Slice:
    h: Div
    d: Div

    def check(self, surface: SurfaceK3) -> None:
        if not is_ample(surface, self.h):
            raise PreconditionError(f"H = {self.h} is not ample", "H ample")


@dataclass(frozen=True)
class Wall:
    center: Fraction
    radius_sq: Fraction
    label: str = ""

    @property
    def degenerate(self) -> bool:
        return self.radius_sq <= 0


def twisted_chern(ch: ChernChar, surface: SurfaceK3, d: Div) -> ChernChar:
    return ChernChar(
        ch.ch0,
        ch.ch1 - ch.ch0 * d,
        ch.ch2 - intersect(surface, ch.ch1, d) + ch.ch0 * intersect(surface, d, d) / 2,
    )


def _h_sq(sl: Slice, surface: SurfaceK3) -> Fraction:
    return intersect(surface, sl.h, sl.h)


def mu_HD(ch: ChernChar, sl: Slice, surface: SurfaceK3) -> Fraction:
    if ch.ch0 == 0:
        raise ZeroDivisionError("twisted slope is undefined for rank zero")
    tw = twisted_chern(ch, surface, sl.d)
    return intersect(surface, sl.h, tw.ch1) / (_h_sq(sl, surface) * ch.ch0)


def delta_HD(ch: ChernChar, sl: Slice, surface: SurfaceK3) -> Fraction:
    mu = mu_HD(ch, sl, surface)
    tw = twisted_chern(ch, surface, sl.d)
    return mu * mu / 2 - tw.ch2 / (_h_sq(sl, surface) * ch.ch0)


def central_charge(
    ch: ChernChar,
    s: Rational,
    t: Rational | None,
    sl: Slice,
    surface: SurfaceK3,
    *,
    t_sq: Rational | None = None,
) -> tuple[Fraction, Fraction]:
    """``(Re Z_{s,t}, Im Z_{s,t})``.

    Z depends on t only through t^2, so ``t_sq`` may be passed instead of t
    to keep points like ``t = sqrt(2)`` exact.
    """
    if t_sq is None:
        if t is None or q(t) <= 0:
            raise ValueError("t must be positive")
        t_sq = q(t) ** 2
    else:
        t_sq = q(t_sq)
        if t_sq <= 0:
            raise ValueError("t^2 must be positive")
    tw = twisted_chern(ch, surface, sl.d + q(s) * sl.h)
    re = -tw.ch2 + t_sq * _h_sq(sl, surface) / 2 * tw.ch0
    im = intersect(surface, sl.h, tw.ch1)
    return re, im


def mu_st(ch, s, t, sl, surface, *, t_sq=None) -> Fraction:
    re, im = central_charge(ch, s, t, sl, surface, t_sq=t_sq)
    if im == 0:
        raise VerticalWall(f"Im Z vanishes at s = {s}")
    return -re / im


def wall(e: ChernChar, f: ChernChar, sl: Slice, surface: SurfaceK3, label: str = "") -> Wall:
    """Numerical wall where e and f have equal tilt slope."""
    mu_e, mu_f = mu_HD(e, sl, surface), mu_HD(f, sl, surface)
    if mu_e == mu_f:
        raise EqualSlopes("walls need distinct twisted slopes")
    de, df = delta_HD(e, sl, surface), delta_HD(f, sl, surface)
    s0 = (mu_e + mu_f) / 2 - (de - df) / (mu_e - mu_f)
    return Wall(s0, (mu_e - s0) ** 2 - 2 * de, label)


def wall_center_ideal(line: Div, m: int, n: int, sl: Slice, surface: SurfaceK3) -> Fraction:
    """Center of W(L ⊗ I_Z', I_Z) for len Z' = m and len Z = n."""
    lh = intersect(surface, line, sl.h)
    if lh == 0:
        raise HorizontalDegenerate("L.H = 0")
    return (n - m + intersect(surface, line, line) / 2 - intersect(surface, line, sl.d)) / lh


def is_nested_inside(w2: Wall, w1: Wall) -> bool:
    """For walls left of the vertical wall: w2 sits inside w1 iff its center is larger."""
    return w1.center < w2.center


def gieseker_lower_bound(sl: Slice, surface: SurfaceK3, n: int) -> Fraction:
    """Radius-squared bound varrho from the Gieseker wall criterion."""
    h2 = _h_sq(sl, surface)
    if h2 <= 0:
        raise PreconditionError("H^2 must be positive", "H^2 > 0")
    hd = intersect(surface, sl.h, sl.d)
    d2 = intersect(surface, sl.d, sl.d)
    return (2 * n * h2 + hd * hd - h2 * d2) / (8 * h2 * h2)


def case1_slice(k: int, n: int) -> Slice:
    t = Fraction(n, k) - 1
    return Slice(Div(t, t), Div(-1, -1))


CASE1_CRITICAL = (W1 + W2, W1, W2)


def enumerate_effective(bound: int) -> list[Div]:
    """Nonzero effective classes a*w1 + b*w2 with 0 <= a, b <= bound.

    A superset heuristic for the critical divisors; not a definition of them.
    """
    return [Div(a, b) for a in range(bound + 1) for b in range(bound + 1) if (a, b) != (0, 0)]


@dataclass(frozen=True)
class GiesekerCheck:
    k: int
    n: int
    slice: Slice
    candidates: tuple[tuple[Div, Wall], ...]
    wall: Wall
    destabilizer: Div
    varrho: Fraction
    vertical: Fraction
    certified: bool = field(default=False)


def gieseker_candidates(k: int, n: int, critical: Sequence[Div] = CASE1_CRITICAL) -> GiesekerCheck:
    """Run the case I wall computation without raising on failure of the radius test.

    For each critical divisor F the wall W(O(-F), I_Z) is computed; the
    largest wall is the one with the smallest center, ties broken by the
    lexicographically smallest destabilizer ``-F``.
    """
    surface = SurfaceK3(Case.I, k)
    if not n > k:
        raise PreconditionError(f"need n > k, got k={k}, n={n}", "n > k")
    sl = case1_slice(k, n)
    sl.check(surface)
    v = ideal_sheaf(n)
    cands = []
    for f in critical:
        dest = -f
        w = wall(twisted_line_bundle(surface, dest), v, sl, surface, label=f"O({_div_label(dest)})")
        cands.append((dest, w))
    dest, chosen = min(cands, key=lambda item: (item[1].center, item[0].a, item[0].b))
    varrho = gieseker_lower_bound(sl, surface, n)
    return GiesekerCheck(
        k, n, sl, tuple(cands), chosen, dest, varrho,
        vertical=mu_HD(v, sl, surface),
        certified=chosen.radius_sq >= varrho,
    )


def gieseker_wall_case1(k: int, n: int, critical: Sequence[Div] = CASE1_CRITICAL) -> GiesekerCheck:
    """Certified Gieseker wall for ideal sheaves of n points, case I.

    Raises BelowThreshold when the radius criterion fails, i.e. when n < 9k/8.
    """
    check = gieseker_candidates(k, n, critical)
    if not check.certified:
        raise BelowThreshold(
            f"radius^2 = {check.wall.radius_sq} < varrho = {check.varrho}; wall not certified",
            "radius^2 >= varrho (n >= 9k/8)",
            check,
        )
    return check


def bm_nef_divisor(s_w: Rational, sl: Slice, surface: SurfaceK3) -> HDiv:
    """``-s_W H^[n] - D^[n] - B/2``; the canonical term vanishes on a K3."""
    if not _antieffective(sl.d):
        raise PreconditionError(f"D = {sl.d} is not antieffective", "-D effective")
    m = -q(s_w) * sl.h - sl.d
    return HDiv(m.a, m.b, -1)


def _antieffective(d: Div) -> bool:
    return d.a <= 0 and d.b <= 0


def _div_label(d: Div) -> str:
    parts = []
    for coeff, name in ((d.a, "w1"), (d.b, "w2")):
        if coeff == 0:
            continue
        mag = abs(coeff)
        term = name if mag == 1 else f"{mag}{name}"
        parts.append(("-" if coeff < 0 else "+") + term)
    if not parts:
        return "0"
    s = "".join(parts)
    return s[1:] if s.startswith("+") else s
