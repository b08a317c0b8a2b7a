"""Bounds on Nef(X^[n]) below the Bridgeland threshold, case I only.

Also holds the numerical side of the n = k = 2 argument, where X is a double
cover of a smooth quadric Q and the candidate divisor is checked on the two
base-locus components Q' (a copy of Q) and S (a ruled surface over the
ramification curve).
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .cone import RatCone, is_subcone
from .errors import PreconditionError
from .exact import Rational, q
from .hilb import HCurve, HDiv, lambda_case1_closed_form, min_threshold_n, pair_hilb
from .picard import W1, W2, Case, Div, SurfaceK3, genus_adjunction, intersect


@dataclass(frozen=True)
class SandwichBounds:
    k: int
    n: int
    n_prime: int
    j: int
    outer: RatCone
    inner: RatCone


def _case1_cone(k: int, coeff: Fraction) -> RatCone:
    return RatCone(3, ((1, 0, 0), (0, 1, 0), (coeff, coeff, -1)))


def sandwich_bounds(k: int, n: int) -> SandwichBounds:
    """Nef(X^[n]) lies between the pullback bound (inner) and Lambda (outer)."""
    surface = SurfaceK3(Case.I, k)
    n_prime = min_threshold_n(surface)
    if n <= 1:
        raise PreconditionError("need n > 1", "n > 1")
    if n >= n_prime:
        raise PreconditionError(
            f"n = {n} is at or above the threshold n' = {n_prime}; the nef cone is known exactly",
            "n < n'",
        )
    j = n_prime - n
    outer = lambda_case1_closed_form(k, n)
    inner = _case1_cone(k, Fraction(n + j, k))
    return SandwichBounds(k, n, n_prime, j, outer, inner)


def improved_bound_k_ge_2n(k: int, n: int) -> RatCone:
    """Inner bound spanned by Nef(X) and w1 + w2 - B/2 when w1 + w2 is n-very ample."""
    SurfaceK3(Case.I, k)
    if k < 2 * n:
        raise PreconditionError(f"need k >= 2n, got k={k}, n={n}", "k >= 2n")
    ok, witness = knutsen_check(k, n)
    if not ok:
        raise PreconditionError(f"w1 + w2 is not {n}-very ample (witness {witness})", "L n-very ample")
    return _case1_cone(k, Fraction(1))


@dataclass(frozen=True)
class KnutsenResult:
    ok: bool
    witness: Div | None
    reason: str

    def __iter__(self):
        yield self.ok
        yield self.witness


def _knutsen_violates(l_sq, ld, d_sq, n, l_is_2d) -> bool:
    # D obstructs n-very ampleness iff the chain holds and both equality
    # clauses hold as biconditionals
    if not (2 * d_sq <= ld <= d_sq + n + 1 <= 2 * n + 2):
        return False
    if (2 * d_sq == ld) != (l_is_2d and l_sq <= 4 * n + 4):
        return False
    if (d_sq + n + 1 == 2 * n + 2) != (l_is_2d and l_sq == 4 * n + 4):
        return False
    return True


def knutsen_check(k: int, n: int, search_bound: int = 10) -> KnutsenResult:
    """Test n-very ampleness of L = w1 + w2 on a case I surface.

    Checks ``L^2 >= 4n``, then searches effective ``D = x w1 + y w2`` with
    ``0 <= x, y <= search_bound`` for an obstructing divisor.  The bound is a
    heuristic: for k >= 2n and n >= 2 the inequalities force x = y = 0.
    """
    surface = SurfaceK3(Case.I, k)
    line = W1 + W2
    l_sq = intersect(surface, line, line)
    if l_sq < 4 * n:
        return KnutsenResult(False, None, f"L^2 = {l_sq} < 4n = {4 * n}")
    for x in range(search_bound + 1):
        for y in range(search_bound + 1):
            if x == 0 and y == 0:
                continue
            # case I: L.D = k(x + y), D^2 = 2kxy, and L ~ 2D only for x = y = 1/2
            if _knutsen_violates(l_sq, k * (x + y), 2 * k * x * y, n, False):
                return KnutsenResult(False, Div(x, y), f"effective divisor {x}w1+{y}w2 violates the criterion")
    return KnutsenResult(True, None, f"L^2 = {l_sq} >= 4n and no obstruction with x, y <= {search_bound}")


def brill_noether(g: int, r: int, d: int) -> int:
    return g - (r + 1) * (g - d + r)


def orthogonality_nk(k: int) -> Fraction:
    """Pairing of w1^[k] + w2^[k] - B/2 with C_[k] for C in |w1 + w2|."""
    surface = SurfaceK3(Case.I, k)
    c = W1 + W2
    curve = HCurve.induced(surface, c, genus_adjunction(surface, c))
    return pair_hilb(surface, k, HDiv(1, 1, -1), curve)


# -- the quadric Q' inside X^[2] -------------------------------------------


@dataclass(frozen=True)
class QuadricClass:
    """``p H1 + q H2`` on a smooth quadric; ``H1.H2 = 1``, ``Hi.Hi = 0``."""

    p: Fraction
    q: Fraction

    def __post_init__(self):
        object.__setattr__(self, "p", q(self.p))
        object.__setattr__(self, "q", q(self.q))

    def dot(self, other: "QuadricClass") -> Fraction:
        return self.p * other.q + self.q * other.p

    @classmethod
    def from_degrees(cls, on_h1: Rational, on_h2: Rational) -> "QuadricClass":
        """Solve ``X.H1 = on_h1``, ``X.H2 = on_h2``."""
        return cls(on_h2, on_h1)

    @property
    def ample(self) -> bool:
        return self.p > 0 and self.q > 0


H1 = QuadricClass(1, 0)
H2 = QuadricClass(0, 1)


class BSign(str, enum.Enum):
    LEMMA = "lemma"
    COROLLARY = "corollary"


# degrees of the restricted classes against (H1, H2)
_QPRIME_DEGREES = {
    "w1^[2]": (0, 2),
    "w2^[2]": (2, 0),
    "B": (4, 4),
}


@dataclass(frozen=True)
class QPrimeRestrictions:
    w1: QuadricClass
    w2: QuadricClass
    b_lemma: QuadricClass
    b_corollary: QuadricClass

    @property
    def b_sign_discrepancy(self) -> bool:
        return self.b_lemma != self.b_corollary

    def b(self, sign: BSign) -> QuadricClass:
        return self.b_lemma if BSign(sign) is BSign.LEMMA else self.b_corollary


def qprime_restrictions() -> QPrimeRestrictions:
    """Restrictions of w1^[2], w2^[2] and B to Q'.

    Two values are returned for B: the one solved from the degrees
    ``B.H1 = B.H2 = 4`` and the stated ``-4(H1 + H2)``, which have opposite signs.
    """
    w1 = QuadricClass.from_degrees(*_QPRIME_DEGREES["w1^[2]"])
    w2 = QuadricClass.from_degrees(*_QPRIME_DEGREES["w2^[2]"])
    b_lemma = QuadricClass.from_degrees(*_QPRIME_DEGREES["B"])
    b_cor = QuadricClass(-4, -4)
    return QPrimeRestrictions(w1, w2, b_lemma, b_cor)


def gamma_t_on_qprime(t: Rational, b_sign: BSign = BSign.COROLLARY) -> tuple[QuadricClass, bool]:
    """Restriction of ``w1^[2] + w2^[2] - (1-t) B/2`` to Q', and whether it is ample there."""
    t = q(t)
    res = qprime_restrictions()
    b = res.b(b_sign)
    coeff = (1 - t) / 2
    cls = QuadricClass(res.w1.p + res.w2.p - coeff * b.p, res.w1.q + res.w2.q - coeff * b.q)
    return cls, cls.ample


@dataclass(frozen=True)
class RuledSurfacePairings:
    fiber_dot_b: Fraction
    w1_dot_fiber: Fraction
    w2_dot_fiber: Fraction
    mu1: Fraction
    nef_generators: tuple[str, str]

    def gamma_t_dot_fiber(self, t: Rational) -> Fraction:
        t = q(t)
        return self.w1_dot_fiber + self.w2_dot_fiber - (1 - t) / 2 * self.fiber_dot_b


def ruled_surface_pairings() -> RuledSurfacePairings:
    """Intersection data on S = P(T_X|_R) used in the n = k = 2 argument.

    The fibre F sits in B with ``F.B = -2`` and misses general members of
    |w_i|.  T_X|_R is semistable of degree 0, so the nef cone of S is spanned
    by the tautological class E and F.  Note ``Gamma_t.F = 1 - t`` is negative
    for t > 1.
    """
    return RuledSurfacePairings(Fraction(-2), Fraction(0), Fraction(0), Fraction(0), ("E", "F"))


def nef_cone_n2k2() -> RatCone:
    return _case1_cone(2, Fraction(1))


def n2k2_orthogonal_curve() -> HCurve:
    """C_[2] for C in |w1 + w2| (genus 3), carrying the g^1_2 pulled back from the quadric."""
    surface = SurfaceK3(Case.I, 2)
    return HCurve.induced(surface, W1 + W2, label="(w1+w2)_[2]")


def sandwich_is_consistent(b: SandwichBounds) -> bool:
    return is_subcone(b.inner, b.outer)
