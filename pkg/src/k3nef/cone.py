"""Exact rational polyhedral cones in dimensions 2 and 3.

Everything here is deliberately naive: the cones that come up have at most
six rays, so duality is done by intersecting facet hyperplanes pairwise and
membership by trying every linearly independent subset of rays.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .errors import ConeError, DegeneratePairing
from .exact import cross, det, dot, primitive, qvec, rank, solve_combination

MAX_RAYS = 6


def _check_dim(dim: int) -> None:
    if dim not in (2, 3):
        raise ConeError(f"only dimensions 2 and 3 are supported, got {dim}")


def _in_cone(rays: Sequence[Sequence], v: Sequence) -> bool:
    # Caratheodory: v is in cone(rays) iff it is a nonnegative combination of
    # some linearly independent subset
    if all(x == 0 for x in v):
        return True
    dim = len(v)
    for size in range(1, min(dim, len(rays)) + 1):
        for subset in combinations(rays, size):
            if rank(subset) < size:
                continue
            coeffs = solve_combination(subset, v)
            if coeffs is not None and all(c >= 0 for c in coeffs):
                return True
    return False


@dataclass(frozen=True)
class RatCone:
    """A finitely generated cone, stored as its sorted primitive extremal rays.

    Construction normalizes: every ray is scaled (by a positive factor) to a
    primitive integer vector, duplicates are merged and redundant generators
    dropped.  Two cones are equal iff their ``rays`` tuples agree.
    """

    dim: int
    rays: tuple[tuple[int, ...], ...] = field(default=())

    def __post_init__(self):
        _check_dim(self.dim)
        prim = []
        for r in self.rays:
            if len(r) != self.dim:
                raise ConeError(f"ray {r!r} does not have dimension {self.dim}")
            if all(qvec(r)[i] == 0 for i in range(self.dim)):
                continue
            p = primitive(r)
            if p not in prim:
                prim.append(p)
        kept = list(prim)
        for r in prim:
            others = [s for s in kept if s != r]
            if _in_cone(others, r):
                kept = others
        object.__setattr__(self, "rays", tuple(sorted(kept)))

    @classmethod
    def of(cls, rays: Iterable[Sequence]) -> "RatCone":
        rays = [tuple(r) for r in rays]
        if not rays:
            raise ConeError("cannot infer dimension of a cone with no rays")
        return cls(len(rays[0]), tuple(rays))

    @property
    def is_pointed(self) -> bool:
        return not any(_in_cone(self.rays, tuple(-x for x in r)) for r in self.rays)

    @property
    def is_full_dimensional(self) -> bool:
        return rank(self.rays) == self.dim

    def __contains__(self, v) -> bool:
        return contains(self, v)

    def to_json(self):
        return [list(r) for r in self.rays]


@dataclass(frozen=True)
class Pairing:
    """Bilinear form ``<x, y> = x^T M y`` between two spaces of equal dimension."""

    matrix: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        m = tuple(qvec(row) for row in self.matrix)
        if any(len(row) != len(m) for row in m):
            raise ValueError("pairing matrix must be square")
        object.__setattr__(self, "matrix", m)

    @classmethod
    def identity(cls, dim: int) -> "Pairing":
        return cls(tuple(tuple(int(i == j) for j in range(dim)) for i in range(dim)))

    @property
    def dim(self) -> int:
        return len(self.matrix)

    def functional(self, y: Sequence) -> tuple[Fraction, ...]:
        """The linear form ``x -> <x, y>`` as a coefficient vector."""
        return tuple(dot(row, y) for row in self.matrix)

    def __call__(self, x: Sequence, y: Sequence) -> Fraction:
        return dot(x, self.functional(y))


def dual_cone(rays: Sequence[Sequence], pairing: Pairing | None = None) -> RatCone:
    """``{x : <x, r> >= 0 for every r in rays}`` as a minimal list of rays.

    Raises DegeneratePairing for a singular pairing and ConeError when the
    dual would not be pointed (the input rays do not span the space).
    """
    rays = [qvec(r) for r in rays]
    if not rays:
        raise ConeError("dual of the zero cone is the whole space, which is not pointed")
    dim = len(rays[0])
    _check_dim(dim)
    if len(rays) > MAX_RAYS:
        raise ConeError(f"at most {MAX_RAYS} rays are supported, got {len(rays)}")
    if pairing is None:
        pairing = Pairing.identity(dim)
    if pairing.dim != dim:
        raise ConeError("pairing dimension does not match the rays")
    if det(pairing.matrix) == 0:
        raise DegeneratePairing("pairing matrix is singular")
    forms = [pairing.functional(r) for r in rays]
    if rank(forms) < dim:
        raise ConeError("input rays do not span the space; the dual cone is not pointed")

    candidates = []
    if dim == 2:
        for f in forms:
            candidates.append((-f[1], f[0]))
    else:
        for f, g in combinations(forms, 2):
            c = cross(f, g)
            if any(x != 0 for x in c):
                candidates.append(c)
    out = []
    for c in candidates:
        for v in (c, tuple(-x for x in c)):
            if all(dot(f, v) >= 0 for f in forms):
                out.append(v)
    return RatCone(dim, tuple(out))


def contains(cone: RatCone, v: Sequence) -> bool:
    """True iff ``v`` is a nonnegative rational combination of the rays."""
    v = qvec(v)
    if len(v) != cone.dim:
        raise ConeError(f"vector of dimension {len(v)} tested against a {cone.dim}-dimensional cone")
    return _in_cone(cone.rays, v)


def cone_equal(c1: RatCone, c2: RatCone) -> bool:
    if c1.dim != c2.dim:
        raise ConeError("cones live in different dimensions")
    return c1.rays == c2.rays


def is_subcone(inner: RatCone, outer: RatCone) -> bool:
    return all(contains(outer, r) for r in inner.rays)
