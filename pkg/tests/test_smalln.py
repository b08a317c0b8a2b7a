from fractions import Fraction as F

import pytest

from k3nef.cone import RatCone, is_subcone
from k3nef.errors import PreconditionError
from k3nef.hilb import C0, HDiv, pair_hilb
from k3nef.picard import W2, make_surface
from k3nef.smalln import (
    H1,
    H2,
    BSign,
    QuadricClass,
    brill_noether,
    gamma_t_on_qprime,
    improved_bound_k_ge_2n,
    knutsen_check,
    n2k2_orthogonal_curve,
    nef_cone_n2k2,
    orthogonality_nk,
    qprime_restrictions,
    ruled_surface_pairings,
    sandwich_bounds,
    sandwich_is_consistent,
)


def test_sandwich_k2_n2():
    b = sandwich_bounds(2, 2)
    assert (b.n_prime, b.j) == (3, 1)
    assert b.outer == nef_cone_n2k2()
    assert b.inner == RatCone(3, ((1, 0, 0), (0, 1, 0), (3, 3, -2)))
    assert sandwich_is_consistent(b)


def test_sandwich_preconditions():
    with pytest.raises(PreconditionError):
        sandwich_bounds(2, 3)
    with pytest.raises(PreconditionError):
        sandwich_bounds(8, 1)


@pytest.mark.parametrize("k", range(2, 13))
def test_sandwich_for_all_small_n(k):
    n_prime = -((-9 * k) // 8)
    for n in range(2, n_prime):
        b = sandwich_bounds(k, n)
        assert b.n_prime == n_prime and b.n + b.j == n_prime
        assert b.inner == RatCone(3, ((1, 0, 0), (0, 1, 0), (F(n_prime, k), F(n_prime, k), -1)))
        assert is_subcone(b.inner, b.outer)


def test_orthogonality_and_brill_noether():
    for k in range(2, 11):
        assert orthogonality_nk(k) == 0
        assert brill_noether(k + 1, 1, k) == k - 3
    assert brill_noether(3, 1, 2) == -1


def test_n2k2_geometry():
    s = make_surface("I", 2)
    third = HDiv(1, 1, -1)
    assert pair_hilb(s, 2, third, n2k2_orthogonal_curve()) == 0
    assert pair_hilb(s, 2, third, C0) == 1
    assert n2k2_orthogonal_curve().genus == 3


def test_knutsen_witnesses():
    ok, witness = knutsen_check(2, 1)
    assert not ok and witness == W2
    res = knutsen_check(2, 2)
    assert not res.ok and res.witness is None and "< 4n" in res.reason
    assert knutsen_check(4, 2).ok


def test_knutsen_search_bound_irrelevant_when_k_ge_2n():
    for k in range(4, 13):
        for n in range(2, k // 2 + 1):
            assert tuple(knutsen_check(k, n, 2)) == tuple(knutsen_check(k, n, 15)) == (True, None)


def test_improved_bound():
    assert improved_bound_k_ge_2n(6, 3) == nef_cone_n2k2()
    with pytest.raises(PreconditionError):
        improved_bound_k_ge_2n(5, 3)


def test_quadric_classes():
    assert H1.dot(H2) == 1 and H1.dot(H1) == 0
    x = QuadricClass.from_degrees(3, 5)
    assert (x.dot(H1), x.dot(H2)) == (3, 5)
    assert not QuadricClass(1, 0).ample


def test_qprime_restrictions():
    r = qprime_restrictions()
    assert r.w1 == QuadricClass(2, 0) and r.w2 == QuadricClass(0, 2)
    assert r.b_lemma == QuadricClass(4, 4)
    assert r.b_corollary == QuadricClass(-4, -4)
    assert r.b_sign_discrepancy
    assert r.b(BSign.LEMMA) == r.b_lemma and r.b("corollary") == r.b_corollary


@pytest.mark.parametrize("t,ample", [(F(1, 10), True), (F(1), True), (F(19, 10), True), (F(2), False), (F(21, 10), False)])
def test_gamma_t_corollary_sign(t, ample):
    cls, got = gamma_t_on_qprime(t)
    assert got is ample
    # 2(H1 + H2) + 2(1 - t)(H1 + H2)
    assert cls == QuadricClass(4 - 2 * t, 4 - 2 * t)


def test_gamma_t_lemma_sign_is_ample_for_t_above_zero():
    # with B = 4(H1 + H2) the restriction is (2t)(H1 + H2)
    assert gamma_t_on_qprime(F(1, 10), BSign.LEMMA) == (QuadricClass(F(1, 5), F(1, 5)), True)
    assert gamma_t_on_qprime(0, BSign.LEMMA)[1] is False


def test_ruled_surface():
    r = ruled_surface_pairings()
    assert r.fiber_dot_b == -2 and r.mu1 == 0
    assert r.gamma_t_dot_fiber(F(3, 2)) == F(-1, 2)
    assert r.gamma_t_dot_fiber(F(1, 2)) == F(1, 2)
