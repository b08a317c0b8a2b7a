from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from k3nef.cone import contains
from k3nef.errors import ThresholdNotMet
from k3nef.exact import rank
from k3nef.hilb import (
    B_HALF,
    C0,
    HCurve,
    HDiv,
    case1_extremal_divisor,
    curve_functional,
    lambda_case1_closed_form,
    lambda_cone,
    min_threshold_n,
    mori_cone_hilb,
    nef_cone_hilb,
    pair_hilb,
    threshold_holds,
    w_curve,
)
from k3nef.picard import W1, W2, intersect, make_surface


def test_pairing_table():
    s = make_surface("I", 4)
    assert pair_hilb(s, 5, B_HALF, C0) == -1
    assert pair_hilb(s, 5, HDiv(1, 0, 0), w_curve(s, 2)) == 4
    s2 = make_surface("I", 2)
    assert pair_hilb(s2, 3, HDiv(Fraction(3, 2), Fraction(3, 2), -1), w_curve(s2, 1)) == 0


def test_b_against_induced_curve_is_2g_minus_2_plus_2n():
    s = make_surface("I", 3)
    c = HCurve.induced(s, W1 + W2)  # genus 4
    assert pair_hilb(s, 6, HDiv(0, 0, 2), c) == 2 * 4 - 2 + 2 * 6


def test_lambda_case1_examples():
    assert lambda_case1_closed_form(2, 3).rays == ((0, 1, 0), (1, 0, 0), (3, 3, -2))
    assert (1, 1, -1) in lambda_case1_closed_form(2, 2).rays


def test_lambda_case3_third_ray():
    # -2a + 3b + 3c = 0 = 3a - 2b + 3c with c = -2 gives a = b = 6
    cone = lambda_cone(make_surface("III", 3), 4)
    assert (3, 3, -1) in cone.rays
    assert {(2, 3, 0), (3, 2, 0)} <= set(cone.rays)


def test_lambda_case2_contains_surface_nef_rays():
    cone = lambda_cone(make_surface("II", 2), 3)
    # k w1 + 2 w2 = (2, 2) normalizes to (1, 1)
    assert {(1, 1, 0), (0, 1, 0)} <= set(cone.rays)


@pytest.mark.parametrize("case,k,n,expected", [
    ("I", 2, 3, True),
    ("I", 2, 2, False),
    ("I", 8, 9, True),
    ("I", 8, 8, False),
    ("III", 3, 3, True),
    ("III", 2, 10, False),
    ("II", 1, 2, True),
    ("II", 3, 3, False),
])
def test_threshold_examples(case, k, n, expected):
    assert threshold_holds(make_surface(case, k), n) is expected


def test_min_threshold_examples():
    assert min_threshold_n(make_surface("I", 2)) == 3
    assert min_threshold_n(make_surface("I", 8)) == 9
    assert min_threshold_n(make_surface("III", 3)) == 3
    with pytest.raises(ThresholdNotMet):
        min_threshold_n(make_surface("III", 2))


def test_case1_min_threshold_is_ceiling():
    for k in range(2, 30):
        assert min_threshold_n(make_surface("I", k)) == max(2, -((-9 * k) // 8))


def test_nef_and_mori_cones():
    s = make_surface("I", 2)
    assert nef_cone_hilb(s, 3) == lambda_case1_closed_form(2, 3)
    with pytest.raises(ThresholdNotMet, match="9k/8"):
        nef_cone_hilb(s, 2)
    gens = mori_cone_hilb(s, 3)
    assert [g.label for g in gens] == ["w_1,[n]", "w_2,[n]", "C_0"]
    for ray in nef_cone_hilb(s, 3).rays:
        vals = [pair_hilb(s, 3, HDiv(*ray), g) for g in gens]
        assert all(v >= 0 for v in vals)
        assert sum(v == 0 for v in vals) >= 2
    s2 = make_surface("II", 1)
    assert nef_cone_hilb(s2, 2) == lambda_cone(s2, 2)


def test_case1_extremal_divisor_pairings():
    for k in range(2, 7):
        s = make_surface("I", k)
        for n in range(2, 13):
            d = case1_extremal_divisor(k, n)
            assert pair_hilb(s, n, d, w_curve(s, 1)) == 0
            assert pair_hilb(s, n, d, w_curve(s, 2)) == 0
            assert pair_hilb(s, n, d, C0) == 1


def test_lambda_shrinks_with_n():
    # the B-negative generator at level n is not nef at level n + 1
    for k in range(2, 7):
        for n in range(2, 12):
            at_n = case1_extremal_divisor(k, n)
            at_next = case1_extremal_divisor(k, n + 1)
            assert not contains(lambda_case1_closed_form(k, n + 1), tuple(at_n))
            assert contains(lambda_case1_closed_form(k, n), tuple(at_next))


def test_mori_generators_are_extremal_witnesses():
    for case, ks in (("I", range(2, 7)), ("II", range(1, 7)), ("III", range(3, 7))):
        for k in ks:
            s = make_surface(case, k)
            for n in range(2, 13):
                if not threshold_holds(s, n):
                    continue
                forms = [curve_functional(s, n, c) for c in mori_cone_hilb(s, n)]
                for ray in nef_cone_hilb(s, n).rays:
                    tight = [f for f in forms if sum(a * b for a, b in zip(f, ray)) == 0]
                    assert rank(tight) >= 2


@settings(max_examples=80, deadline=None)
@given(
    st.integers(2, 6), st.integers(2, 12),
    st.fractions(0, 5, max_denominator=6), st.fractions(0, 5, max_denominator=6),
    st.fractions(Fraction(1, 6), 5, max_denominator=6),
)
def test_lambda_decomposition(k, n, x, y, z):
    # D = x w1 + y w2 + z (third ray), rescaled so the B/2 coefficient is -1
    cone = lambda_case1_closed_form(k, n)
    third = case1_extremal_divisor(k, n)
    d = HDiv(x, y, 0) + z * third
    d = d * (1 / -d.c)
    assert contains(cone, tuple(d))
    s = make_surface("I", k)
    rest = d.surface_part - Fraction(n, k) * (W1 + W2)
    assert intersect(s, rest, W1) >= 0
    assert intersect(s, rest, W2) >= 0

