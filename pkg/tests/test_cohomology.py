import itertools
from math import comb

import pytest
from hypothesis import given

from fano_instanton.chow import C2_OMEGA, H, OMEGA, CurveClass, DivClass, div_mul
from fano_instanton.cohomology import (
    CohomTable,
    InternalDefect,
    chi_f,
    chi_f1,
    chi_rr_general,
    cohom_f,
    cohom_f1,
    cohom_p1,
    ext_table_linebundles,
    h0_f1,
    serre_dual_check,
)

from strategies import divs


def count_f1_monomials(u, v):
    """Monomials x1^a1 x2^a2 y^m z^n with a1+a2+n = u and m-(a1+a2) = -v, counted directly."""
    total = 0
    for n in range(0, max(u, 0) + 1):
        k = u - n
        m = k - v
        if k >= 0 and m >= 0:
            total += k + 1
    return total


@pytest.mark.parametrize("uv, expected", [((3, 1), 9), ((0, 0), 1), ((1, 1), 2)])
def test_h0_f1_examples(uv, expected):
    assert h0_f1(*uv) == expected


def test_h0_f1_matches_direct_count():
    for u, v in itertools.product(range(-12, 13), repeat=2):
        assert h0_f1(u, v) == count_f1_monomials(u, v), (u, v)


@pytest.mark.parametrize("uv, expected", [((-2, 0), 0), ((-1, 1), -1), ((0, 0), 1)])
def test_chi_f1_examples(uv, expected):
    assert chi_f1(*uv) == expected


@pytest.mark.parametrize(
    "uv, expected",
    [((-1, 1), (0, 1, 0)), ((-2, 0), (0, 0, 0)), ((-3, -1), (0, 0, 1))],
)
def test_cohom_f1_examples(uv, expected):
    t = cohom_f1(*uv)
    assert (t.h0, t.h1, t.h2) == expected


def test_cohom_f_examples():
    assert cohom_f(DivClass(0, 1, 0)).h0 == 1
    assert cohom_f(DivClass(-1, 1, 0)).h1 == 0
    assert cohom_f(DivClass(-1, -1, 0)).h1 == 1
    assert cohom_f(DivClass()).as_tuple() == (1, 0, 0, 0)
    assert cohom_f(OMEGA).as_tuple() == (0, 0, 0, 1)
    assert chi_f(H) == 27


def test_p1():
    assert cohom_p1(2).as_tuple() == (3, 0, 0, 0)
    assert cohom_p1(-1).is_zero()
    assert cohom_p1(-3).as_tuple() == (0, 2, 0, 0)


def test_kunneth_against_product_formula():
    for u, v, c in itertools.product(range(-5, 6), range(-5, 6), range(-3, 4)):
        s, p = cohom_f1(u, v), cohom_p1(c)
        expected = [sum(s[i] * p[j] for i in range(3) for j in range(2) if i + j == k) for k in range(4)]
        assert list(cohom_f(DivClass(u, -v, c)).as_tuple()) == expected


@given(divs)
def test_riemann_roch(d):
    assert cohom_f(d).euler == chi_rr_general(1, d, CurveClass(), 0)


@given(divs)
def test_serre_duality(d):
    a, b = cohom_f(d), cohom_f(OMEGA - d)
    assert all(a[i] == b[3 - i] for i in range(4))
    assert serre_dual_check(d)


@given(divs, divs)
def test_ext_tables(a, b):
    assert ext_table_linebundles(a, b) == cohom_f(b - a)


def test_rr_examples():
    assert chi_rr_general(1, DivClass(), CurveClass(), 0) == 1
    assert chi_rr_general(1, H, CurveClass(), 0) == 27


def test_endomorphism_euler_characteristic():
    # E (x) E^dual for c1 = -h: rank 4, c1 = 0, c2 = 4 c2(E) - c1(E)^2, c3 = 0
    for charge in (CurveClass(4, -2, 2), CurveClass(3, -1, 3)):
        c2 = 4 * charge - div_mul(H, H)
        assert chi_rr_general(4, DivClass(), c2, 0) == 0


def test_table_guards():
    with pytest.raises(InternalDefect):
        CohomTable(-1, 0, 0, 0)
    t = CohomTable(1, 2, 3, 4)
    assert t[-1] == t[4] == 0
    assert t.euler == 1 - 2 + 3 - 4


def test_c2_omega_pairing():
    # c_2(Omega) . h = 24 is the Todd-class ingredient that makes chi(O) = 1
    from fano_instanton.chow import curve_dot_div

    assert curve_dot_div(C2_OMEGA, H) == 24
    assert comb(4, 2) == 6
