import itertools

import pytest
from hypothesis import given

from fano_instanton.chow import DivClass
from fano_instanton.cohomology import cohom_f
from fano_instanton.cox import (
    SectionVector,
    basis_f,
    charts,
    format_monomial,
    irrelevant_check,
    mult_matrix,
    multidegree,
    parse_poly,
    poly_eval,
)

from strategies import divs


def _names(d):
    return {format_monomial(m) for m in basis_f(d)}


def test_basis_examples():
    assert _names(DivClass(1, 0, 0)) == {"z", "x1*y", "x2*y"}
    assert _names(DivClass(0, 1, 0)) == {"y"}
    assert _names(DivClass(0, 0, 1)) == {"s0", "s1"}


def test_oracle_grid():
    for t in itertools.product(range(-6, 7), repeat=3):
        d = DivClass(*t)
        assert len(basis_f(d)) == cohom_f(d).h0, d


@given(divs)
def test_multidegrees(d):
    assert all(multidegree(m) == d for m in basis_f(d))
    assert len(set(basis_f(d))) == len(basis_f(d))


def test_mult_matrix_examples():
    one = DivClass()
    m = mult_matrix(SectionVector.parse(DivClass(1, 0, 0), "z"), one)
    # the single source monomial 1 goes to the basis vector z of H^0(O(l))
    z_col = [format_monomial(x) for x in basis_f(DivClass(1, 0, 0))].index("z")
    assert m.shape == (1, 3) and m.rows == [{z_col: 1}]
    s0 = SectionVector.parse(DivClass(0, 0, 1), "s0")
    m = mult_matrix(s0, DivClass(0, 0, 1))
    assert m.shape == (2, 3)
    assert sum(1 for row in m.rows for v in row.values() if v) == 2
    zero = SectionVector.zero(DivClass(1, -1, 0))
    assert all(not row for row in mult_matrix(zero, DivClass(1, 0, 0)).rows)


def test_section_products():
    a = SectionVector.parse(DivClass(0, 0, 1), "s0 + s1")
    b = SectionVector.parse(DivClass(1, -1, 0), "x1")
    p = a * b
    assert p.cls == DivClass(1, -1, 1)
    assert str(p) in ("x1*s0 + x1*s1", "x1*s1 + x1*s0")
    with pytest.raises(ValueError):
        SectionVector.parse(DivClass(0, 0, 1), "x1")


def test_eval_and_irrelevant():
    p = parse_poly("x1*y + 2*x2*y")
    assert poly_eval(p, (1, 1, 3, 0, 1, 0)) == 9
    assert not irrelevant_check((0, 0, 1, 1, 1, 1))
    assert not irrelevant_check((1, 0, 0, 0, 1, 1))
    assert irrelevant_check((1, 0, 1, 0, 0, 1))


def test_charts_cover():
    cs = list(charts())
    assert len(cs) == 8
    for units, free in cs:
        assert len(units) == 3 and set(units) | set(free) == set(range(6))
