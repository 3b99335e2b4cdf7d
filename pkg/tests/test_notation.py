import pytest
from hypothesis import given

from fano_instanton.chow import H, CurveClass, DivClass
from fano_instanton.notation import NotationError, parse_curve, parse_div

from strategies import curves, divs


@pytest.mark.parametrize(
    "text, expected",
    [
        ("-l - e", DivClass(-1, -1, 0)),
        ("3l - e + 2xi", H),
        ("h", H),
        ("-2ℓ+e−ξ", DivClass(-2, 1, -1)),
        ("0", DivClass()),
        ("3,-1,2", H),
        ("(-1,0,-2)", DivClass(-1, 0, -2)),
        ("2*h - xi", DivClass(6, -2, 3)),
    ],
)
def test_parse_div(text, expected):
    assert parse_div(text) == expected


@pytest.mark.parametrize(
    "text, expected",
    [
        ("4lxi - 2exi + 2l2", CurveClass(4, -2, 2)),
        ("e*xi", CurveClass(0, 1, 0)),
        ("l^2", CurveClass(0, 0, 1)),
        ("ℓ²", CurveClass(0, 0, 1)),
    ],
)
def test_parse_curve(text, expected):
    assert parse_curve(text) == expected


@pytest.mark.parametrize("text", ["q", "", "l +", "3,4", "l e"])
def test_parse_errors(text):
    with pytest.raises(NotationError):
        parse_div(text)


@given(divs)
def test_div_roundtrip(d):
    assert parse_div(str(d)) == d


@given(curves)
def test_curve_roundtrip(c):
    assert parse_curve(str(c)) == c
