"""Text notation for divisor and curve classes.

Grammar (whitespace ignored)::

    expr    := triple | sum
    triple  := INT "," INT "," INT          raw stored coefficients
    sum     := ["+"|"-"] term (("+"|"-") term)*
    term    := [INT ["*"]] SYMBOL | INT     a bare INT is only allowed as "0"

Divisor symbols: ``l`` (also ``ℓ``), ``e``, ``xi`` (also ``ξ``), ``h``.
Curve symbols: ``lxi`` (``ℓξ``, ``l*xi``), ``exi`` (``eξ``, ``e*xi``),
``l2`` (``ℓ²``, ``l^2``).

``e`` is read with its written sign, so ``"3l - e + 2xi"`` is
``DivClass(3, -1, 2)``: the signed-storage convention of :mod:`chow`.
"""
from __future__ import annotations

import re

from .chow import H, CurveClass, DivClass

_UNICODE = {"ℓ": "l", "ξ": "xi", "²": "2", "−": "-"}

_DIV_SYMBOLS = {
    "l": DivClass(1, 0, 0),
    "e": DivClass(0, 1, 0),
    "xi": DivClass(0, 0, 1),
    "h": H,
}
_CURVE_SYMBOLS = {
    "lxi": CurveClass(1, 0, 0),
    "exi": CurveClass(0, 1, 0),
    "l2": CurveClass(0, 0, 1),
}

_TERM = re.compile(r"([+-])(\d*)\*?([a-z0-9]*)")
_TRIPLE = re.compile(r"^\(?(-?\d+),(-?\d+),(-?\d+)\)?$")


class NotationError(ValueError):
    pass


def _normalize(text: str) -> str:
    for k, v in _UNICODE.items():
        text = text.replace(k, v)
    text = re.sub(r"\s+", "", text.lower())
    text = text.replace("l^2", "l2").replace("l*xi", "lxi").replace("e*xi", "exi")
    return text


def _parse(text: str, symbols: dict, zero, build):
    src = _normalize(text)
    if not src:
        raise NotationError("empty class expression")
    m = _TRIPLE.match(src)
    if m:
        return build(*(int(g) for g in m.groups()))
    if src[0] not in "+-":
        src = "+" + src
    total = zero
    pos = 0
    while pos < len(src):
        m = _TERM.match(src, pos)
        if not m or m.end() == pos:
            raise NotationError(f"cannot parse {text!r} near position {pos}")
        sign, digits, sym = m.groups()
        pos = m.end()
        k = int(digits) if digits else 1
        if sign == "-":
            k = -k
        if not sym:
            if not digits or int(digits) != 0:
                raise NotationError(f"bare integer term in {text!r}")
            continue
        if sym not in symbols:
            raise NotationError(f"unknown symbol {sym!r} in {text!r}")
        total = total + k * symbols[sym]
    return total


def parse_div(text: str) -> DivClass:
    """Parse ``"3l - e + 2xi"`` or a raw triple ``"3,-1,2"``."""
    return _parse(text, _DIV_SYMBOLS, DivClass(), DivClass)


def parse_curve(text: str) -> CurveClass:
    """Parse ``"4*lxi - 2*exi + 2*l2"`` or a raw triple ``"4,-2,2"``."""
    return _parse(text, _CURVE_SYMBOLS, CurveClass(), CurveClass)
