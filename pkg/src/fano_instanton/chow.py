"""Intersection theory on the Chow ring of F = P^1 x F_1.

A(F) is free with basis

    1 | l, e, xi | l*xi, e*xi, l^2 | l^2*xi

and the only relations needed are l^2 = -e^2, l*e = 0, xi^2 = 0 together with
the vanishing of every monomial of degree >= 3 in (l, e).

Sign convention: a divisor class stores the *signed* coefficient of e.
The class usually written aL - bE + cXI is ``DivClass(a, -b, c)`` and the
curve class A*l*xi - B*e*xi + C*l^2 is ``CurveClass(A, -B, C)``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

SIGN_CONVENTION = (
    "DivClass(l, e, xi) = l*L + e*E + xi*XI with the signed coefficient of E; "
    "O_F(aL - bE + cXI) is DivClass(a, -b, c). "
    "CurveClass(lxi, exi, l2) = lxi*L.XI + exi*E.XI + l2*L^2; "
    "charge (alpha, beta, gamma) is CurveClass(alpha, -beta, gamma)."
)


@dataclass(frozen=True, order=True)
class DivClass:
    l: int = 0
    e: int = 0
    xi: int = 0

    def __add__(self, other: DivClass) -> DivClass:
        return DivClass(self.l + other.l, self.e + other.e, self.xi + other.xi)

    def __sub__(self, other: DivClass) -> DivClass:
        return DivClass(self.l - other.l, self.e - other.e, self.xi - other.xi)

    def __neg__(self) -> DivClass:
        return DivClass(-self.l, -self.e, -self.xi)

    def __rmul__(self, k: int) -> DivClass:
        return DivClass(k * self.l, k * self.e, k * self.xi)

    def __mul__(self, other):
        if isinstance(other, DivClass):
            return div_mul(self, other)
        if isinstance(other, CurveClass):
            return curve_dot_div(other, self)
        return DivClass(other * self.l, other * self.e, other * self.xi)

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.l, self.e, self.xi)

    def __str__(self) -> str:
        return _format_linear([(self.l, "l"), (self.e, "e"), (self.xi, "xi")])


@dataclass(frozen=True, order=True)
class CurveClass:
    lxi: int = 0
    exi: int = 0
    l2: int = 0

    def __add__(self, other: CurveClass) -> CurveClass:
        return CurveClass(self.lxi + other.lxi, self.exi + other.exi, self.l2 + other.l2)

    def __sub__(self, other: CurveClass) -> CurveClass:
        return CurveClass(self.lxi - other.lxi, self.exi - other.exi, self.l2 - other.l2)

    def __neg__(self) -> CurveClass:
        return CurveClass(-self.lxi, -self.exi, -self.l2)

    def __rmul__(self, k: int) -> CurveClass:
        return CurveClass(k * self.lxi, k * self.exi, k * self.l2)

    def __mul__(self, other):
        if isinstance(other, DivClass):
            return curve_dot_div(self, other)
        return CurveClass(other * self.lxi, other * self.exi, other * self.l2)

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.lxi, self.exi, self.l2)

    def __str__(self) -> str:
        return _format_linear([(self.lxi, "lxi"), (self.exi, "exi"), (self.l2, "l2")])


@dataclass(frozen=True)
class PointClass:
    deg: int = 0


def _format_linear(terms: list[tuple[int, str]]) -> str:
    out = ""
    for coeff, name in terms:
        if coeff == 0:
            continue
        sign = "-" if coeff < 0 else "+"
        mag = abs(coeff)
        body = name if mag == 1 else f"{mag}{name}"
        if not out:
            out = body if sign == "+" else "-" + body
        else:
            out += f" {sign} {body}"
    return out or "0"


def div_mul(d1: DivClass, d2: DivClass) -> CurveClass:
    a, b, c = d1.as_tuple()
    a2, b2, c2 = d2.as_tuple()
    return CurveClass(a * c2 + a2 * c, b * c2 + b2 * c, a * a2 - b * b2)


def curve_dot_div(c: CurveClass, d: DivClass) -> int:
    """Degree (coefficient of l^2*xi) of a curve class times a divisor class."""
    return c.lxi * d.l - c.exi * d.e + c.l2 * d.xi


def triple(d1: DivClass, d2: DivClass, d3: DivClass) -> int:
    return curve_dot_div(div_mul(d1, d2), d3)


H = DivClass(3, -1, 2)
OMEGA = -H
C2_OMEGA = CurveClass(6, -2, 4)

L = DivClass(1, 0, 0)
E = DivClass(0, 1, 0)
XI = DivClass(0, 0, 1)
ZERO = DivClass(0, 0, 0)


def slope(rank: int, c1: DivClass) -> Fraction:
    if rank < 1:
        raise ValueError(f"rank must be positive, got {rank}")
    return Fraction(triple(c1, H, H), rank)


def hoppe_region(a: int, b: int, c: int) -> bool:
    """True iff O_F(aL - bE + cXI) has slope >= that of a rank-2 bundle with c_1 = -h.

    Such a D destabilizes when h^0(E(-D)) > 0, so sections are sought in the
    twist DivClass(-a, b, -c).
    """
    return 3 * a + 2 * c + 6 >= b


@dataclass(frozen=True)
class FanoConstants:
    h: DivClass
    omega: DivClass
    c2_omega: CurveClass
    chi_O: int
    index: int
    q: int
    degree: int


def constants() -> FanoConstants:
    return FanoConstants(
        h=H,
        omega=OMEGA,
        c2_omega=C2_OMEGA,
        chi_O=1,
        index=1,
        q=0,
        degree=triple(H, H, H),
    )


@dataclass(frozen=True)
class ChowElement:
    """Inhomogeneous element of A(F), graded pieces (deg0, div, curve, point)."""

    d0: int = 0
    d1: DivClass = ZERO
    d2: CurveClass = CurveClass()
    d3: int = 0

    @classmethod
    def one(cls) -> ChowElement:
        return cls(1)

    def __add__(self, other: ChowElement) -> ChowElement:
        return ChowElement(
            self.d0 + other.d0, self.d1 + other.d1, self.d2 + other.d2, self.d3 + other.d3
        )

    def __neg__(self) -> ChowElement:
        return ChowElement(-self.d0, -self.d1, -self.d2, -self.d3)

    def __sub__(self, other: ChowElement) -> ChowElement:
        return self + (-other)

    def __mul__(self, other: ChowElement) -> ChowElement:
        return ChowElement(
            self.d0 * other.d0,
            self.d0 * other.d1 + other.d0 * self.d1,
            self.d0 * other.d2 + other.d0 * self.d2 + div_mul(self.d1, other.d1),
            self.d0 * other.d3
            + other.d0 * self.d3
            + curve_dot_div(other.d2, self.d1)
            + curve_dot_div(self.d2, other.d1),
        )

    def inverse(self) -> ChowElement:
        """Inverse of a unit (d0 = +-1); nilpotent tail truncates after degree 3."""
        if self.d0 not in (1, -1):
            raise ValueError("only elements with constant term +-1 are invertible")
        u = ChowElement(self.d0)
        nil = ChowElement(0, self.d1, self.d2, self.d3) * u
        # (u + n)^-1 = u (1 - n u + (n u)^2 - (n u)^3) with n u nilpotent of order 4
        acc = ChowElement.one()
        power = ChowElement.one()
        for k in range(1, 4):
            power = power * nil
            acc = acc + power if k % 2 == 0 else acc - power
        return acc * u

    def __pow__(self, n: int) -> ChowElement:
        if self.d0 == 1:
            # (1 + x)^n = sum_k binom(n, k) x^k, exact for every integer n since x^4 = 0
            nil = ChowElement(0, self.d1, self.d2, self.d3)
            out = ChowElement.one()
            power = ChowElement.one()
            for k in range(1, 4):
                power = power * nil
                out = out + _scale(_gbinom(n, k), power)
            return out
        if n < 0:
            return self.inverse() ** (-n)
        out = ChowElement.one()
        for _ in range(n):
            out = out * self
        return out


def _gbinom(n: int, k: int) -> int:
    num = 1
    for i in range(k):
        num *= n - i
    return num // math.factorial(k)


def _scale(k: int, x: ChowElement) -> ChowElement:
    return ChowElement(k * x.d0, k * x.d1, k * x.d2, k * x.d3)


def total_chern_line(d: DivClass) -> ChowElement:
    return ChowElement(1, d)


@lru_cache(maxsize=65536)
def total_chern_line_power(d: DivClass, m: int) -> ChowElement:
    """(1 + d)^m in closed form: 1 + m d + C(m,2) d^2 + C(m,3) d^3."""
    d2 = div_mul(d, d)
    return ChowElement(1, m * d, _gbinom(m, 2) * d2, _gbinom(m, 3) * curve_dot_div(d2, d))
