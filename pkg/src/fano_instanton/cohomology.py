"""Closed-form cohomology of line bundles on P^1, F_1 and F = P^1 x F_1.

On F_1 the bundle O(uL - vE) is addressed by the pair (u, v) exactly as it
is usually written; on F the argument is a :class:`~fano_instanton.chow.DivClass`
so that O_F(aL - bE + cXI) corresponds to ``DivClass(a, -b, c)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .chow import C2_OMEGA, OMEGA, CurveClass, DivClass, curve_dot_div, div_mul, triple


class InternalDefect(RuntimeError):
    """A closed-form identity failed; indicates a transcription bug."""


@dataclass(frozen=True)
class CohomTable:
    h0: int = 0
    h1: int = 0
    h2: int = 0
    h3: int = 0

    def __post_init__(self):
        if min(self.as_tuple()) < 0:
            raise InternalDefect(f"negative cohomology dimension {self.as_tuple()}")

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.h0, self.h1, self.h2, self.h3)

    def __getitem__(self, i: int) -> int:
        if 0 <= i <= 3:
            return self.as_tuple()[i]
        return 0

    @property
    def euler(self) -> int:
        return self.h0 - self.h1 + self.h2 - self.h3

    def is_zero(self) -> bool:
        return not any(self.as_tuple())


def binom2(n: int) -> int:
    return n * (n - 1) // 2 if n >= 2 else 0


def h0_f1(u: int, v: int) -> int:
    """h^0(F_1, O(uL - vE))."""
    if u < 0 or u - v < 0:
        return 0
    return binom2(u + 2) - binom2(v + 1)


def chi_f1(u: int, v: int) -> int:
    val = Fraction(2 + u * u - v * v + 3 * u - v, 2)
    if val.denominator != 1:
        raise InternalDefect(f"non-integral Euler characteristic on F_1 at {(u, v)}")
    return int(val)


def cohom_f1(u: int, v: int) -> CohomTable:
    h0 = h0_f1(u, v)
    # Serre duality with omega = -3L + E
    h2 = h0_f1(-u - 3, -v - 1)
    h1 = h0 + h2 - chi_f1(u, v)
    if h1 < 0:
        raise InternalDefect(f"h^1 < 0 on F_1 at {(u, v)}")
    return CohomTable(h0, h1, h2, 0)


def cohom_p1(c: int) -> CohomTable:
    return CohomTable(max(c + 1, 0), max(-c - 1, 0), 0, 0)


@lru_cache(maxsize=1 << 16)
def cohom_f(d: DivClass) -> CohomTable:
    """Kunneth: h^i(F, O(d)) = h^i(F_1) h^0(P^1) + h^(i-1)(F_1) h^1(P^1)."""
    s = cohom_f1(d.l, -d.e)
    p = cohom_p1(d.xi)
    return CohomTable(*(s[i] * p.h0 + s[i - 1] * p.h1 for i in range(4)))


def chi_f(d: DivClass) -> int:
    return cohom_f(d).euler


def chi_rr_general(rank: int, c1: DivClass, c2: CurveClass, c3: int) -> Fraction:
    """Hirzebruch-Riemann-Roch on F for a class with the given Chern data."""
    c1_sq = div_mul(c1, c1)
    return (
        rank
        + Fraction(triple(c1, c1, c1) - 3 * curve_dot_div(c2, c1) + 3 * c3, 6)
        - Fraction(curve_dot_div(c1_sq, OMEGA) - 2 * curve_dot_div(c2, OMEGA), 4)
        + Fraction(triple(OMEGA, OMEGA, c1) + curve_dot_div(C2_OMEGA, c1), 12)
    )


def serre_dual_check(d: DivClass) -> bool:
    return cohom_f(d).as_tuple()[::-1] == cohom_f(OMEGA - d).as_tuple()


def ext_table_linebundles(src: DivClass, dst: DivClass) -> CohomTable:
    """dim Ext^k(O(src), O(dst)) = h^k(O(dst - src))."""
    return cohom_f(dst - src)
