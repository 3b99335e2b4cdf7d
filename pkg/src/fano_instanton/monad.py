"""Monad shapes C^-1 -> C^0 -> C^1 for instanton charges, with K-theory bookkeeping.

Only the terms are built; differentials are not solved for.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .charge import CohomDefect, InstantonCharge
from .chow import ChowElement, CurveClass, DivClass, total_chern_line_power
from .cohomology import chi_f, chi_rr_general
from .errors import ConsistencyFailure, NegativeMultiplicity, RankMismatch

Term = tuple[DivClass, int]


@dataclass(frozen=True)
class MonadShape:
    minus1: tuple[Term, ...]
    zero: tuple[Term, ...]
    plus1: tuple[Term, ...]

    @staticmethod
    def _rank(terms) -> int:
        return sum(m for _, m in terms)

    @property
    def ranks(self) -> tuple[int, int, int]:
        return (self._rank(self.minus1), self._rank(self.zero), self._rank(self.plus1))

    def to_dict(self) -> dict:
        def dump(terms):
            return [{"class": list(d.as_tuple()), "text": str(d), "mult": m} for d, m in terms]

        return {"C-1": dump(self.minus1), "C0": dump(self.zero), "C1": dump(self.plus1)}


def _terms(rows) -> tuple[Term, ...]:
    return tuple((d, m) for d, m, _ in rows if m > 0)


def build_shape(ch: InstantonCharge, defect: CohomDefect) -> MonadShape:
    a, b, g = ch.as_tuple()
    dl, ep = defect.delta, defect.epsilon
    minus1 = [
        (DivClass(-2, 1, -1), a + g - 6, "O(-2l+e-xi)"),
        (DivClass(-1, 0, -1), ep, "O(-l-xi)"),
    ]
    zero = [
        (DivClass(-1, 0, -1), b + g + ep - 2, "O(-l-xi)"),
        (DivClass(-1, 1, -1), a - b + g - 4, "O(-l+e-xi)"),
        (DivClass(-2, 1, 0), a - 3, "O(-2l+e)"),
        (DivClass(-1, 0, 0), dl, "O(-l)"),
    ]
    plus1 = [
        (DivClass(0, 0, -1), g - 2, "O(-xi)"),
        (DivClass(-1, 0, 0), b + dl - 1, "O(-l)"),
        (DivClass(-1, 1, 0), a - b - 2, "O(-l+e)"),
    ]
    bad = [(f"C{deg}:{name}", m) for deg, rows in (("-1", minus1), ("0", zero), ("1", plus1))
           for _, m, name in rows if m < 0]
    if bad:
        err = NegativeMultiplicity(bad[0][0], bad[0][1])
        err.all_negative = bad
        raise err
    return MonadShape(_terms(minus1), _terms(zero), _terms(plus1))


class KClass(Counter):
    """Formal Z-combination of line bundles, keyed by DivClass."""

    @property
    def rank(self) -> int:
        return sum(self.values())

    def twist(self, d: DivClass) -> KClass:
        return KClass({k + d: m for k, m in self.items()})

    def clean(self) -> KClass:
        return KClass({k: m for k, m in self.items() if m})

    @classmethod
    def line(cls, d: DivClass, mult: int = 1) -> KClass:
        return cls({d: mult})


def kclass(shape: MonadShape) -> KClass:
    k = KClass()
    for d, m in shape.zero:
        k[d] += m
    for d, m in shape.minus1 + shape.plus1:
        k[d] -= m
    k = k.clean()
    if k.rank != 2:
        raise RankMismatch(f"K-class has rank {k.rank}, expected 2")
    return k


@dataclass(frozen=True)
class ChernData:
    rank: int
    c1: DivClass
    c2: CurveClass
    c3: int

    def to_dict(self) -> dict:
        return {
            "rank": self.rank,
            "c1": list(self.c1.as_tuple()),
            "c2": list(self.c2.as_tuple()),
            "c3": self.c3,
        }


def chern(k: KClass) -> ChernData:
    total = ChowElement.one()
    for d, m in sorted(k.items()):
        total = total * total_chern_line_power(d, m)
    return ChernData(k.rank, total.d1, total.d2, total.d3)


def chi_twist(k: KClass, d: DivClass) -> int:
    """chi of (class k) tensor O(d), computed twice and cross-checked."""
    additive = sum(m * chi_f(cls + d) for cls, m in k.items())
    cd = chern(k.twist(d))
    rr = chi_rr_general(cd.rank, cd.c1, cd.c2, cd.c3)
    if rr != additive:
        raise ConsistencyFailure(f"chi twist by {d}: K-class sum {additive} != Riemann-Roch {rr}")
    return additive
