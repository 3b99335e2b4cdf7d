"""Brute-force section spaces of line bundles on F in Cox coordinates.

Cox ring of F: C[x1, x2, y, z, s0, s1] graded by

    x1, x2 -> L - E      y -> E      z -> L      s0, s1 -> XI

Irrelevant ideal (x1, x2) (y, z) (s0, s1).  Monomials are exponent tuples in
the fixed variable order ``VARIABLES``.
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .chow import DivClass
from .linalg import SparseMatrix

VARIABLES = ("x1", "x2", "y", "z", "s0", "s1")
DEGREES = (
    DivClass(1, -1, 0),
    DivClass(1, -1, 0),
    DivClass(0, 1, 0),
    DivClass(1, 0, 0),
    DivClass(0, 0, 1),
    DivClass(0, 0, 1),
)

Monomial = tuple[int, int, int, int, int, int]
Poly = dict[Monomial, Fraction]


def multidegree(mono: Monomial) -> DivClass:
    a1, a2, m, n, d0, d1 = mono
    return DivClass(a1 + a2 + n, -a1 - a2 + m, d0 + d1)


@lru_cache(maxsize=None)
def basis_f(d: DivClass) -> tuple[Monomial, ...]:
    """All Cox monomials of class d, in descending lexicographic order."""
    out = []
    if d.xi < 0:
        return ()
    for n in range(d.l + 1):
        k = d.l - n
        m = d.e + k
        if m < 0:
            continue
        for a1 in range(k + 1):
            for d0 in range(d.xi + 1):
                out.append((a1, k - a1, m, n, d0, d.xi - d0))
    out.sort(reverse=True)
    return tuple(out)


@lru_cache(maxsize=None)
def basis_index(d: DivClass) -> dict[Monomial, int]:
    return {mono: i for i, mono in enumerate(basis_f(d))}


def basis_f1(u: int, v: int) -> list[tuple[int, int, int, int]]:
    """Monomials x1^a1 x2^a2 y^m z^n of class uL - vE on F_1."""
    return sorted({mono[:4] for mono in basis_f(DivClass(u, -v, 0))}, reverse=True)


def format_monomial(mono: Monomial) -> str:
    parts = []
    for name, k in zip(VARIABLES, mono):
        if k == 1:
            parts.append(name)
        elif k > 1:
            parts.append(f"{name}^{k}")
    return "*".join(parts) or "1"


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def poly_mul(p: Poly, q: Poly) -> Poly:
    out: Poly = {}
    for ma, ca in p.items():
        for mb, cb in q.items():
            m = mono_mul(ma, mb)
            out[m] = out.get(m, 0) + ca * cb
    return {m: c for m, c in out.items() if c}


def poly_eval(p: Poly, point) -> Fraction:
    total = Fraction(0)
    for mono, c in p.items():
        term = Fraction(c)
        for x, k in zip(point, mono):
            if k:
                term *= Fraction(x) ** k
        total += term
    return total


def monomial(**exps: int) -> Monomial:
    unknown = set(exps) - set(VARIABLES)
    if unknown:
        raise ValueError(f"unknown Cox variables {sorted(unknown)}")
    return tuple(exps.get(v, 0) for v in VARIABLES)


_FACTOR = re.compile(r"^(x1|x2|y|z|s0|s1)(?:\^(\d+))?$")


def parse_poly(text: str) -> Poly:
    """Parse e.g. ``"x1*y + 2*x2*y - 1/2*z"`` into a polynomial."""
    src = re.sub(r"\s+", "", text)
    if not src:
        raise ValueError("empty polynomial")
    if src[0] not in "+-":
        src = "+" + src
    out: Poly = {}
    for sign, body in re.findall(r"([+-])([^+-]+)", src):
        coeff = Fraction(1)
        exps = dict.fromkeys(VARIABLES, 0)
        for factor in body.split("*"):
            m = _FACTOR.match(factor)
            if m:
                exps[m.group(1)] += int(m.group(2) or 1)
            else:
                coeff *= Fraction(factor)
        if sign == "-":
            coeff = -coeff
        mono = tuple(exps[v] for v in VARIABLES)
        out[mono] = out.get(mono, 0) + coeff
    return {m: c for m, c in out.items() if c}


@dataclass(frozen=True)
class SectionVector:
    """A global section of O_F(cls), coefficients on ``basis_f(cls)``."""

    cls: DivClass
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.coeffs) != len(basis_f(self.cls)):
            raise ValueError(
                f"{len(self.coeffs)} coefficients for a basis of size {len(basis_f(self.cls))}"
            )

    @classmethod
    def from_poly(cls, d: DivClass, poly: Poly) -> SectionVector:
        index = basis_index(d)
        coeffs = [Fraction(0)] * len(index)
        for mono, c in poly.items():
            if multidegree(mono) != d or mono not in index:
                raise ValueError(f"monomial {format_monomial(mono)} is not of class {d}")
            coeffs[index[mono]] += Fraction(c)
        return cls(d, tuple(coeffs))

    @classmethod
    def parse(cls, d: DivClass, text: str) -> SectionVector:
        return cls.from_poly(d, parse_poly(text))

    @classmethod
    def zero(cls, d: DivClass) -> SectionVector:
        return cls(d, (Fraction(0),) * len(basis_f(d)))

    def poly(self) -> Poly:
        return {m: c for m, c in zip(basis_f(self.cls), self.coeffs) if c}

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __mul__(self, other: SectionVector) -> SectionVector:
        return SectionVector.from_poly(self.cls + other.cls, poly_mul(self.poly(), other.poly()))

    def __str__(self) -> str:
        out = ""
        for mono, c in self.poly().items():
            mon = format_monomial(mono)
            sign = "-" if c < 0 else "+"
            body = mon if abs(c) == 1 else f"{abs(c)}*{mon}"
            out += f" {sign} {body}" if out else ("-" if c < 0 else "") + body
        return out or "0"


def mult_matrix(s: SectionVector, source: DivClass) -> SparseMatrix:
    """Multiplication by s as a |basis(source)| x |basis(source + cls(s))| matrix.

    Row i holds the coordinates of s * basis_f(source)[i].
    """
    target = source + s.cls
    tindex = basis_index(target)
    terms = list(s.poly().items())
    rows = []
    for mono in basis_f(source):
        row: dict[int, Fraction] = {}
        for smono, c in terms:
            j = tindex[mono_mul(mono, smono)]
            row[j] = row.get(j, 0) + c
        rows.append({j: v for j, v in row.items() if v})
    return SparseMatrix(len(rows), len(tindex), rows)


def irrelevant_check(point) -> bool:
    x1, x2, y, z, s0, s1 = point
    return (x1, x2) != (0, 0) and (y, z) != (0, 0) and (s0, s1) != (0, 0)


def charts():
    """Standard affine charts: one unit from each of (x1,x2), (y,z), (s0,s1).

    Yields (units, free) as tuples of variable indices.
    """
    for units in itertools.product((0, 1), (2, 3), (4, 5)):
        free = tuple(i for i in range(6) if i not in units)
        yield units, free
