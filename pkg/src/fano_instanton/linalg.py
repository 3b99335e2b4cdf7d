"""Sparse exact linear algebra over Q, with an optional prime-field pre-screen.

Matrices are stored as a list of rows, each row a ``{column: value}`` dict.
Values are ints or Fractions; nothing here ever produces a float.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

PRIME = 2_147_483_647  # 2^31 - 1


@dataclass
class SparseMatrix:
    nrows: int
    ncols: int
    rows: list[dict[int, Fraction]] = field(default_factory=list)

    @classmethod
    def from_dense(cls, dense: list[list]) -> SparseMatrix:
        ncols = len(dense[0]) if dense else 0
        rows = [{j: Fraction(x) for j, x in enumerate(r) if x} for r in dense]
        return cls(len(dense), ncols, rows)

    def to_dense(self) -> list[list[Fraction]]:
        out = [[Fraction(0)] * self.ncols for _ in range(self.nrows)]
        for i, row in enumerate(self.rows):
            for j, v in row.items():
                out[i][j] = Fraction(v)
        return out

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def vstack(self, other: SparseMatrix) -> SparseMatrix:
        if self.ncols != other.ncols:
            raise ValueError("column mismatch in vstack")
        return SparseMatrix(self.nrows + other.nrows, self.ncols, self.rows + other.rows)

    def matmul(self, other: SparseMatrix) -> SparseMatrix:
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch in matmul")
        rows = []
        for row in self.rows:
            acc: dict[int, Fraction] = {}
            for k, a in row.items():
                for j, b in other.rows[k].items():
                    acc[j] = acc.get(j, 0) + a * b
            rows.append({j: v for j, v in acc.items() if v})
        return SparseMatrix(self.nrows, other.ncols, rows)


def _reduce_q(rows: Iterable[dict]) -> dict[int, dict[int, Fraction]]:
    pivots: dict[int, dict[int, Fraction]] = {}
    for src in rows:
        row = {j: Fraction(v) for j, v in src.items() if v}
        while row:
            lead = min(row)
            piv = pivots.get(lead)
            if piv is None:
                inv = 1 / row[lead]
                pivots[lead] = {j: v * inv for j, v in row.items()}
                break
            factor = row[lead]
            for j, v in piv.items():
                nv = row.get(j, 0) - factor * v
                if nv:
                    row[j] = nv
                else:
                    row.pop(j, None)
    return pivots


def _reduce_mod(rows: Iterable[dict], p: int) -> dict[int, dict[int, int]]:
    pivots: dict[int, dict[int, int]] = {}
    for src in rows:
        row = {}
        for j, v in src.items():
            v = Fraction(v)
            r = v.numerator * pow(v.denominator, -1, p) % p
            if r:
                row[j] = r
        while row:
            lead = min(row)
            piv = pivots.get(lead)
            if piv is None:
                inv = pow(row[lead], -1, p)
                pivots[lead] = {j: v * inv % p for j, v in row.items()}
                break
            factor = row[lead]
            for j, v in piv.items():
                nv = (row.get(j, 0) - factor * v) % p
                if nv:
                    row[j] = nv
                else:
                    row.pop(j, None)
    return pivots


def rank(m: SparseMatrix, modulus: int | None = None) -> int:
    """Rank over Q, or over GF(modulus) when a prime is given.

    The modular rank never exceeds the rational one; it is only a fast
    pre-screen and is never reported as a certified value.
    """
    if modulus is None:
        return len(_reduce_q(m.rows))
    return len(_reduce_mod(m.rows, modulus))


def left_kernel_dim(m: SparseMatrix) -> int:
    return m.nrows - rank(m)


def cokernel_dim(m: SparseMatrix) -> int:
    """dim of coker of the map x -> x M (rows are images of source basis vectors)."""
    return m.ncols - rank(m)


def solve(m: SparseMatrix, rhs: dict[int, Fraction]) -> dict[int, Fraction] | None:
    """One solution x of ``M x = rhs`` (rows are equations), or None if inconsistent.

    Free variables are set to zero.
    """
    aug_col = m.ncols
    rows = []
    for i, row in enumerate(m.rows):
        r = dict(row)
        if rhs.get(i):
            r[aug_col] = Fraction(rhs[i])
        rows.append(r)
    for i, v in rhs.items():
        if i >= m.nrows and v:
            return None
    pivots = _reduce_q(rows)
    if aug_col in pivots:
        return None
    # back substitution, highest pivot first
    sol: dict[int, Fraction] = {}
    for lead in sorted(pivots, reverse=True):
        row = pivots[lead]
        val = row.get(aug_col, Fraction(0))
        for j, v in row.items():
            if j != lead and j != aug_col:
                val -= v * sol.get(j, 0)
        if val:
            sol[lead] = val
        else:
            sol[lead] = Fraction(0)
    return {j: v for j, v in sol.items() if v}
