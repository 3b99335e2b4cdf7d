"""The full exceptional collection (F_i[v_i]) on F and its right dual (G_j).

Every Ext group between line bundles is a line-bundle cohomology group, so
the checks below are complete except for fullness, which is not tested.
"""
from __future__ import annotations

from dataclasses import dataclass

from .chow import DivClass
from .cohomology import CohomTable, ext_table_linebundles
from .report import VerificationReport


@dataclass(frozen=True)
class ShiftedLineBundle:
    cls: DivClass
    shift: int = 0


F_LIST = (
    ShiftedLineBundle(DivClass(0, 0, 0), 0),
    ShiftedLineBundle(DivClass(1, -1, 0), 0),
    ShiftedLineBundle(DivClass(0, 1, 0), 1),
    ShiftedLineBundle(DivClass(1, 0, 0), 1),
    ShiftedLineBundle(DivClass(0, 0, 1), 3),
    ShiftedLineBundle(DivClass(1, -1, 1), 3),
    ShiftedLineBundle(DivClass(0, 1, 1), 4),
    ShiftedLineBundle(DivClass(1, 0, 1), 4),
)

G_LIST = (
    DivClass(-2, 1, -1),
    DivClass(-1, 0, -1),
    DivClass(-1, 1, -1),
    DivClass(0, 0, -1),
    DivClass(-2, 1, 0),
    DivClass(-1, 0, 0),
    DivClass(-1, 1, 0),
    DivClass(0, 0, 0),
)

SHIFTS = tuple(f.shift for f in F_LIST)
K_WINDOW = range(0, 11)


_UNIT = CohomTable(1, 0, 0, 0)


def verify_exceptional_pairs() -> VerificationReport:
    rep = VerificationReport("exceptional_pairs")
    for i, fi in enumerate(F_LIST):
        for j, fj in enumerate(F_LIST):
            if i < j:
                continue
            table = ext_table_linebundles(fi.cls, fj.cls)
            rep.checked += 1
            expected = _UNIT if i == j else CohomTable()
            if table != expected:
                rep.fail({"i": i, "j": j, "ext": table.as_tuple()})
    return rep


def verify_strong_dual() -> VerificationReport:
    rep = VerificationReport("strong_dual")
    for i, gi in enumerate(G_LIST):
        for j, gj in enumerate(G_LIST):
            table = ext_table_linebundles(gi, gj)
            rep.checked += 1
            if i == j:
                ok = table == _UNIT
            elif i < j:
                ok = table.h1 == table.h2 == table.h3 == 0
            else:
                ok = table.is_zero()
            if not ok:
                rep.fail({"i": i, "j": j, "ext": table.as_tuple()})
    return rep


def dual_pairing(i: int, j: int, k: int) -> int:
    """dim Ext^(k - v_i)(F_i, G_j)."""
    table = ext_table_linebundles(F_LIST[i].cls, G_LIST[j])
    return table[k - F_LIST[i].shift]


def verify_right_dual_pattern() -> VerificationReport:
    rep = VerificationReport("right_dual_pattern")
    n = len(F_LIST)
    totals = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            for k in K_WINDOW:
                val = dual_pairing(i, j, k)
                totals[i][j] += val
                rep.checked += 1
                expected = 1 if (i + j == n - 1 and k == i) else 0
                if val != expected:
                    rep.fail({"i": i, "j": j, "k": k, "value": val, "expected": expected})
    rep.details["pattern"] = totals
    antidiag = [[int(i + j == n - 1) for j in range(n)] for i in range(n)]
    if totals != antidiag:
        rep.fail({"pattern": "not the anti-diagonal permutation"})
    return rep
