"""Charge calculus for instantons on F: admissibility, degree, minimality,
moduli dimension, the Beilinson-type table e^{p,q} and curve families."""
from __future__ import annotations

import warnings
from dataclasses import dataclass

from .charge import (
    CohomDefect,
    InstantonCharge,
    charge_degree,
    is_admissible,
    require_admissible,
    validate_defect,
)
from .chow import H, CurveClass, DivClass, constants, curve_dot_div
from .errors import CapTooSmall, ConsistencyFailure, NegativeEntry
from .exceptional import F_LIST, SHIFTS
from .monad import build_shape, chi_twist, kclass

MIN_DEGREE = 14

__all__ = [
    "InstantonCharge",
    "CohomDefect",
    "is_admissible",
    "charge_degree",
    "enumerate_minimal",
    "moduli_dim",
    "Table1",
    "table1",
    "table1_euler_check",
    "curve_family",
    "general_fano_bound",
]


def enumerate_minimal(degree_cap: int) -> list[tuple[InstantonCharge, int]]:
    """All admissible charges with h-degree <= degree_cap, sorted by degree.

    Since beta <= alpha - 2, the degree 3a - b + 2g is at least 2(a + g) + 2,
    which bounds alpha + gamma; beta is then squeezed between
    3a + 2g - cap and a - 2.
    """
    if degree_cap < MIN_DEGREE:
        warnings.warn(
            CapTooSmall(f"cap {degree_cap} < {MIN_DEGREE}: no admissible charge has degree below 14")
        )
        return []
    sum_max = (degree_cap - 2) // 2
    found = []
    for a in range(3, sum_max - 2 + 1):
        for g in range(2, sum_max - a + 1):
            if a + g < 6:
                continue
            for b in range(3 * a + 2 * g - degree_cap, a - 2 + 1):
                ch = InstantonCharge(a, b, g)
                deg = charge_degree(ch)
                if not is_admissible(ch) or deg > degree_cap:
                    raise ConsistencyFailure(f"bounded search produced invalid {ch}")
                found.append((ch, deg))
    found.sort(key=lambda t: (t[1], t[0].as_tuple()))
    return found


def moduli_dim(ch: InstantonCharge) -> int:
    require_admissible(ch)
    a, b, g = ch.as_tuple()
    dim = 6 * a - 2 * b + 4 * g - 27
    via_ext = 2 * charge_degree(ch) - constants().degree // 2 - 3
    if dim != via_ext:
        raise ConsistencyFailure(f"moduli dimension {dim} != {via_ext}")
    return dim


P_RANGE = range(-7, 1)
Q_RANGE = range(0, 8)

# (p, q) -> (printed entry, value); every other cell of the 8x8 grid is zero
TABLE1_LAYOUT = {
    (-7, 6): ("a+g-6", lambda a, b, g, dl, ep: a + g - 6),
    (-6, 6): ("b+g+eps-2", lambda a, b, g, dl, ep: b + g + ep - 2),
    (-6, 5): ("eps", lambda a, b, g, dl, ep: ep),
    (-5, 5): ("a-b+g-4", lambda a, b, g, dl, ep: a - b + g - 4),
    (-4, 5): ("g-2", lambda a, b, g, dl, ep: g - 2),
    (-3, 3): ("a-3", lambda a, b, g, dl, ep: a - 3),
    (-2, 3): ("b+dlt-1", lambda a, b, g, dl, ep: b + dl - 1),
    (-2, 2): ("dlt", lambda a, b, g, dl, ep: dl),
    (-1, 2): ("a-b-2", lambda a, b, g, dl, ep: a - b - 2),
}


@dataclass(frozen=True)
class Table1:
    entries: dict  # (p, q) -> int, non-zero cells only

    def __getitem__(self, pq: tuple[int, int]) -> int:
        return self.entries.get(pq, 0)

    def grid(self) -> list[list[int]]:
        """Rows q = 7..0 (top to bottom), columns p = -7..0."""
        return [[self[(p, q)] for p in P_RANGE] for q in reversed(Q_RANGE)]

    def nonzero(self) -> dict:
        return {pq: v for pq, v in self.entries.items() if v}

    def to_dict(self) -> dict:
        return {f"{p},{q}": v for (p, q), v in sorted(self.nonzero().items())}


def table1(ch: InstantonCharge, defect: CohomDefect) -> Table1:
    require_admissible(ch)
    validate_defect(ch, defect)
    a, b, g = ch.as_tuple()
    entries = {}
    for (p, q), (_, fn) in TABLE1_LAYOUT.items():
        val = fn(a, b, g, defect.delta, defect.epsilon)
        if val < 0:
            raise NegativeEntry(p, q, val)
        entries[(p, q)] = val
    return Table1(entries)


def format_table1(table: Table1 | None = None) -> str:
    """Render the table with q = 7 on top; symbolic when no values are given."""
    width = 10
    lines = []
    for q in reversed(Q_RANGE):
        cells = []
        for p in P_RANGE:
            if table is None:
                cells.append(TABLE1_LAYOUT[(p, q)][0] if (p, q) in TABLE1_LAYOUT else "0")
            else:
                cells.append(str(table[(p, q)]))
        lines.append("|" + "|".join(c.center(width) for c in cells) + f"| q={q}")
    lines.append(" " + " ".join(f"p={p}".center(width) for p in P_RANGE))
    return "\n".join(lines)


def column_euler(table: Table1, p: int) -> int:
    v = SHIFTS[-p]
    return sum((1 if (q - v) % 2 == 0 else -1) * table[(p, q)] for q in Q_RANGE)


def table1_euler_check(ch: InstantonCharge, defect: CohomDefect) -> bool:
    return all(ok for _, ok, _, _ in table1_euler_columns(ch, defect))


def table1_euler_columns(ch: InstantonCharge, defect: CohomDefect):
    """Per column p: (p, match, alternating column sum, chi(E tensor F_(-p)^dual))."""
    table = table1(ch, defect)
    k = kclass(build_shape(ch, defect))
    out = []
    for p in P_RANGE:
        lhs = column_euler(table, p)
        rhs = chi_twist(k, -F_LIST[-p].cls)
        out.append((p, lhs == rhs, lhs, rhs))
    return out


@dataclass(frozen=True)
class CurveFamily:
    name: str
    cls: CurveClass
    h_degree: int
    hilbert_slope: int
    det_normal_pairings: dict

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "class": list(self.cls.as_tuple()),
            "h_degree": self.h_degree,
            "hilbert_polynomial": f"{self.hilbert_slope}t+1",
            "pairings": self.det_normal_pairings,
        }


CURVE_CLASSES = {
    "Line": CurveClass(0, 1, 0),
    "A": CurveClass(1, 0, 0),
    "B": CurveClass(1, -1, 0),
    "C": CurveClass(0, 0, 1),
}


def curve_family(which: str) -> CurveFamily:
    try:
        cls = CURVE_CLASSES[which]
    except KeyError:
        raise ValueError(f"unknown curve family {which!r}; choose from {sorted(CURVE_CLASSES)}")
    deg = curve_dot_div(cls, H)
    pairings = {
        "l-e": curve_dot_div(cls, DivClass(1, -1, 0)),
        "l+e": curve_dot_div(cls, DivClass(1, 1, 0)),
    }
    return CurveFamily(which, cls, deg, deg, pairings)


def general_fano_bound(index: int, degree: int) -> int:
    if index in (3, 4):
        return 1
    if index == 2:
        return 2
    if index == 1:
        return -(-degree // 4)
    raise ValueError(f"Fano index must be in 1..4, got {index}")
