"""Charges c_2 = alpha*L.XI - beta*E.XI + gamma*L^2 and their cohomological defects."""
from __future__ import annotations

from dataclasses import dataclass

from .chow import H, CurveClass, curve_dot_div
from .errors import DefectViolation, NotAdmissible


@dataclass(frozen=True, order=True)
class InstantonCharge:
    alpha: int
    beta: int
    gamma: int

    @property
    def curve(self) -> CurveClass:
        return CurveClass(self.alpha, -self.beta, self.gamma)

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.alpha, self.beta, self.gamma)

    def __str__(self) -> str:
        return f"({self.alpha},{self.beta},{self.gamma})"


@dataclass(frozen=True)
class CohomDefect:
    """delta = h^1(E(-e)), epsilon = h^1(E(-e-xi)); declared, not computed."""

    delta: int = 0
    epsilon: int = 0


def is_admissible(ch: InstantonCharge) -> bool:
    a, b, g = ch.as_tuple()
    return a >= 3 and g >= 2 and a + g >= 6 and a - b >= 2


def require_admissible(ch: InstantonCharge) -> None:
    if not is_admissible(ch):
        raise NotAdmissible(f"charge {ch} violates alpha>=3, gamma>=2, alpha+gamma>=6, alpha-beta>=2")


def charge_degree(ch: InstantonCharge) -> int:
    return curve_dot_div(ch.curve, H)


def defect_bounds_ok(ch: InstantonCharge, defect: CohomDefect) -> bool:
    """Lower bounds delta >= max(0, 1-beta), epsilon >= max(0, 2-beta-gamma)."""
    return defect.delta >= max(0, 1 - ch.beta) and defect.epsilon >= max(
        0, 2 - ch.beta - ch.gamma
    )


def validate_defect(ch: InstantonCharge, defect: CohomDefect) -> None:
    """Full gate: the lower bounds plus 2*delta >= epsilon."""
    if not defect_bounds_ok(ch, defect):
        raise DefectViolation(
            f"(delta, epsilon) = ({defect.delta}, {defect.epsilon}) below the bounds for {ch}"
        )
    if 2 * defect.delta < defect.epsilon:
        raise DefectViolation(
            f"2*delta >= epsilon fails for (delta, epsilon) = ({defect.delta}, {defect.epsilon})"
        )


def valid_defects(ch: InstantonCharge, max_value: int):
    """All (delta, epsilon) in [0, max_value]^2 passing :func:`validate_defect`."""
    for d in range(max_value + 1):
        for e in range(max_value + 1):
            defect = CohomDefect(d, e)
            if defect_bounds_ok(ch, defect) and 2 * d >= e:
                yield defect
