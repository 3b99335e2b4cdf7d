"""The ten acceptance criteria, each a function returning a :class:`CriterionResult`."""
from __future__ import annotations

import time
import warnings
from dataclasses import dataclass, field

from .charge import CohomDefect, InstantonCharge, charge_degree, validate_defect
from .chow import H, DivClass, constants, slope, triple
from .cohomology import chi_f1, cohom_f
from .config import AcceptanceConfig, GridConfig
from .cox import SectionVector
from .errors import CapTooSmall, Destabilized, DefectViolation
from .exceptional import verify_exceptional_pairs, verify_right_dual_pattern, verify_strong_dual
from .kernel import defect_gate_report, minimal_presentation, run_checks, verify_stability
from .numerics import enumerate_minimal, moduli_dim
from .sweeps import _charges, run_sweep


@dataclass
class CriterionResult:
    number: int
    name: str
    passed: bool
    detail: dict = field(default_factory=dict)
    seconds: float | None = None

    def line(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        return f"[{verdict}] criterion {self.number}: {self.name}"

    def to_dict(self, timing: bool = False) -> dict:
        out = {"number": self.number, "name": self.name, "passed": self.passed, "detail": self.detail}
        if timing and self.seconds is not None:
            out["seconds"] = round(self.seconds, 3)
        return out


def _sweeps(*kinds, grid: GridConfig) -> tuple[bool, dict]:
    results = {k: run_sweep(k, grid).to_dict() for k in kinds}
    return all(r["passed"] for r in results.values()), results


def criterion_1(cfg: AcceptanceConfig) -> CriterionResult:
    ok, detail = _sweeps("oracle", grid=cfg.grid)
    return CriterionResult(1, "closed-form h^0 matches Cox monomial counts", ok, detail)


def criterion_2(cfg: AcceptanceConfig) -> CriterionResult:
    ok, detail = _sweeps("cohom-rr", "serre", grid=cfg.grid)
    return CriterionResult(2, "Kunneth Euler characteristic = Riemann-Roch; Serre duality", ok, detail)


def criterion_3(cfg: AcceptanceConfig) -> CriterionResult:
    values = {
        "chi_F1(-2l)": (chi_f1(-2, 0), 0),
        "chi_F1(-l-e)": (chi_f1(-1, 1), -1),
        "h1_F(-l+e)": (cohom_f(DivClass(-1, 1, 0)).h1, 0),
        "h1_F(-l-e)": (cohom_f(DivClass(-1, -1, 0)).h1, 1),
        "h^3": (triple(H, H, H), 48),
        "degree": (constants().degree, 48),
        "slope(-l-2xi)": (slope(1, DivClass(-1, 0, -2)), -28),
        "slope(-2l+e)": (slope(1, DivClass(-2, 1, 0)), -20),
    }
    ok = all(got == want for got, want in values.values())
    detail = {k: {"got": str(g), "expected": w} for k, (g, w) in values.items()}
    return CriterionResult(3, "scalar values", ok, detail)


def criterion_4(cfg: AcceptanceConfig) -> CriterionResult:
    ok, detail = _sweeps("monad-chern", grid=cfg.grid)
    return CriterionResult(4, "monad K-class Chern data (2, -h, charge, 0)", ok, detail)


def criterion_5(cfg: AcceptanceConfig) -> CriterionResult:
    ok, detail = _sweeps("table1", grid=cfg.grid)
    return CriterionResult(5, "Beilinson table column Euler characteristics", ok, detail)


def criterion_6(cfg: AcceptanceConfig) -> CriterionResult:
    cap14 = sorted(ch.as_tuple() for ch, _ in enumerate_minimal(14))
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", CapTooSmall)
        cap13 = enumerate_minimal(13)
    dims = {str(ch): moduli_dim(ch) for ch in (InstantonCharge(4, 2, 2), InstantonCharge(3, 1, 3))}
    formula_bad = [
        list(ch.as_tuple()) for ch in _charges(cfg.grid) if moduli_dim(ch) != 2 * charge_degree(ch) - 27
    ]
    ok = cap14 == [(3, 1, 3), (4, 2, 2)] and cap13 == [] and set(dims.values()) == {1} and not formula_bad
    detail = {
        "cap14": [list(t) for t in cap14],
        "cap13": [list(ch.as_tuple()) for ch, _ in cap13],
        "moduli_dim": dims,
        "formula_failures": formula_bad,
    }
    return CriterionResult(6, "minimal charges and moduli dimension", ok, detail)


def criterion_7(cfg: AcceptanceConfig) -> CriterionResult:
    reports = [verify_exceptional_pairs(), verify_strong_dual(), verify_right_dual_pattern()]
    ok = all(r.passed for r in reports)
    return CriterionResult(7, "exceptional collection and right dual", ok, {r.name: r.to_dict() for r in reports})


def _minimal(number: int, which: str, cfg: AcceptanceConfig) -> CriterionResult:
    pres = minimal_presentation(which)
    reports = run_checks(pres, seed=cfg.seed, samples=cfg.samples)
    ok = len(reports) == 7 and all(r.passed and r.decided for r in reports.values())
    detail = {k: r.to_dict() for k, r in reports.items()}
    for rep in detail.values():
        rep.pop("certificate", None)  # large; available from the CLI
    return CriterionResult(number, f"minimal instanton {pres.name}", ok, detail)


def criterion_8(cfg: AcceptanceConfig) -> CriterionResult:
    return _minimal(8, "422", cfg)


def criterion_9(cfg: AcceptanceConfig) -> CriterionResult:
    return _minimal(9, "313", cfg)


def criterion_10(cfg: AcceptanceConfig) -> CriterionResult:
    pres = minimal_presentation("422")
    m0 = pres.with_entries(
        (pres.entries[0], pres.entries[1], SectionVector.zero(pres.entries[2].cls)), "m=0"
    )
    detail: dict = {}
    try:
        verify_stability(m0)
        destab = False
    except Destabilized as exc:
        destab = True
        detail["destabilized_by"] = {"twist": str(exc.twist), "h0": exc.dim}
    gate = defect_gate_report(0, 1)
    try:
        validate_defect(InstantonCharge(4, 2, 2), CohomDefect(0, 1))
        rejected = False
    except DefectViolation as exc:
        rejected = True
        detail["defect_violation"] = str(exc)
    detail["gate"] = gate.to_dict()
    ok = destab and not gate.passed and rejected
    return CriterionResult(10, "negative controls", ok, detail)


CRITERIA = (
    criterion_1,
    criterion_2,
    criterion_3,
    criterion_4,
    criterion_5,
    criterion_6,
    criterion_7,
    criterion_8,
    criterion_9,
    criterion_10,
)


def run_criterion(number: int, cfg: AcceptanceConfig | None = None) -> CriterionResult:
    cfg = cfg or AcceptanceConfig()
    start = time.perf_counter()
    res = CRITERIA[number - 1](cfg)
    res.seconds = time.perf_counter() - start
    return res


def run_all(cfg: AcceptanceConfig | None = None) -> list[CriterionResult]:
    return [run_criterion(i, cfg) for i in range(1, len(CRITERIA) + 1)]
