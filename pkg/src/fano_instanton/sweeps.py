"""Grid property sweeps.  Each sweep splits its grid into independent chunks,
runs them on a bounded process pool and merges the results in chunk order,
so the outcome does not depend on the worker count."""
from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .charge import InstantonCharge, is_admissible, valid_defects
from .chow import H, OMEGA, CurveClass, DivClass
from .cohomology import chi_rr_general, cohom_f, h0_f1
from .config import GridConfig, worker_count
from .cox import basis_f, basis_f1
from .monad import build_shape, chern, kclass
from .numerics import table1_euler_columns

SWEEPS = ("cohom-rr", "serre", "oracle", "monad-chern", "table1")


@dataclass
class SweepResult:
    kind: str
    checked: int = 0
    failures: int = 0
    first_counterexample: object = None
    params: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def merge(self, checked: int, bad: list) -> None:
        self.checked += checked
        if bad and self.first_counterexample is None:
            self.first_counterexample = bad[0]
        self.failures += len(bad)

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "params": self.params,
            "checked": self.checked,
            "failures": self.failures,
            "first_counterexample": self.first_counterexample,
            "passed": self.passed,
        }


def _span(b: int) -> range:
    return range(-b, b + 1)


# chunk workers: module level so they pickle


def _cohom_rr_chunk(args):
    l, bound = args
    bad, n = [], 0
    for e, xi in itertools.product(_span(bound), repeat=2):
        d = DivClass(l, e, xi)
        n += 1
        if cohom_f(d).euler != chi_rr_general(1, d, CurveClass(), 0):
            bad.append(list(d.as_tuple()))
    return n, bad


def _serre_chunk(args):
    l, bound = args
    bad, n = [], 0
    for e, xi in itertools.product(_span(bound), repeat=2):
        d = DivClass(l, e, xi)
        a, b = cohom_f(d), cohom_f(OMEGA - d)
        n += 1
        if any(a[i] != b[3 - i] for i in range(4)):
            bad.append(list(d.as_tuple()))
    return n, bad


def _oracle_chunk(args):
    l, bound = args
    bad, n = [], 0
    for e, xi in itertools.product(_span(bound), repeat=2):
        d = DivClass(l, e, xi)
        n += 1
        if cohom_f(d).h0 != len(basis_f(d)):
            bad.append(list(d.as_tuple()))
    return n, bad


def _f1_oracle(f1_bound: int):
    bad, n = [], 0
    for u, v in itertools.product(_span(f1_bound), repeat=2):
        n += 1
        if h0_f1(u, v) != len(basis_f1(u, v)):
            bad.append([u, v])
    return n, bad


def _charges(grid: GridConfig):
    for a in range(0, grid.alpha_max + 1):
        for b in _span(grid.beta_abs):
            for g in range(0, grid.gamma_max + 1):
                ch = InstantonCharge(a, b, g)
                if is_admissible(ch):
                    yield ch


def _monad_chunk(args):
    a, grid = args
    bad, n = [], 0
    for ch in _charges(grid):
        if ch.alpha != a:
            continue
        for defect in valid_defects(ch, grid.defect_max):
            n += 1
            cd = chern(kclass(build_shape(ch, defect)))
            if (cd.rank, cd.c1, cd.c2, cd.c3) != (2, -H, ch.curve, 0):
                bad.append({"charge": list(ch.as_tuple()), "defect": [defect.delta, defect.epsilon]})
    return n, bad


def _table1_chunk(args):
    a, grid = args
    bad, n = [], 0
    for ch in _charges(grid):
        if ch.alpha != a:
            continue
        for defect in valid_defects(ch, grid.defect_max):
            n += 1
            cols = table1_euler_columns(ch, defect)
            wrong = [p for p, ok, _, _ in cols if not ok]
            if wrong:
                bad.append(
                    {"charge": list(ch.as_tuple()), "defect": [defect.delta, defect.epsilon], "columns": wrong}
                )
    return n, bad


def _run_chunks(fn, jobs, workers: int):
    if workers <= 1 or len(jobs) <= 1:
        return [fn(j) for j in jobs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, jobs))  # map keeps job order


def run_sweep(kind: str, grid: GridConfig | None = None, workers: int | None = None) -> SweepResult:
    grid = grid or GridConfig()
    workers = worker_count() if workers is None else workers
    if kind == "cohom-rr":
        res = SweepResult(kind, params={"bound": grid.bound})
        jobs = [(l, grid.bound) for l in _span(grid.bound)]
        outs = _run_chunks(_cohom_rr_chunk, jobs, workers)
    elif kind == "serre":
        res = SweepResult(kind, params={"bound": grid.bound})
        jobs = [(l, grid.bound) for l in _span(grid.bound)]
        outs = _run_chunks(_serre_chunk, jobs, workers)
    elif kind == "oracle":
        res = SweepResult(kind, params={"bound": grid.oracle_bound, "f1_bound": grid.f1_bound})
        outs = [_f1_oracle(grid.f1_bound)]
        jobs = [(l, grid.oracle_bound) for l in _span(grid.oracle_bound)]
        outs += _run_chunks(_oracle_chunk, jobs, workers)
    elif kind in ("monad-chern", "table1"):
        res = SweepResult(
            kind,
            params={
                "alpha_max": grid.alpha_max,
                "gamma_max": grid.gamma_max,
                "beta_abs": grid.beta_abs,
                "defect_max": grid.defect_max,
            },
        )
        jobs = [(a, grid) for a in range(grid.alpha_max + 1)]
        fn = _monad_chunk if kind == "monad-chern" else _table1_chunk
        outs = _run_chunks(fn, jobs, workers)
    else:
        raise ValueError(f"unknown sweep {kind!r}; choose from {', '.join(SWEEPS)}")
    for n, bad in outs:
        res.merge(n, bad)
    return res
