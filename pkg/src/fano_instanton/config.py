from __future__ import annotations

import os
from dataclasses import dataclass

DEFAULT_SEED = 20240917
WORKERS_ENV = "FANO_WORKERS"


def worker_count() -> int:
    raw = os.environ.get(WORKERS_ENV, "1")
    try:
        n = int(raw)
    except ValueError:
        raise ValueError(f"{WORKERS_ENV} must be a positive integer, got {raw!r}")
    return max(n, 1)


@dataclass(frozen=True)
class GridConfig:
    """Bounds for the property sweeps over charges and divisor classes."""

    bound: int = 8  # DivClass grid [-bound, bound]^3
    f1_bound: int = 12  # (u, v) grid on F_1
    oracle_bound: int = 6  # DivClass grid for the monomial-count oracle
    alpha_max: int = 10
    gamma_max: int = 10
    beta_abs: int = 8
    defect_max: int = 4


@dataclass(frozen=True)
class MinimalConfig:
    charge: str = "422"
    window: int = 3
    seed: int = DEFAULT_SEED
    samples: int = 10_000
    random_sections: bool = False
    line_point: tuple[int, int] | None = None
    certificate_degree: int = 3


@dataclass(frozen=True)
class AcceptanceConfig:
    seed: int = DEFAULT_SEED
    samples: int = 10_000
    grid: GridConfig = GridConfig()
