import pytest

from fano_instanton.config import GridConfig, worker_count
from fano_instanton.sweeps import SWEEPS, run_sweep

SMALL = GridConfig(bound=3, oracle_bound=3, f1_bound=4, alpha_max=6, gamma_max=6, beta_abs=4, defect_max=2)


@pytest.mark.parametrize("kind", SWEEPS)
def test_sweeps_pass(kind):
    res = run_sweep(kind, SMALL, workers=1)
    assert res.passed and res.checked > 0


def test_worker_count_does_not_change_result():
    one = run_sweep("table1", SMALL, workers=1).to_dict()
    two = run_sweep("table1", SMALL, workers=2).to_dict()
    assert one == two


def test_unknown_sweep():
    with pytest.raises(ValueError):
        run_sweep("bogus", SMALL)


def test_worker_env(monkeypatch):
    monkeypatch.setenv("FANO_WORKERS", "3")
    assert worker_count() == 3
    monkeypatch.setenv("FANO_WORKERS", "x")
    with pytest.raises(ValueError):
        worker_count()
