"""Runs every acceptance criterion and prints one PASS/FAIL line per criterion."""
import pytest

from fano_instanton.acceptance import CRITERIA, run_criterion
from fano_instanton.config import AcceptanceConfig

CONFIG = AcceptanceConfig()


@pytest.mark.parametrize("number", range(1, len(CRITERIA) + 1))
def test_criterion(number, capsys):
    res = run_criterion(number, CONFIG)
    with capsys.disabled():
        print(f"\n{res.line()}  ({res.seconds:.2f}s)")
    assert res.passed, res.detail
