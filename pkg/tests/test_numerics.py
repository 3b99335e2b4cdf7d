import warnings

import pytest
from hypothesis import given
from hypothesis import strategies as st

from fano_instanton.charge import (
    CohomDefect,
    InstantonCharge,
    charge_degree,
    is_admissible,
    valid_defects,
    validate_defect,
)
from fano_instanton.chow import CurveClass
from fano_instanton.errors import CapTooSmall, DefectViolation, NegativeEntry, NotAdmissible
from fano_instanton.numerics import (
    TABLE1_LAYOUT,
    column_euler,
    curve_family,
    enumerate_minimal,
    format_table1,
    general_fano_bound,
    moduli_dim,
    table1,
    table1_euler_check,
    table1_euler_columns,
)

admissible = st.builds(InstantonCharge, st.integers(3, 12), st.integers(-8, 10), st.integers(2, 12)).filter(
    is_admissible
)


@pytest.mark.parametrize(
    "charge, ok",
    [((3, 1, 3), True), ((4, 2, 2), True), ((3, 1, 2), False), ((3, 2, 3), False)],
)
def test_admissibility(charge, ok):
    assert is_admissible(InstantonCharge(*charge)) is ok


def test_degree():
    assert charge_degree(InstantonCharge(4, 2, 2)) == 14
    assert charge_degree(InstantonCharge(3, 1, 3)) == 14
    assert InstantonCharge(4, 2, 2).curve == CurveClass(4, -2, 2)


def test_enumerate_minimal():
    assert {ch.as_tuple() for ch, _ in enumerate_minimal(14)} == {(4, 2, 2), (3, 1, 3)}
    with pytest.warns(CapTooSmall):
        assert enumerate_minimal(13) == []
    cap15 = {ch.as_tuple(): deg for ch, deg in enumerate_minimal(15)}
    assert cap15 == {(4, 2, 2): 14, (3, 1, 3): 14, (3, 0, 3): 15, (4, 1, 2): 15}
    # (5,3,2) is admissible but has degree 15 - 3 + 4 = 16
    assert charge_degree(InstantonCharge(5, 3, 2)) == 16
    assert (InstantonCharge(5, 3, 2), 16) in enumerate_minimal(16)


def test_enumerate_against_brute_force():
    for cap in range(14, 23):
        got = {ch for ch, _ in enumerate_minimal(cap)}
        brute = {
            InstantonCharge(a, b, g)
            for a in range(0, cap)
            for b in range(-3 * cap, cap)
            for g in range(0, cap)
            if is_admissible(InstantonCharge(a, b, g)) and charge_degree(InstantonCharge(a, b, g)) <= cap
        }
        assert got == brute
        degs = [d for _, d in enumerate_minimal(cap)]
        assert degs == sorted(degs)


def test_moduli_dim():
    assert moduli_dim(InstantonCharge(4, 2, 2)) == 1
    assert moduli_dim(InstantonCharge(3, 1, 3)) == 1
    with pytest.raises(NotAdmissible):
        moduli_dim(InstantonCharge(1, 0, 0))


@given(admissible)
def test_moduli_dim_formula(ch):
    assert moduli_dim(ch) == 2 * charge_degree(ch) - 27


def test_table_examples():
    assert table1(InstantonCharge(3, 1, 3), CohomDefect()).nonzero() == {(-6, 6): 2, (-5, 5): 1, (-4, 5): 1}
    assert table1(InstantonCharge(4, 2, 2), CohomDefect()).nonzero() == {(-6, 6): 2, (-3, 3): 1, (-2, 3): 1}


def test_defect_gate():
    ch = InstantonCharge(3, 1, 3)
    with pytest.raises(DefectViolation):
        validate_defect(ch, CohomDefect(0, 1))
    with pytest.raises(DefectViolation):
        table1(ch, CohomDefect(0, 1))
    # the bounds alone accept (0, 1); only 2*delta >= epsilon rejects it
    assert table1(ch, CohomDefect(1, 1))[(-6, 6)] == 3
    with pytest.raises(DefectViolation):
        validate_defect(InstantonCharge(5, 0, 3), CohomDefect(0, 0))


def test_negative_entry_guard(monkeypatch):
    from fano_instanton import numerics

    layout = dict(TABLE1_LAYOUT)
    layout[(-1, 2)] = ("bad", lambda a, b, g, dl, ep: -1)
    monkeypatch.setattr(numerics, "TABLE1_LAYOUT", layout)
    with pytest.raises(NegativeEntry):
        numerics.table1(InstantonCharge(4, 2, 2), CohomDefect())


def test_euler_columns_examples():
    cols = {p: (lhs, rhs) for p, _, lhs, rhs in table1_euler_columns(InstantonCharge(3, 1, 3), CohomDefect())}
    assert cols[-4] == (1, 1)
    assert cols[0] == (0, 0)
    cols = {p: (lhs, rhs) for p, _, lhs, rhs in table1_euler_columns(InstantonCharge(4, 2, 2), CohomDefect())}
    assert cols[-6] == (2, 2)


@given(admissible, st.integers(0, 4))
def test_euler_check_property(ch, k):
    for defect in valid_defects(ch, k):
        assert table1_euler_check(ch, defect)


def test_column_euler_signs():
    tab = table1(InstantonCharge(4, 2, 2), CohomDefect())
    assert column_euler(tab, -6) == 2
    assert column_euler(tab, -3) == 1  # shift 1, q = 3
    assert all(type(column_euler(tab, p)) is int for p in range(-7, 1))


def test_format():
    text = format_table1()
    assert "a+g-6" in text and "q=7" in text
    assert "2" in format_table1(table1(InstantonCharge(4, 2, 2), CohomDefect()))


@pytest.mark.parametrize("name, cls, deg", [("Line", (0, 1, 0), 1), ("A", (1, 0, 0), 3), ("C", (0, 0, 1), 2)])
def test_curve_families(name, cls, deg):
    fam = curve_family(name)
    assert fam.cls.as_tuple() == cls
    assert fam.h_degree == deg
    with pytest.raises(ValueError):
        curve_family("D")


def test_general_bound():
    assert general_fano_bound(1, 48) == 12
    assert general_fano_bound(1, 14) == 4
    assert general_fano_bound(2, 40) == 2
    assert general_fano_bound(3, 54) == 1
    with pytest.raises(ValueError):
        general_fano_bound(5, 10)


def test_valid_defects():
    ch = InstantonCharge(3, 0, 3)
    got = list(valid_defects(ch, 2))
    assert CohomDefect(0, 0) not in got  # delta >= 1 - beta = 1
    assert all(2 * d.delta >= d.epsilon for d in got)
