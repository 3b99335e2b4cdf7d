from fano_instanton.chow import DivClass
from fano_instanton.cohomology import cohom_f, ext_table_linebundles
from fano_instanton.exceptional import (
    F_LIST,
    G_LIST,
    K_WINDOW,
    dual_pairing,
    verify_exceptional_pairs,
    verify_right_dual_pattern,
    verify_strong_dual,
)


def test_reports_pass():
    for rep in (verify_exceptional_pairs(), verify_strong_dual(), verify_right_dual_pattern()):
        assert rep.passed, rep.first_failure
        assert rep.checked > 0


def test_pattern_is_antidiagonal():
    pattern = verify_right_dual_pattern().details["pattern"]
    assert pattern == [[int(i + j == 7) for j in range(8)] for i in range(8)]


def test_examples():
    assert ext_table_linebundles(F_LIST[1].cls, F_LIST[0].cls).is_zero()
    assert ext_table_linebundles(F_LIST[0].cls, F_LIST[0].cls).as_tuple() == (1, 0, 0, 0)
    assert ext_table_linebundles(F_LIST[7].cls, F_LIST[0].cls).is_zero()
    t = ext_table_linebundles(G_LIST[0], G_LIST[7])
    assert t.h0 > 0 and t.h1 == t.h2 == t.h3 == 0
    assert dual_pairing(0, 7, 0) == 1
    assert dual_pairing(7, 0, 7) == 1
    assert all(dual_pairing(0, 0, k) == 0 for k in K_WINDOW)
    assert cohom_f(G_LIST[0] - F_LIST[7].cls) == cohom_f(DivClass(-3, 1, -2))


def test_window_is_wide_enough():
    shifts = [f.shift for f in F_LIST]
    assert max(K_WINDOW) >= max(shifts) + 3
