import json

import pytest

from fano_instanton.cli import SCHEMA, run


def _run(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr().out
    return code, out


def _json(capsys, *argv):
    code, out = _run(capsys, *argv)
    return code, json.loads(out)


def test_cohom(capsys):
    code, rep = _json(capsys, "cohom", "--bundle", "-l - e")
    assert code == 0
    assert rep["schema"] == SCHEMA and "DivClass" in rep["convention"]
    assert rep["result"]["h1"] == 1 and rep["result"]["chi"] == -1


def test_sections(capsys):
    code, rep = _json(capsys, "sections", "--bundle", "l", "--list")
    assert code == 0
    assert sorted(rep["result"]["monomials"]) == ["x1*y", "x2*y", "z"]


def test_charge(capsys):
    code, rep = _json(capsys, "charge", "--alpha", "4", "--beta", "2", "--gamma", "2")
    assert code == 0
    assert rep["result"]["degree"] == 14 and rep["result"]["moduli_dim"] == 1
    code, rep = _json(capsys, "charge", "--alpha", "3", "--beta", "1", "--gamma", "3", "--epsilon", "1")
    assert code == 1 and "defect_error" in rep["result"]
    code, rep = _json(capsys, "charge", "--alpha", "3", "--beta", "2", "--gamma", "3")
    assert code == 1 and rep["result"]["admissible"] is False


def test_monad(capsys):
    code, rep = _json(capsys, "monad", "--charge", "3,1,3", "--defect", "0,0")
    assert code == 0 and rep["result"]["chern"]["c2"] == [3, -1, 3]
    code, rep = _json(capsys, "monad", "--charge", "3,3,3")
    assert code == 1 and rep["error"]["type"] == "NegativeMultiplicity"


def test_exccoll(capsys):
    code, rep = _json(capsys, "exccoll", "--verify")
    assert code == 0 and rep["passed"]


def test_minimal(capsys):
    code, rep = _json(capsys, "minimal", "--charge", "313", "--verify", "stability", "--samples", "200")
    assert code == 0
    checks = rep["result"]["checks"]
    assert set(checks) == {"surjective", "stability"}
    assert all("matrix" in c for c in checks["stability"]["checks"])


def test_sweep(capsys):
    code, rep = _json(capsys, "sweep", "serre", "--bound", "3")
    assert code == 0 and rep["result"]["failures"] == 0


def test_accept_subset(capsys):
    code, rep = _json(capsys, "accept", "--criterion", "3", "--criterion", "6")
    assert code == 0
    assert [c["number"] for c in rep["result"]["criteria"]] == [3, 6]


def test_pretty(capsys):
    code, out = _run(capsys, "charge", "--alpha", "4", "--beta", "2", "--gamma", "2", "--pretty")
    assert code == 0 and "q=7" in out and not out.lstrip().startswith("{")


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as info:
        run(["cohom", "--bundle", "q"])
    assert info.value.code == 2
    with pytest.raises(SystemExit) as info:
        run(["frobnicate"])
    assert info.value.code == 2
    with pytest.raises(SystemExit) as info:
        run(["monad", "--charge", "1,2"])
    assert info.value.code == 2


def test_consistency_defect_exit_code(capsys, monkeypatch):
    from fano_instanton import cli
    from fano_instanton.errors import ConsistencyFailure

    def broken(args):
        raise ConsistencyFailure("forced")

    monkeypatch.setitem(cli.COMMANDS, "cohom", broken)
    code, rep = _json(capsys, "cohom", "--bundle", "l")
    assert code == 3 and rep["error"]["type"] == "ConsistencyFailure"


def test_byte_identical(capsys):
    argv = ["minimal", "--charge", "422", "--random-sections", "--seed", "7", "--samples", "300"]
    _, first = _run(capsys, *argv)
    _, second = _run(capsys, *argv)
    assert first == second
    _, third = _run(capsys, "minimal", "--charge", "422", "--random-sections", "--seed", "8", "--samples", "300")
    assert third != first
