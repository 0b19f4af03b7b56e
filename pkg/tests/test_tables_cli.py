"""Reference tables and the command-line interface.

The table emitters must be deterministic; the CLI must use the documented
exit codes (0 success, 1 verification failure, 2 usage error).
"""

import json
from fractions import Fraction

import pytest

from minvert.cli import cli_main
from minvert.rootsys import SimpleType, build_root_system
from minvert.tables import TABLE1_DATA, emit_table, joseph_weights

# ---------------------------------------------------------------------------
# tables


def test_emit_deterministic():
    for i in (1, 2, 3, 4):
        for fmt in ("text", "json"):
            assert emit_table(i, fmt) == emit_table(i, fmt)


def test_emit_bad_arguments():
    with pytest.raises(ValueError):
        emit_table(5, "text")
    with pytest.raises(ValueError):
        emit_table(1, "xml")


def test_table1_contents():
    t = emit_table(1, "text")
    assert "G2: level -5/3" in t
    assert "E8: level -6" in t
    assert "lambda0 = w1 + 1/3*w2" in t
    j = json.loads(emit_table(1, "json"))
    assert [r["type"] for r in j["rows"]] == ["G2", "D4", "F4", "E6", "E7", "E8"]


def test_table2_contents():
    j = json.loads(emit_table(2, "json"))
    by_type = {r["type"]: r for r in j["rows"]}
    assert by_type["D4"]["count"] == 2
    assert by_type["E8"]["count"] == 6
    for r in j["rows"]:
        assert len(r["pairs"]) == r["count"]


def test_table3_symbolic_entries():
    t = emit_table(3, "text")
    assert "k_1 = k + 1/2*n - 2" in t   # so_n family, fitted in n
    assert "k_1 = k + 1/2" in t          # sp family
    assert "k_0 = k + 3/2" in t          # sl3 center
    assert "k_2 = 2*k + 4" in t          # so7 second summand


def test_table4_contents():
    t = emit_table(4, "text")
    assert "G2: g^natural = sl2; k_1 = 3*k + 5" in t
    assert "E8: g^natural = E7; k_1 = k + 6" in t


def test_joseph_weights():
    for name, (lam0, words) in TABLE1_DATA.items():
        t = SimpleType(name[0], int(name[1]))
        rs = build_root_system(t)
        jw = joseph_weights(t)
        assert len(jw.weights) == len(words)
        # the identity word gives lambda_0 - rho
        base = tuple(Fraction(m) - r for m, r in zip(lam0, rs.rho))
        assert jw.weights[0] == base
        # weights are pairwise distinct
        assert len(set(jw.weights)) == len(jw.weights)
    with pytest.raises(ValueError):
        joseph_weights(SimpleType("B", 3))


# ---------------------------------------------------------------------------
# CLI


def test_cli_describe(capsys):
    assert cli_main(["describe", "D4"]) == 0
    out = capsys.readouterr().out
    assert "dual coxeter number: 6" in out
    assert "dim minimal orbit: 10" in out
    assert "deligne level: -2" in out


def test_cli_tables_json(capsys):
    assert cli_main(["tables", "2", "--json"]) == 0
    j = json.loads(capsys.readouterr().out)
    assert j["table"] == 2


def test_cli_pairs(capsys):
    assert cli_main(["pairs", "E6"]) == 0
    out = capsys.readouterr().out
    assert "3 pairs" in out


def test_cli_singular(capsys):
    assert cli_main(["singular", "D4", "--summand", "1", "--power", "1"]) == 0
    out = capsys.readouterr().out
    assert "k = -1" in out


def test_cli_solve(capsys):
    assert cli_main(["solve", "A1", "--weight", "2", "--degree", "1"]) == 0
    out = capsys.readouterr().out
    assert "level 0" in out


def test_cli_classify(capsys):
    assert cli_main(["classify", "E8", "--level", "-6"]) == 0
    out = capsys.readouterr().out
    assert "lisse: yes" in out
    assert "collapses to trivial: True" in out


def test_cli_usage_errors(capsys):
    assert cli_main(["describe", "Z9"]) == 2
    assert cli_main(["pairs", "A1"]) == 2          # no simple summand
    assert cli_main(["classify", "D4", "--level", "x"]) == 2
    assert cli_main(["solve", "A1", "--weight", "1,2", "--degree", "1"]) == 2
    assert cli_main(["nonsense"]) == 2
    capsys.readouterr()
