from __future__ import annotations

import json
import subprocess
import sys
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from equising.cli import AnalysisRequest, main, parse_poly, run
from equising.errors import PolySyntaxError, UnknownVariable
from equising.ring import QQ, PrimeField, TowerRing
from equising.series import YPoly

from conftest import EX1, EX2, EX3


def test_parse_simple():
    F = parse_poly("y^2 - x^3")
    assert F.to_dict() == {(2, 0): QQ(1), (0, 3): QQ(-1)}


def test_parse_ex1_matches_factors():
    assert parse_poly(EX1) == parse_poly("((y-x)^2-x^3)*((y+x)^2-x^3)*(y^2-x^3)")


def test_parse_reduces_mod_p():
    F5 = PrimeField(5)
    F = parse_poly("y^2 + 1/2*x", F5)
    assert F.coeff(0, 1) == F5(3)


def test_parse_operators():
    assert parse_poly("x**2*y") == parse_poly("x^2 * y")
    assert parse_poly("-(x - y)^2") == parse_poly("-x^2 + 2*x*y - y^2")
    assert parse_poly("(x + y)/2") == parse_poly("1/2*x + 1/2*y")


@pytest.mark.parametrize(
    "text,pos",
    [("y^2 - z", 6), ("y^2 +", 5), ("y^2 / x", 6), ("y^ x", 3), ("y $ 2", 2), ("(y - x", 6), ("", 0), ("x/0", 2)],
)
def test_parse_errors(text, pos):
    with pytest.raises(PolySyntaxError) as info:
        parse_poly(text)
    assert info.value.position == pos


def test_unknown_variable():
    with pytest.raises(UnknownVariable):
        parse_poly("t*y")


def _structured(text, **kw):
    code, out = run(AnalysisRequest(text, fmt="json-like", **kw))
    return code, json.loads(out) if code == 0 else out


def test_run_ex1():
    code, d = _structured(EX1)
    assert code == 0
    assert d["verdict"] == "pseudo_irreducible"
    assert (d["e"], d["f"], d["char_exponents"], d["intersections"]) == (2, 3, [2, 3], [4, 4])
    assert d["disc_valuation"] == 33 and d["branch_disc_valuation"] == 3
    assert [ed["P"] for ed in d["data"]] == ["Z^3 - Z", "Z - 1"]
    assert d["stage"] is None


def test_run_ex2():
    code, d = _structured(EX2)
    assert code == 0
    assert d["verdict"] == "not_pseudo_irreducible" and d["stage"] == 1


def test_run_with_oracle():
    code, d = _structured(EX3, oracle_check=True)
    assert code == 0
    assert d["oracle"]["boundaries_agree"] and d["oracle"]["disc_agrees"]


def test_exit_codes():
    assert run(AnalysisRequest(""))[0] == 1
    assert run(AnalysisRequest("y^2 +"))[0] == 1
    assert run(AnalysisRequest("(y - x)^2"))[0] == 2
    assert run(AnalysisRequest("y^5 - x", field="fp:5"))[0] == 2
    assert run(AnalysisRequest("0"))[0] == 2
    assert run(AnalysisRequest("y - x", field="fp:4"))[0] == 2


def test_skip_squarefree_check_flag():
    code, d = _structured("(y - x)^2*(y + x)", skip_squarefree_check=True)
    assert code == 0 and d["verdict"] == "not_pseudo_irreducible"
    assert _structured(EX1, skip_squarefree_check=True) == _structured(EX1)


def test_deterministic_output():
    a = run(AnalysisRequest(EX1, fmt="json-like"))
    b = run(AnalysisRequest(EX1, fmt="json-like"))
    assert a == b


def test_text_output():
    code, out = run(AnalysisRequest(EX1))
    assert code == 0
    assert "C=(2; 3)" in out and "Gamma=(4, 4)" in out


def test_main_reads_file(tmp_path, capsys):
    f = tmp_path / "f.txt"
    f.write_text("y^2 - x^3\n")
    assert main([str(f), "--format", "json-like"]) == 0
    d = json.loads(capsys.readouterr().out)
    assert d["char_exponents"] == [2, 3]


def test_module_entry_point():
    out = subprocess.run(
        [sys.executable, "-m", "equising", "--field", "fp:7"],
        input="y^2 - x^3", capture_output=True, text=True,
    )
    assert out.returncode == 0 and "pseudo_irreducible" in out.stdout


terms = st.dictionaries(
    st.tuples(st.integers(0, 4), st.integers(0, 4)),
    st.builds(Fraction, st.integers(-40, 40), st.integers(1, 6)),
    max_size=6,
)


@settings(max_examples=80, deadline=None)
@given(terms, st.sampled_from([QQ, PrimeField(7), PrimeField(10007)]))
def test_roundtrip(t, field):
    R = TowerRing(field)
    coeffs = {}
    for k, c in t.items():
        if isinstance(field, PrimeField) and c.denominator % field.p == 0:
            continue
        coeffs[k] = field(c)
    F = YPoly.from_terms(R, coeffs)
    assert parse_poly(F.format(), field) == F
