import json
import shutil
import subprocess

import pytest
from hypothesis import given, settings, strategies as st

from elchi.envalg import E, P1, UElement
from elchi.funalg import FElement, a1, th
from elchi.qplane import PlaneElement
from elchi.report import VerificationReport
from elchi.scalar import HM, HP, I, K, ONE, Z, GaussianRational, ParamScalar
from elchi.workbench.cli import main
from elchi.workbench.parser import AlphabetMixError, ExpressionSyntaxError, evaluate, parse_expression
from elchi.workbench.serialize import emit_csv, emit_json
from elchi.workbench.suites import SuiteConfig, UnknownSuiteError, run_suite


def test_parser_examples():
    expected = th(1) * a1() - FElement.one().scale(Z / 2) + th(1).scale(Z) - th(2).scale(Z / 2)
    assert evaluate("a1*Th(1)") == expected
    u = evaluate("(1/2)*i*z^-1*P1")
    assert u == P1().scale(I * Z ** -1 / 2) and len(u) == 1
    with pytest.raises(AlphabetMixError):
        parse_expression("a1*P1")
    with pytest.raises(AlphabetMixError):
        parse_expression("chi + J")


def test_parser_alphabets_and_atoms():
    assert parse_expression("h+*h- + k").alphabet == "scalar"
    assert evaluate("h+*h- + k") == HP * HM + K
    assert evaluate("h−") == HM
    assert parse_expression("x*xbar").alphabet == "plane"
    assert evaluate("x + i*xbar") == evaluate("z*chi - i*z*chibar")
    assert parse_expression("chi*a1").alphabet == "F"
    assert evaluate("E(-2)^2") == E(-4)
    assert evaluate("Casimir - 4*Hplus*Hminus") == UElement.zero()
    assert evaluate("-(1 - z)^2") == -(ONE - Z) ** 2


@pytest.mark.parametrize("src,pos", [("a1 +", 4), ("Th(x)", 3), ("2 3", 2), ("P1 @", 3), ("h+^-1", 3), ("(z", 2)])
def test_syntax_errors_carry_position(src, pos):
    with pytest.raises(ExpressionSyntaxError) as info:
        parse_expression(src)
    assert info.value.position == pos
    assert isinstance(info.value, SyntaxError)


coeffs = st.builds(
    lambda a, b, e, hp, k: ParamScalar.monomial(GaussianRational(a, b), z=e, hp=hp, k=k),
    st.integers(-3, 3), st.integers(-2, 2), st.integers(-2, 2), st.integers(0, 2), st.integers(0, 1),
).filter(lambda c: bool(c))


def _elements(cls, keys):
    return st.lists(st.tuples(keys, coeffs), max_size=4).map(
        lambda items: sum((cls.basis(k).scale(c) for k, c in items), cls.zero())
    )


u_keys = st.tuples(st.integers(0, 2), st.integers(0, 2), st.integers(-2, 2), st.integers(0, 2))
f_keys = st.tuples(st.integers(-2, 2), st.integers(0, 2), st.integers(0, 2))
p_keys = st.tuples(st.integers(0, 3), st.integers(0, 3))


@given(st.one_of(_elements(UElement, u_keys), _elements(FElement, f_keys), _elements(PlaneElement, p_keys)))
@settings(max_examples=60, deadline=None)
def test_print_parse_round_trip(elem):
    text = str(elem)
    back = evaluate(text)
    if not elem:
        assert back == ParamScalar()
        return
    assert back == elem
    assert str(back) == text


@given(coeffs)
@settings(max_examples=40, deadline=None)
def test_scalar_round_trip(c):
    assert evaluate(str(c)) == c


def test_json_examples():
    assert json.loads(emit_json(ONE)) == [{"re": "1", "im": "0", "z": 0, "hp": 0, "hm": 0, "k": 0}]
    data = json.loads(emit_json(a1()))
    assert data == [{"l": 0, "m": 1, "n": 0, "coeff": json.loads(emit_json(ONE))}]
    rep = VerificationReport("demo", window={"n": 1})
    rep.expect_equal("k", ONE, ONE)
    data = json.loads(emit_json(rep))
    assert data["pass"] is True and data["discrepancies"] == []
    assert {"identity", "window", "pass", "discrepancies"} <= set(data)


def test_json_is_byte_stable():
    a = evaluate("(1/3)*z^-1*h+*Th(-1)*a2^2 + i*a1 - k")
    assert emit_json(a) == emit_json(evaluate(str(a)))
    _, reps1, text1 = run_suite(SuiteConfig("lemma35", order=3, fmt="json"))
    _, reps2, text2 = run_suite(SuiteConfig("lemma35", order=3, fmt="json"))
    assert text1 == text2
    assert list(json.loads(text1)) == sorted(json.loads(text1))


def test_csv_coefficient_table():
    text = emit_csv(evaluate("chi^2 - 1/2*z*chibar"))
    assert text.splitlines() == ["chi,chibar,coeff", "0,1,-1/2*z", "2,0,1"]


def test_suite_config_validation():
    with pytest.raises(UnknownSuiteError):
        SuiteConfig("nope")
    with pytest.raises(ValueError):
        SuiteConfig("lemma35", order=0)
    with pytest.raises(ValueError):
        SuiteConfig("lemma35", corrupt=(1, 1))


def test_cli_exit_codes(tmp_path, capsys):
    assert main(["verify", "lemma35", "--order", "3"]) == 0
    assert main(["verify", "no-such-suite"]) == 2
    assert main(["verify", "lemma35", "--order", "0"]) == 2
    assert main(["act", "--element", "a1*P1", "--on", "a1"]) == 2
    assert main(["act", "--element", "P1 +", "--on", "a1"]) == 2
    assert main(["pair", "--u", "a1", "--f", "a1"]) == 2
    out = tmp_path / "r.json"
    assert main(["verify", "prop33", "--order", "3", "--corrupt", "1,2", "--format", "json", "--out", str(out)]) == 1
    data = json.loads(out.read_text())
    assert data["pass"] is False
    assert data["reports"][0]["discrepancies"][0]["key"] == ["coefficient", 1, 2]


def test_cli_commands(capsys):
    assert main(["act", "--side", "lambda", "--element", "Jscript", "--on", "a1"]) == 0
    assert capsys.readouterr().out.strip() == "i*a2"
    assert main(["act", "--element", "E(-2)", "--on", "chi"]) == 0
    assert capsys.readouterr().out.strip() == "1 + chi"
    assert main(["act", "--side", "ell", "--element", "tau", "--on", "Th(2)"]) == 0
    assert capsys.readouterr().out.strip() == "-2*i*Th(2)"
    assert main(["pair", "--u", "E(2)", "--f", "a2"]) == 0
    assert capsys.readouterr().out.strip() == "i*z"
    assert main(["state", "angular", "--order", "0", "--r", "-1"]) == 0
    assert capsys.readouterr().out.strip() == "-z*k*chi"
    assert main(["limit", "plane", "--order", "3"]) == 0
    assert capsys.readouterr().out.startswith("[PASS]")
    assert main(["limit", "angular", "--order", "3", "--r", "2", "--format", "json"]) == 0
    assert json.loads(capsys.readouterr().out)["pass"] is True


def test_classical_negative_control_names_key(capsys):
    code = main(["verify", "classical-limits", "--order", "3", "--r-max", "1", "--l-max", "2",
                 "--corrupt", "2,1", "--format", "json"])
    assert code == 1
    data = json.loads(capsys.readouterr().out)
    bad = [r for r in data["reports"] if not r["pass"]]
    assert len(bad) == 1 and bad[0]["discrepancies"][0]["key"] == [2, 1]


@pytest.mark.skipif(shutil.which("elchi") is None, reason="console script not installed")
def test_console_script():
    proc = subprocess.run(["elchi", "verify", "lemma22"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert "[PASS]" in proc.stdout
