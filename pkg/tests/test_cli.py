import io
import json

import pytest

from pointres.cli import run_command

E12 = "vars: x, y\nweights: 7, 3\nF: 3*x^2+y^5; 5*x*y^4+7*y^6\nh: 1\n"


@pytest.fixture
def problem(tmp_path):
    def make(text, name="p.txt"):
        path = tmp_path / name
        path.write_text(text)
        return str(path)
    return make


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run_command(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_residue_e12(problem):
    code, out, _ = run("residue", problem(E12))
    assert code == 0
    assert "residue: 30517578125/218041257467152161" in out
    assert "normal form: 1" in out


def test_residue_json(problem):
    code, out, _ = run("residue", problem(E12.replace("h: 1", "h: x*y^5+x^3")), "--json")
    obj = json.loads(out)
    assert code == 0 and obj["residue"] == "2/63"
    assert obj["normal_form"]["1,5"] == "2/3"


def test_milnor_e12(problem):
    assert run("milnor", problem(E12)) == (0, "12\n", "")


def test_dual_and_tau(problem):
    code, out, _ = run("dual", problem(E12))
    assert code == 0 and "dimension: 12" in out and "psi[0,5] = xi_y^5-1/3*xi_x^2" in out
    code, out, _ = run("tau", problem(E12))
    assert code == 0 and f"den: {218041257467152161 ** 2}" in out


def test_check_trivial(problem):
    code, out, _ = run("check", problem("vars: x, y\nF: x^2; y^3\n"), "--seed", "3")
    assert code == 0 and out.strip().endswith("pass")


def test_flag_overrides(problem):
    path = problem("vars: x, y\nF: 3*x^2+y^5; 5*x*y^4+7*y^6\n")
    code, out, _ = run("dual", path, "--weights", "7,3")
    assert code == 0 and "psi[0,5] = xi_y^5-1/3*xi_x^2" in out
    assert run("dual", path, "--order", "lex")[0] == 2
    assert run("dual", path, "--weights", "1")[0] == 2


def test_math_failure_exit_code(problem):
    code, _, err = run("dual", problem("vars: x, y\nF: x*y; x^2*y\n"), "--max-degree", "10")
    assert code == 1 and "math error" in err
    assert run("milnor", problem("vars: x, y\nF: x+1; y\n", "b.txt"))[0] == 1


def test_input_error_exit_codes(problem):
    code, _, err = run("residue", problem("vars: x, y\nF: x; y\n"))
    assert code == 2 and "h:" in err
    code, _, err = run("dual", problem("vars: x, y\nF: x\n", "c.txt"))
    assert code == 2 and "F:" in err
    assert run("dual", "/nonexistent/problem.txt")[0] == 2
    assert run("frobnicate", "x")[0] == 2


def test_parametric_residue(problem):
    text = "vars: x, y\nparams: t\nweights: 7, 3\nF: 3*x^2+t*y^5; 5*t*x*y^4+7*y^6\nh: 1\n"
    code, out, _ = run("residue", problem(text), "--json")
    obj = json.loads(out)
    assert obj["residue"] == "30517578125/218041257467152161*t^22"
    assert "t" in obj["genericity"]
