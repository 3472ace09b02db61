import json

import pytest

from glwedge.cli import EXIT_FAIL, EXIT_OK, EXIT_USAGE, main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_act_text(capsys):
    code, out, _ = run(capsys, "act", "--k", "1", "--r", "2", "--lambda", "1", "--mu", "1", "--nu", "")
    assert code == EXIT_OK
    lines = out.splitlines()
    assert lines[1].split(":")[1].strip() == "e2"
    assert lines[2].split(":")[1].strip() == "e2"
    assert lines[3].split(":")[1].strip() == "e2"
    assert lines[4] == "equal: true"


def test_act_json_schema(capsys):
    code, out, _ = run(capsys, "act", "--k", "1", "--r", "1", "--lambda", "", "--mu", "", "--nu", "", "--output", "json")
    assert code == EXIT_OK
    data = json.loads(out)
    assert set(data) == {"query", "direct", "first_version", "second_version", "equal", "window"}
    assert data["equal"] is True
    assert data["direct"] == [{"e_exponents": [0], "coeff": [{"exponents": {}, "coeff": "1/1"}]}]


def test_act_k_above_r_is_zero(capsys):
    code, out, _ = run(capsys, "act", "--k", "2", "--r", "1", "--lambda", "1", "--mu", "", "--nu", "", "--output", "json")
    data = json.loads(out)
    assert code == EXIT_OK and data["direct"] == [] and data["first_version"] == []


def test_act_window_too_small(capsys):
    code, _, err = run(capsys, "act", "--k", "1", "--r", "2", "--lambda", "1", "--mu", "3", "--nu", "", "--trunc", "1")
    assert code == EXIT_USAGE and "error" in err


@pytest.mark.parametrize("argv", [
    ["act", "--k", "1", "--r", "2", "--lambda", "1", "--mu", "1"],
    ["act", "--k", "-1", "--r", "2", "--lambda", "1", "--mu", "1", "--nu", ""],
    ["act", "--k", "1", "--r", "1", "--lambda", "1,2", "--mu", "", "--nu", ""],
    ["schur", "--r", "1", "--lambda", "1,1"],
    ["schur", "--lambda", "1"],
    ["verify", "--identities", "nope"],
    ["series", "--op", "sigma_sideways", "--j", "1", "--r", "1"],
])
def test_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == EXIT_USAGE


def test_schur(capsys):
    assert run(capsys, "schur", "--r", "2", "--lambda", "1,1")[1].strip() == "e2"
    code, out, _ = run(capsys, "schur", "--k", "2", "--lambda", "1,1")
    assert code == EXIT_OK and out.strip() == "z1*z2"


def test_series(capsys):
    code, out, _ = run(capsys, "series", "--op", "sigma_minus_bar", "--target", "h", "--r", "1", "--j", "2")
    assert code == EXIT_OK and out.strip() == "h2 - h1*z^-1"
    code, out, _ = run(capsys, "series", "--op", "sigma_plus_bar", "--target", "b", "--j", "2")
    assert code == EXIT_OK and "b2" in out and "b3" in out


def test_verify_exit_codes(capsys):
    code, out, _ = run(capsys, "verify", "--identities", "giambelli", "--r", "4", "--max-weight", "6")
    assert code == EXIT_OK and out.startswith("PASS giambelli")
    code, out, _ = run(capsys, "verify", "--identities", "giambelli", "--r", "1", "--inject-failure", "giambelli")
    assert code == EXIT_FAIL and "FAIL giambelli" in out


def test_verify_json_is_byte_stable(capsys):
    argv = ["verify", "--identities", "first_version,cauchy", "--r", "2", "--max-weight", "2", "--output", "json"]
    _, a, _ = run(capsys, *argv)
    _, b, _ = run(capsys, *argv)
    assert a == b
    assert json.loads(a)["ok"] is True
