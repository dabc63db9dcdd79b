import io
import json
import subprocess
import sys

import pytest

from calcat.cli import main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out)
    return code, out.getvalue()


def test_eval_examples():
    assert run("eval", "s", "--model", "sym-q", "--at", "x^2 (x) x")[1].splitlines()[-1] == "1/3·x^3"
    assert run("eval", "dcirc", "--model", "rel", "--at", "[x,y]")[1].splitlines()[-1] == \
        "([x],y) + ([y],x)"
    assert run("eval", "id", "--at", "y")[1].splitlines()[-1] == "y"
    assert run("eval", "d", "--model", "rb", "--at", "<x> x^2")[1].splitlines()[-1] == \
        "2·(<x> x (x) x)"


def test_eval_rebinding():
    code, out = run("eval", "s", "--bind", "A=K", "--at", "{*}")
    assert code == 0 and out.splitlines()[-1] == "1/2·{*, *}"


def test_eval_without_at_lists_images():
    code, out = run("eval", "id")
    assert code == 0 and "x |-> x" in out


def test_check_exit_codes():
    assert run("check", "--model", "sym-q", "--suite", "calculus", "--degree", "4", "--vars", "3")[0] == 0
    code, out = run("check", "--model", "rb", "--suite", "separations")
    assert code == 0 and out.count("XFAIL") == 4
    assert run("check", "--model", "zero", "--suite", "comonoid")[0] == 0


def test_usage_and_parse_errors_exit_2():
    assert run("check", "--model", "nope", "--suite", "comonoid")[0] == 2
    assert run("check", "--model", "sym-q")[0] == 2
    assert run("check", "--eq", "nonexistent")[0] == 2
    assert run("eval", "(d ;")[0] == 2
    assert run("eval", "e ; d")[0] == 2
    assert run("check", "--suite", "calculus", "--degree", "0")[0] == 2


def test_json_is_deterministic_and_versioned():
    args = ("check", "--model", "sym-q", "--suite", "integral", "--json", "--no-timing")
    a, b = run(*args)[1], run(*args)[1]
    assert a == b
    data = json.loads(a)
    assert data["schema"] == "calcat/1"
    assert set(data) == {"schema", "model", "suite", "bounds", "results"}
    for r in data["results"]:
        assert set(r) >= {"id", "anchor", "verdict", "witness", "ms"}
        assert r["ms"] == 0


def test_witness_present_iff_failure_like():
    data = json.loads(run("check", "--model", "sym-q", "--suite", "separations", "--json")[1])
    for r in data["results"]:
        assert (r["witness"] is not None) == (r["verdict"] in ("fail", "expected-fail-confirmed"))


def test_witness_only_and_eq_list():
    code, out = run("check", "--model", "sym-f2", "--eq", "d.1,cd-as-s.2", "--witness-only")
    assert code == 0
    assert "cd-as-s.2" in out and "d.1" not in out


def test_console_script_entry_point():
    proc = subprocess.run([sys.executable, "-m", "calcat.cli", "eval", "L", "--at", "x^2 y"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.splitlines()[-1] == "3·x^2 y"
