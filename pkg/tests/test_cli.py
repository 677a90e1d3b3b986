import io
import json
import subprocess
import sys

import pytest

from threecubes import cli, verify
from threecubes.verify import Check


def run(*argv):
    out = io.StringIO()
    code = cli.run(list(argv), out)
    return code, out.getvalue()


def test_count_plain():
    assert run("count", "--n", "3", "--t", "3") == (0, "4\n")


def test_count_infinite_family_exits_2(capsys):
    code, out = run("count", "--n", "8", "--t", "2")
    assert code == 2 and out == ""
    assert "infinite family: n=t³" in capsys.readouterr().err


def test_enumerate_plain():
    code, out = run("enumerate", "--n", "3", "--t", "3")
    assert code == 0
    assert out.splitlines() == ["-5 4 4", "1 1 1", "4 -5 4", "4 4 -5"]


def test_records_csv():
    code, out = run("records", "--limit", "100")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "n,count,is_new_max"
    assert "90,12,true" in lines
    assert "18,6,true" in lines


def test_records_json_lines():
    code, out = run("records", "--limit", "100", "--json")
    rows = [json.loads(line) for line in out.splitlines()]
    assert {"n": "90", "count": "12", "is_new_max": True} in [r["result"] for r in rows]


def test_zero_reduced_family():
    assert run("zero", "--n", "90") == (0, "12\n")
    code, out = run("reduced", "--n", "36")
    assert code == 0 and int(out) >= 1
    code, out = run("family", "--nu", "2")
    assert out.splitlines() == ["nu,p,p1,n,A,B,C", "1,2,3,36,2,3,-6", "2,3,5,135,3,5,-9"]


def test_band():
    assert run("band", "--n", "2", "--j", "2") == (0, "3\n")


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["count", "--n", "3"],
        ["count", "--n", "x", "--t", "1"],
        ["records", "--limit", "-5"],
        ["nosuch"],
        ["verify", "--suite", "nosuch"],
        ["records", "--limit", "10", "--csv", "--json"],
    ],
)
def test_usage_errors_exit_1(argv, capsys):
    assert cli.run(argv, io.StringIO()) == 1
    assert "error" in capsys.readouterr().err


def test_domain_errors_exit_2():
    assert run("zero", "--n", "0")[0] == 2
    assert run("sigma-ratio", "--n", "5040")[0] == 2
    assert run("records", "--limit", str(10**7 + 1))[0] == 2
    assert run("abc", "--xmax", "10", "--top", "2", "--epsilon", "0")[0] == 2
    assert run("reduced", "--n", "0")[0] == 2


def test_robin_scan_starts_at_3():
    env = json.loads(run("robin", "--from", "1", "--to", "10")[1])
    assert env["result"]["checked"] == "8"


def test_verify_pass_and_fail(monkeypatch):
    code, out = run("verify", "--suite", "euler", "--fast")
    assert code == 0 and out.startswith("PASS")
    monkeypatch.setitem(verify.SUITES, "euler", lambda fast=False: [Check("planted", False, "x")])
    code, out = run("verify", "--suite", "euler")
    assert code == 3
    assert out == "FAIL euler: planted (x)\n"


ROUND_TRIP = [
    ["count", "--n", "3", "--t", "3", "--json"],
    ["count", "--n", "4", "--t", "0", "--json"],
    ["enumerate", "--n", "6", "--t", "0", "--json"],
    ["band", "--n", "29", "--j", "8", "--json"],
    ["robin", "--from", "5000", "--to", "5100"],
    ["sigma-ratio", "--n", "10080"],
]


def _argv_from_envelope(env):
    argv = [env["cmd"]]
    for key, value in env["input"].items():
        argv += [f"--{key}", value]
    if env["cmd"] in ("count", "enumerate", "band"):
        argv.append("--json")
    return argv


def _all_ints_are_strings(obj):
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return True
    if isinstance(obj, dict):
        return all(_all_ints_are_strings(v) for v in obj.values())
    if isinstance(obj, list):
        return all(_all_ints_are_strings(v) for v in obj)
    return False


@pytest.mark.parametrize("argv", ROUND_TRIP)
def test_json_round_trip(argv):
    code, out = run(*argv)
    assert code == 0
    env = json.loads(out)
    assert _all_ints_are_strings(env)
    code2, out2 = run(*_argv_from_envelope(env))
    assert code2 == 0 and out2 == out


def test_sigma_ratio_json():
    env = json.loads(run("sigma-ratio", "--n", "5041")[1])
    assert env["result"]["sigma1"] == "5113"
    assert env["result"]["in_S"] is False
    assert env["result"]["ratio"].startswith("0.2657334228497")
    assert len(env["result"]["ratio"].replace("0.", "", 1)) == 30


def test_robin_json():
    env = json.loads(run("robin", "--from", "3", "--to", "6000")[1])
    assert env["result"]["violations"] == []
    assert env["result"]["out_of_claim"][-1] == "5040"


def test_abc_outputs():
    code, out = run("abc", "--xmax", "100", "--top", "5")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "x,y,z,n,rad,q,implied_C"
    assert any(line.startswith("1,80,81,6480,30,") for line in lines)
    code, out = run("abc", "--xmax", "100", "--top", "5", "--json", "--epsilon", "0.5")
    rows = [json.loads(line) for line in out.splitlines()]
    assert all(_all_ints_are_strings(r) for r in rows)
    hit = [r for r in rows if r.get("x") == "1" and r.get("y") == "80"]
    assert hit and hit[0]["z"] == "81" and hit[0]["rad"] == "30"
    assert hit[0]["q"].startswith("1.292030029")
    assert all("implied_K" in r for r in rows if "mean_z" in r)


def test_console_script_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "threecubes.cli", "count", "--n", "3", "--t", "3"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0 and proc.stdout == "4\n"
