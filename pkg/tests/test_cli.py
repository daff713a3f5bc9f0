import json
import subprocess
import sys

import pytest

from torsemotion.cli import main
from torsemotion.demos import DEMOS, EXAMPLE3_PLANE, EXAMPLE4_MOTION, EXAMPLE4_PLANE, EXAMPLE5_MOTION, EXAMPLE6_MOTION
from torsemotion.dq import PlanePoly
from torsemotion.ring import ONE, T
from torsemotion.serialize import dq_to_json, parse_dq, plane_to_json


@pytest.fixture
def files(tmp_path):
    def write(name, data):
        path = tmp_path / name
        path.write_text(json.dumps(data))
        return str(path)

    return write


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_analyze(capsys, files):
    code, out, _ = run(capsys, "analyze", "--input", files("u.json", plane_to_json(EXAMPLE4_PLANE)))
    assert code == 0
    info = json.loads(out)["analysis"]
    assert info["g"] == ["10", "-6", "1"]
    assert (info["deg_u"], info["deg_gauss"], info["minimal_motion_degree"]) == (4, 2, 3)


def test_analyze_not_kinematic(capsys, files):
    code, out, _ = run(capsys, "analyze", "--input", files("u.json", plane_to_json(EXAMPLE3_PLANE)))
    assert code == 2
    assert json.loads(out)["diagnostic"] == "NOT_KINEMATIC"


def test_analyze_unsupported(capsys, files):
    u = PlanePoly(ONE, T, T, ONE - ONE)
    code, out, _ = run(capsys, "analyze", "--input", files("u.json", plane_to_json(u)))
    assert code == 3


def test_analyze_equalize(capsys, files):
    u = PlanePoly(T, ONE, ONE - ONE, ONE - ONE)
    code, out, _ = run(capsys, "analyze", "--equalize", "--input", files("u.json", plane_to_json(u)))
    assert code == 0
    assert "mobius" in json.loads(out)


def test_synthesize_and_verify(capsys, files, tmp_path):
    u = files("u.json", plane_to_json(EXAMPLE4_PLANE))
    motion = str(tmp_path / "c.json")
    code, out, _ = run(capsys, "synthesize", "--input", u, "--output", motion)
    assert code == 0
    result = json.loads(out)
    assert result["degree"] == 3 and result["h"] == ["10", "-6", "1"]
    assert [s["step"] for s in result["transcript"]][-1] == "verify"
    assert parse_dq(json.loads(open(motion).read())).degree == 3
    code, out, _ = run(capsys, "verify", "--motion", motion, "--torse", u)
    assert code == 0 and json.loads(out)["ok"] is True


def test_synthesize_with_cofactor(capsys, files):
    u = files("u.json", plane_to_json(EXAMPLE4_PLANE))
    code, out, _ = run(capsys, "synthesize", "--input", u, "--cofactor", '["10", "-6", "11", "-6", "1"]')
    assert code == 0 and json.loads(out)["degree"] == 4


def test_no_solution(capsys, files):
    u = files("u.json", plane_to_json(EXAMPLE4_PLANE))
    code, _, err = run(capsys, "synthesize", "--input", u, "--cofactor", '["1"]')
    assert code == 4
    diag = json.loads(err)
    assert diag["error"] == "NO_SOLUTION" and diag["reason"] == "MINIMALITY"


def test_verify_failure(capsys, files):
    m = files("c.json", dq_to_json(EXAMPLE4_MOTION))
    w = files("u.json", plane_to_json(PlanePoly(u1=ONE)))
    code, out, _ = run(capsys, "verify", "--motion", m, "--torse", w)
    assert code == 1 and json.loads(out)["ok"] is False


def test_split(capsys, files):
    m = files("c.json", dq_to_json(EXAMPLE5_MOTION))
    code, out, _ = run(capsys, "split", "--motion", m, "--factor", '["1", "0", "1"]')
    assert code == 0 and parse_dq(json.loads(out)["quotient"]).degree == 3
    m = files("c6.json", dq_to_json(EXAMPLE6_MOTION))
    code, out, _ = run(capsys, "split", "--even-power", "--motion", m, "--factor", '["0", "1"]')
    assert code == 0 and parse_dq(json.loads(out)["quotient"]) == EXAMPLE4_MOTION


def test_family(capsys, files):
    m = files("c.json", dq_to_json(EXAMPLE4_MOTION))
    code, out, _ = run(capsys, "family", "--motion", m, "--e5", '["2"]')
    assert code == 0 and parse_dq(json.loads(out)).degree == 3


def test_sample_json_and_csv(capsys, files):
    m = files("c.json", dq_to_json(EXAMPLE4_MOTION))
    code, out, _ = run(capsys, "sample", "--motion", m, "--count", "3", "--from", "-1", "--to", "1/2")
    assert code == 0
    samples = json.loads(out)
    assert [s["t"] for s in samples] == ["-1", "-1/4", "1/2"]
    assert len(samples[0]["rect_corners"]) == 4
    code, out, _ = run(capsys, "sample", "--motion", m, "--count", "2", "--csv", "--digits", "6")
    lines = out.strip().splitlines()
    assert lines[0].split(",")[:5] == ["t", "n1", "n2", "n3", "d"]
    assert len(lines[0].split(",")) == 17 and len(lines) == 3


@pytest.mark.parametrize("name", sorted(DEMOS))
def test_demos(capsys, name):
    code, out, _ = run(capsys, "demo", "--name", name)
    assert code == 0 and json.loads(out)["verdict"] == "ok"


def test_malformed_input(capsys, files):
    bad = files("u.json", {"u0": ["1.5"]})
    code, _, err = run(capsys, "analyze", "--input", bad)
    assert code == 64 and json.loads(err)["error"] == "MALFORMED_INPUT"
    code, _, _ = run(capsys, "analyze")
    assert code == 64
    code, _, _ = run(capsys, "sample", "--motion", bad, "--rect", "x")
    assert code == 64


def test_not_reduced_is_malformed(capsys, files):
    u = files("u.json", plane_to_json(EXAMPLE4_PLANE.scale(T - 1)))
    code, _, err = run(capsys, "synthesize", "--input", u)
    assert code == 64 and json.loads(err)["error"] == "NOT_REDUCED"
    code, _, _ = run(capsys, "synthesize", "--input", u, "--auto-reduce")
    assert code == 0


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "torsemotion", "demo", "--name", "example1"], capture_output=True, text=True
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["verdict"] == "ok"
