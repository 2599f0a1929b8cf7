import json
import subprocess
import sys

import pytest

from qconic.cli import main, parse_spec_text
from qconic.errors import ParseError
from qconic.exactfield import parse_field


def run(*args):
    proc = subprocess.run([sys.executable, "-m", "qconic", *args], capture_output=True, text=True)
    return proc.returncode, proc.stdout, proc.stderr


SKLYANIN = ("--family", "sklyanin", "--param", "lam=2")


def test_classify_flags():
    code, out, _ = run("classify", *SKLYANIN, "--f", "1,1,1", "--json")
    assert code == 0
    rec = json.loads(out)
    assert rec["ca_class"] == "SPLIT4" and rec["ea_count"] == 6 and rec["spec_count"] == 4


def test_output_is_byte_identical():
    first = run("classify", *SKLYANIN, "--f=-4,12,12")
    assert first == run("classify", *SKLYANIN, "--f=-4,12,12")
    assert first[0] == 0


def test_field_strings_round_trip(tmp_path):
    spec = tmp_path / "c.yaml"
    spec.write_text("family: skew\nparameters:\n  alpha: 1\n  beta: 1\n  gamma: 0\n"
                    "f: [3, 3, 4]\n", encoding="utf-8")
    code, out, _ = run("classify", "--spec", str(spec))
    assert code == 0
    rec = json.loads(out)
    assert [parse_field(v) for v in rec["f"]] == [parse_field(v) for v in ("3", "3", "4")]
    for point in rec["witnesses"]["ea_points"]:
        vals = [parse_field(c) for c in point]
        assert [parse_field(str(v)) for v in point] == vals
    assert rec["ea_description"] == "2 points"


def test_complex_literal_input():
    code, out, _ = run("classify", "--family", "skew", "--param", "alpha=0", "--param", "beta=0",
                       "--param", "gamma=0", "--f", "1,i,-eps")
    assert code == 0
    rec = json.loads(out)
    assert rec["f"] == ["1", "i", "-eps"]
    # the square roots of i lie outside Q(zeta_12), so E_A stays undetermined
    assert rec["ea_count"] == "UNKNOWN" and rec["witnesses"]["g_search_complete"] is False


@pytest.mark.parametrize("args,code", [
    (("classify", *SKLYANIN, "--f", "0,0,0"), 2),
    (("classify", "--family", "sklyanin", "--param", "lam=1", "--f", "1,1,1"), 2),
    (("classify", "--family", "tl", "--f", "0,1,0"), 2),
    (("classify", *SKLYANIN, "--f", "1,1,+"), 1),
    (("classify", *SKLYANIN, "--f", "1,1"), 1),
    (("frobnicate",), 1),
    (("classify", "--spec", "/nonexistent/spec.yaml"), 1),
])
def test_exit_codes(args, code):
    got, out, err = run(*args)
    assert got == code
    assert out == ""
    assert json.loads(err.strip().splitlines()[-1])["error"] in ("parse", "domain")


def test_yaml_error_has_line(tmp_path):
    spec = tmp_path / "bad.yaml"
    spec.write_text("family: skew\nparameters:\n  alpha: 0\n  beta: 0\n  gamma: 0\nf: [1, 1, 2/]\n",
                    encoding="utf-8")
    code, _, err = run("classify", "--spec", str(spec))
    assert code == 1
    assert json.loads(err)["line"] == 6


def test_parse_spec_text_rejects_unknown_key():
    with pytest.raises(ParseError):
        parse_spec_text("family: skew\ncolour: blue\n")


def test_verify_tables_text_and_json():
    code, out, _ = run("verify-tables", "--text")
    assert code == 0 and out.strip().endswith("assertions passed")
    code, out, _ = run("verify-tables", "--json")
    assert code == 0 and all(a["ok"] for a in json.loads(out))


@pytest.mark.parametrize("fault", ["involution", "catalog", "examples"])
def test_verify_tables_fault_injection(fault):
    assert main(["verify-tables", "--inject-fault", fault]) == 3


def test_center_dual_c_algebra(capsys):
    assert main(["center", "--family", "skew", "--param", "alpha=0", "--param", "beta=0",
                 "--param", "gamma=0"]) == 0
    assert json.loads(capsys.readouterr().out) == ["x^2", "y^2", "z^2"]
    assert main(["dual", *SKLYANIN, "--f", "1,1,1"]) == 0
    d = json.loads(capsys.readouterr().out)
    assert d["kind"] == "commutative" and len(d["relations"]) == 6 and "conic_dual" in d
    assert main(["c-algebra", "--family", "skew", "--param", "alpha=1", "--param", "beta=1",
                 "--param", "gamma=0", "--f", "1,0,0"]) == 0
    c = json.loads(capsys.readouterr().out)
    assert c["class"] == "JORDAN4" and c["min_poly"] == "u^4"


def test_geometry(capsys):
    assert main(["geometry", "--tag", "S1", "--param", "alpha=-1", "--g", "1,1,1"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert [c["count"] for c in out["components"]] == [1, 1, 1]
    assert main(["geometry", *SKLYANIN, "--g", "1,1,1"]) == 0
    assert json.loads(capsys.readouterr().out)["E_A"]["count"] == 6
    assert main(["geometry", "--tag", "EC", "--g", "1,1,1"]) == 2
