import io
import json
import subprocess
import sys

import pytest

from ybveronese import make_trivial
from ybveronese.catalog import serialize
from ybveronese.cli import run

from conftest import permutation_n2, square_free_n3


def invoke(*argv, stdin=""):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdin=io.StringIO(stdin), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def sf3_file(tmp_path):
    p = tmp_path / "sf3.json"
    p.write_bytes(serialize(square_free_n3()))
    return str(p)


@pytest.fixture
def perm2_file(tmp_path):
    p = tmp_path / "perm2.json"
    p.write_bytes(serialize(permutation_n2()))
    return str(p)


def test_validate(sf3_file):
    code, out, _ = invoke("validate", "--input", sf3_file)
    assert code == 0 and "square_free: True" in out and out.startswith("# ybx-validate v1")


def test_validate_json_stdin():
    code, out, _ = invoke("validate", "--input", "-", "--format", "json", stdin=serialize(make_trivial(2)).decode())
    doc = json.loads(out)
    assert code == 0 and doc["schema"] == "ybx-validate" and doc["version"] == 1
    assert doc["fixed_points"] == [[1, 1], [2, 2]]


def test_validate_falsified():
    code, out, _ = invoke("validate", "--table", "[[[2,1],[1,2]],[[1,1],[2,2]]]")
    assert code == 1 and "involutive: True" in out and "nondegenerate: False" in out


def test_validate_corrupted():
    code, _, err = invoke("validate", "--table", "[[[1,1],[1,1]],[[1,2],[2,2]]]")
    assert code == 2 and "non-bijective" in err


def test_usage_errors(sf3_file):
    assert invoke("validate")[0] == 2
    assert invoke("validate", "--input", sf3_file, "--table", "[]")[0] == 2
    assert invoke("frobnicate")[0] == 2
    assert invoke("veronese", "--d", "1", "--input", sf3_file)[0] == 2
    assert invoke("validate", "--input", "/nonexistent/file.json")[0] == 2
    assert invoke("validate", "--table", "{")[0] == 2


def test_guard(sf3_file, monkeypatch):
    monkeypatch.setenv("YBX_GUARD_LIMIT", "10")
    code, _, err = invoke("orbits", "--length", "3", "--input", sf3_file)
    assert code == 3 and "guard" in err


def test_enumerate_bound():
    assert invoke("enumerate", "--n", "4")[0] == 3


def test_present(sf3_file):
    code, out, _ = invoke("present", "--input", sf3_file)
    assert out.splitlines()[1:] == ["x3*x2 - x1*x3", "x3*x1 - x2*x3", "x2*x1 - x1*x2"]


def test_orbits(perm2_file):
    code, out, _ = invoke("orbits", "--length", "2", "--input", perm2_file, "--format", "json")
    doc = json.loads(out)
    assert doc["normal_monomials"] == [[1, 1], [1, 2], [2, 1]]
    assert {"min": [1, 1], "members": [[1, 1], [2, 2]]} in doc["orbits"]


def test_groebner(perm2_file):
    code, out, _ = invoke("groebner", "--max-degree", "4", "--input", perm2_file)
    assert code == 0
    assert out.splitlines()[1:3] == ["x2*x2 -> x1*x1", "x2*x1*x1 -> x1*x1*x2"]
    doc = json.loads(invoke("groebner", "--max-degree", "4", "--input", perm2_file, "--format", "json")[1])
    assert doc["complete_up_to"] == 4 and doc["rules"][1] == {"lhs": [2, 1, 1], "rhs": [1, 1, 2]}


def test_pbw(sf3_file, perm2_file):
    doc = json.loads(invoke("pbw", "--search", "--input", sf3_file, "--format", "json")[1])
    assert doc["pbw"] and doc["binomial_skew_polynomial"] and doc["search"] == [1, 2, 3]
    doc = json.loads(invoke("pbw", "--search", "--input", perm2_file, "--format", "json")[1])
    assert not doc["pbw"] and doc["search"] is None
    assert not doc["normal_basis_gate"]["applicable"]


def test_veronese(sf3_file):
    code, out, _ = invoke("veronese", "--d", "2", "--input", sf3_file, "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["N"] == 6
    assert len(doc["R_a"]) == 15 and len(doc["R_b"]) == 6 and len(doc["kernel"]) == 6
    assert doc["cardinalities"]["ok"]
    code, out, _ = invoke("veronese", "--d", "2", "--input", sf3_file)
    assert "w6*w1 - w1*w6" in out and "y3*y1 - y2*y5" in out


def test_kernel(perm2_file):
    code, out, _ = invoke("kernel", "--d", "2", "--input", perm2_file)
    assert code == 0 and out.splitlines()[1:] == ["y2*y3 - y1*y1"]


def test_check_catalog(catalog, tmp_path):
    for k, s in enumerate(catalog):
        p = tmp_path / f"s{k}.json"
        p.write_bytes(serialize(s))
        for d in ("2", "3"):
            code, out, _ = invoke("check", "--d", d, "--input", str(p))
            assert code == 0, out


def test_enumerate():
    code, out, _ = invoke("enumerate", "--n", "2", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["count"] == 2


def test_json_byte_stable(sf3_file):
    a = invoke("veronese", "--d", "2", "--input", sf3_file, "--format", "json")[1]
    b = invoke("veronese", "--d", "2", "--input", sf3_file, "--format", "json")[1]
    assert a == b


def test_console_script(sf3_file):
    out = subprocess.run(
        [sys.executable, "-m", "ybveronese.cli", "kernel", "--d", "2", "--input", sf3_file],
        capture_output=True, text=True,
    )
    assert out.returncode == 0 and "y2*y2 - y1*y4" in out.stdout
