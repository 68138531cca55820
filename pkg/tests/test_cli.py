import json
import subprocess
import sys
import xml.etree.ElementTree as ET
from pathlib import Path

import pytest

from dommove.cli import main
from dommove.data import fixture_path

GOLDEN = Path(__file__).parent / "golden"


def fx(name):
    return str(fixture_path(name))


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_counterexample_needs_oracle(capsys):
    code, out, err = run(capsys, "dom", fx("counterexample_P.txt"), fx("counterexample_Q.txt"))
    assert code == 3 and out == ""
    assert "no known efficient algorithm" in err and "--oracle" in err


@pytest.mark.parametrize("argv", [("dom", "--oracle"), ("oracle",)])
def test_counterexample_with_oracle(capsys, argv):
    code, out, _ = run(capsys, *argv, fx("counterexample_P.txt"), fx("counterexample_Q.txt"))
    assert code == 0 and out == "1.5\n"


def test_self_comparison_is_zero(capsys):
    assert run(capsys, "dom", fx("worked_P.txt"), fx("worked_P.txt"))[1] == "0\n"


def test_convergence_pair(capsys):
    assert run(capsys, "dom", fx("convergence_A.txt"), fx("convergence_B.txt"))[1] == "0.16\n"
    assert run(capsys, "dom", fx("convergence_B.txt"), fx("convergence_A.txt"))[1] == "0.32\n"


def test_trace_output(capsys):
    code, out, _ = run(capsys, "dom", "--trace", fx("worked_P.txt"), fx("worked_Q.txt"))
    assert code == 0
    assert out.splitlines() == [
        "8",
        "merge q2 + q3 -> (11, 3)",
        "merge q2 + q4 -> (11, 1)",
        "group p4: q1 q2 q3 q4  move=8",
    ]


def test_dom_json(capsys):
    code, out, _ = run(capsys, "dom", "--json", "--trace", fx("worked_P.txt"), fx("worked_Q.txt"))
    doc = json.loads(out)
    assert list(doc)[:3] == ["schema", "command", "method"]
    assert doc["schema"] == "dommove/1" and doc["value"] == 8.0
    assert doc["partition"] == [{"anchor": 4, "members": [1, 2, 3, 4], "move": 8.0}]
    assert [e["ideal"] for e in doc["trace"]] == [[11.0, 3.0], [11.0, 1.0]]


def test_compare_identical(capsys):
    code, out, _ = run(capsys, "compare", "--json", fx("worked_Q.txt"), fx("worked_Q.txt"))
    doc = json.loads(out)
    assert doc["relation"] == "equal"
    assert doc["dom_pq"] == doc["dom_qp"] == doc["eps_pq"] == doc["eps_qp"] == 0.0
    assert "hv_p" not in doc


def test_compare_cardinality_pair(capsys, tmp_path):
    assert run(capsys, "gen", "cardinality", "--out", str(tmp_path))[0] == 0
    code, out, _ = run(capsys, "compare", "--json", str(tmp_path / "B.txt"), str(tmp_path / "A.txt"))
    doc = json.loads(out)
    assert doc["relation"] == "P_better"
    assert doc["dom_pq"] == 0.0 and doc["dom_qp"] > 0


def test_compare_ten_objectives(capsys):
    code, out, _ = run(capsys, "compare", "--oracle", fx("eps10_p.txt"), fx("eps10_q.txt"))
    assert code == 0
    assert out.splitlines() == [
        "relation  incomparable",
        "D(P,Q)    1",
        "D(Q,P)    9",
        "eps(P,Q)  1",
        "eps(Q,P)  1",
    ]


def test_compare_with_reference(capsys):
    code, out, _ = run(capsys, "compare", "--ref", "10,10", fx("staircase.txt"), fx("staircase.txt"))
    assert code == 0 and "HV(P)     52\n" in out
    code, _, err = run(capsys, "compare", "--oracle", "--ref", "2,2", fx("eps10_p.txt"), fx("eps10_q.txt"))
    assert code == 3


def test_eps(capsys):
    assert run(capsys, "eps", fx("eps10_p.txt"), fx("eps10_q.txt"))[1] == "1\n"
    code, out, _ = run(capsys, "eps", "--multiplicative", "--json", fx("worked_P.txt"), fx("worked_P.txt"))
    assert json.loads(out)["value"] == 1.0 and json.loads(out)["kind"] == "multiplicative"


def test_hv(capsys, tmp_path):
    f = tmp_path / "o.txt"
    f.write_text("0 0\n")
    assert run(capsys, "hv", str(f), "--ref", "1,1")[1] == "1\n"
    assert run(capsys, "hv", fx("staircase.txt"), "--ref", "10,10")[1] == "52\n"
    assert run(capsys, "hv", fx("counterexample_P.txt"), "--ref", "5,5,5")[0] == 3
    assert run(capsys, "hv", str(f), "--ref", "1,1,1")[0] == 2


def test_negate(capsys, tmp_path):
    f = tmp_path / "max.txt"
    f.write_text("1 1\n")
    assert run(capsys, "hv", "--negate", str(f), "--ref", "0,0")[1] == "1\n"


def test_filter(capsys, tmp_path):
    f = tmp_path / "s.txt"
    f.write_text("f1 f2\n1 3\n2 2\n3 3\n3 1\n1 3\n")
    assert run(capsys, "filter", str(f))[1] == "1.0 3.0\n2.0 2.0\n3.0 1.0\n"
    out = tmp_path / "o.txt"
    assert run(capsys, "filter", str(f), "-o", str(out))[0] == 0
    assert out.read_text() == "1.0 3.0\n2.0 2.0\n3.0 1.0\n"


def test_gen_convergence_then_dom(capsys, tmp_path):
    assert run(capsys, "gen", "convergence", "--points", "8", "--out", str(tmp_path))[0] == 0
    meta = json.loads((tmp_path / "meta.json").read_text())
    assert meta["generator"] == "convergence"
    assert meta["parameters"] == {"points": 8, "d1": 0.02, "d2": 0.04}
    assert meta["expected"] == "D(A,B) < D(B,A)"
    A, B = str(tmp_path / "A.txt"), str(tmp_path / "B.txt")
    assert run(capsys, "dom", A, B)[1] == "0.16\n"
    assert run(capsys, "dom", B, A)[1] == "0.32\n"


def test_gen_records_seed(capsys, tmp_path):
    run(capsys, "gen", "uniformity", "--seed", "7", "--out", str(tmp_path))
    meta = json.loads((tmp_path / "meta.json").read_text())
    assert meta["seed"] == 7 and meta["parameters"]["mode"] == "random"


def test_gen_unknown(capsys):
    code, _, err = run(capsys, "gen", "nope")
    assert code == 2 and "unknown generator" in err


def test_plot_golden(capsys, tmp_path):
    out = tmp_path / "p.svg"
    assert run(capsys, "plot", fx("convergence_A.txt"), fx("convergence_B.txt"), "-o", str(out))[0] == 0
    assert out.read_bytes() == (GOLDEN / "convergence.svg").read_bytes()
    root = ET.parse(out).getroot()
    assert root.tag.endswith("svg") and root.get("version") == "1.1"
    assert len(root.findall(".//{http://www.w3.org/2000/svg}circle")) == 8 + 1


def test_plot_needs_two_objectives(capsys, tmp_path):
    code, _, err = run(capsys, "plot", fx("eps10_p.txt"), fx("eps10_q.txt"), "-o", str(tmp_path / "x.svg"))
    assert code == 3


def test_input_errors(capsys, tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("1 2\n3 x\n")
    code, _, err = run(capsys, "dom", str(bad), str(bad))
    assert code == 2 and "bad.txt:2" in err
    assert run(capsys, "dom", str(tmp_path / "missing.txt"), fx("worked_P.txt"))[0] == 2
    assert run(capsys, "dom", fx("worked_P.txt"), fx("eps10_p.txt"))[0] == 2


def test_budget_exit_code(capsys, monkeypatch):
    monkeypatch.setenv("DOMMOVE_ORACLE_BUDGET", "3")
    code, _, err = run(capsys, "oracle", fx("counterexample_P.txt"), fx("counterexample_Q.txt"))
    assert code == 4 and "too large" in err


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "dommove", "dom", fx("convergence_A.txt"), fx("convergence_B.txt")],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0 and proc.stdout == "0.16\n"
