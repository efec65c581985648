import json
import math
import pathlib
import xml.etree.ElementTree as ET

import pytest

from tripatrol.cli import dumps, main
from make_goldens import EQ, EQ_SCHEDULE, RI_SCHEDULE, invocations

GOLDEN = pathlib.Path(__file__).resolve().parent / "golden"


def run_cli(args, capsys, monkeypatch, tmp_path):
    monkeypatch.chdir(tmp_path)
    code = main(args)
    out = capsys.readouterr().out
    return code, out


@pytest.fixture
def sched_files(tmp_path):
    eq = tmp_path / "eq_schedule.json"
    ri = tmp_path / "ri_schedule.json"
    eq.write_text(json.dumps(EQ_SCHEDULE))
    ri.write_text(json.dumps(RI_SCHEDULE))
    return str(eq), str(ri)


@pytest.mark.parametrize("name", sorted(invocations("EQ", "RI")))
def test_golden_outputs(name, capsys, monkeypatch, tmp_path, sched_files):
    args = invocations(*sched_files)[name]
    want_out = (GOLDEN / f"{name}.out").read_text()
    want_code = int((GOLDEN / f"{name}.exit").read_text())
    code, out = run_cli(args, capsys, monkeypatch, tmp_path)
    assert code == want_code
    assert out == want_out
    # Byte-identical rerun.
    code2, out2 = run_cli(args, capsys, monkeypatch, tmp_path)
    assert code2 == code and out2 == out
    svg_golden = GOLDEN / f"{name}.svg"
    if svg_golden.exists():
        produced = (tmp_path / "out.svg").read_bytes()
        assert produced == svg_golden.read_bytes()


def test_svg_is_valid_xml_with_expected_elements(capsys, monkeypatch, tmp_path):
    code, _ = run_cli(
        ["channel", *EQ, "--lambda", "0.7", "--render", "out.svg"],
        capsys,
        monkeypatch,
        tmp_path,
    )
    assert code == 0
    root = ET.parse(tmp_path / "out.svg").getroot()
    ns = "{http://www.w3.org/2000/svg}"
    polys = root.findall(f".//{ns}polygon")
    lines = root.findall(f".//{ns}line")
    plines = root.findall(f".//{ns}polyline")
    assert len(polys) == 6
    assert len(lines) == 3
    assert len(plines) == 1


def test_report_floats_round_trip(capsys, monkeypatch, tmp_path):
    code, out = run_cli(["orthic", *EQ], capsys, monkeypatch, tmp_path)
    assert code == 0
    doc = json.loads(out)
    per = doc["results"]["perimeter_formula"]
    assert json.loads(dumps(doc)) == doc
    assert per == pytest.approx(1.5, rel=1e-12)


def test_exit_code_2_on_domain_errors(capsys, monkeypatch, tmp_path):
    code, out = run_cli(
        ["orthic", "--vertices", "0,0", "1,0", "0.5,0.1"], capsys, monkeypatch, tmp_path
    )
    assert code == 2
    assert json.loads(out)["error"] == "NotAcute"
    code, out = run_cli(["channel", *EQ, "--lambda", "1.5"], capsys, monkeypatch, tmp_path)
    assert code == 2
    assert json.loads(out)["error"] == "OutsideChannel"
    code, out = run_cli(
        ["orthic", "--vertices", "0,0", "1,0", "oops"], capsys, monkeypatch, tmp_path
    )
    assert code == 2


def test_exit_code_3_on_infeasible_schedule(capsys, monkeypatch, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text(
        json.dumps(
            {
                "triangle": [[0, 0], [1, 0], [0.5, 0.8660254037844386]],
                "generator": [
                    {"edge": "A", "u": 0.5},
                    {"edge": "A", "u": 0.2},
                    {"edge": "C", "u": 0.5},
                ],
            }
        )
    )
    code, out = run_cli(["gap", "--schedule", str(bad)], capsys, monkeypatch, tmp_path)
    assert code == 3
    assert json.loads(out)["error"] == "InfeasibleSchedule"


def test_exit_code_2_on_schema_violation(capsys, monkeypatch, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"triangle": [[0, 0], [1, 0]], "generator": []}))
    code, out = run_cli(["gap", "--schedule", str(bad)], capsys, monkeypatch, tmp_path)
    assert code == 2
    bad.write_text("{not json")
    code, _ = run_cli(["gap", "--schedule", str(bad)], capsys, monkeypatch, tmp_path)
    assert code == 2


def test_env_var_overrides_tolerance(capsys, monkeypatch, tmp_path):
    monkeypatch.setenv("TRIPATROL_REL_TOL", "1e-7")
    code, out = run_cli(["orthic", *EQ], capsys, monkeypatch, tmp_path)
    assert code == 0
    assert json.loads(out)["tolerances"]["rel_tol"] == 1e-7
    monkeypatch.setenv("TRIPATROL_REL_TOL", "banana")
    code, out = run_cli(["orthic", *EQ], capsys, monkeypatch, tmp_path)
    assert code == 2


def test_gap_cross_checks_triangle_spec(capsys, monkeypatch, tmp_path, sched_files):
    eq_sched, _ = sched_files
    code, _ = run_cli(
        ["gap", "--schedule", eq_sched, *EQ], capsys, monkeypatch, tmp_path
    )
    assert code == 0
    code, out = run_cli(
        ["gap", "--schedule", eq_sched, "--vertices", "0,0", "2,0", "1,1.7"],
        capsys,
        monkeypatch,
        tmp_path,
    )
    assert code == 2


def test_greedy_not_converged_reports_observed_gaps(capsys, monkeypatch, tmp_path):
    code, out = run_cli(
        ["greedy", *EQ, "--start", "0.0", "--cycles", "1"], capsys, monkeypatch, tmp_path
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["results"]["converged"] is False
    assert "observed_gap1" in doc["results"]
    # One cycle revisits BC once, so only edge A has an observed 1-gap.
    assert list(doc["results"]["observed_gap1"]["per_edge_sup"]) == ["A"]


def test_angle_and_vertex_specs_agree(capsys, monkeypatch, tmp_path):
    code1, out1 = run_cli(
        ["orthic", "--angles-rad", str(math.pi / 3), str(math.pi / 3)],
        capsys,
        monkeypatch,
        tmp_path,
    )
    code2, out2 = run_cli(["orthic", *EQ], capsys, monkeypatch, tmp_path)
    assert code1 == code2 == 0
    p1 = json.loads(out1)["results"]["perimeter_formula"]
    p2 = json.loads(out2)["results"]["perimeter_formula"]
    assert p1 == pytest.approx(p2, rel=1e-9)
