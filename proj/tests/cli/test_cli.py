"""End-to-end checks of the orelab command line.

Run from the repository root with ORELAB pointing at the built binary.
"""
import json
import os
import pathlib
import subprocess

import jsonschema
import pytest

ROOT = pathlib.Path(__file__).resolve().parents[2]
ORELAB = os.environ.get("ORELAB", str(ROOT / "build" / "tools" / "orelab"))
CORPUS = sorted((ROOT / "corpus").glob("*.ring"))


def schema(name):
    return json.loads((ROOT / "schema" / name).read_text())


def run(*args, check_code=None):
    proc = subprocess.run([ORELAB, *map(str, args)], capture_output=True, text=True, timeout=600)
    if check_code is not None:
        assert proc.returncode == check_code, proc.stdout + proc.stderr
    return proc


@pytest.mark.parametrize("ring", CORPUS, ids=lambda p: p.stem)
def test_analyze_validates_and_is_deterministic(ring):
    first = run("analyze", ring, "--side", "both", "--max-enum", 64, check_code=0).stdout
    second = run("analyze", ring, "--side", "both", "--max-enum", 64, check_code=0).stdout
    assert first == second
    report = json.loads(first)
    jsonschema.validate(report, schema("analysis_report.schema.json"))
    assert report["verification"]["oracle_agreement"] is True


@pytest.mark.parametrize("ring", CORPUS, ids=lambda p: p.stem)
def test_verify_passes(ring):
    out = run("verify", ring, "--max-enum", 64, "--out", "json", check_code=0).stdout
    report = json.loads(out)
    jsonschema.validate(report, schema("verification_report.schema.json"))
    assert report["passed"] and report["certifying"]


def test_two_sided_and_lattice_validate():
    out = run("analyze", ROOT / "corpus" / "t2f2.ring", "--side", "two", "--lattice", check_code=0).stdout
    report = json.loads(out)
    jsonschema.validate(report, schema("analysis_report.schema.json"))
    assert report["den0_lattice"]["laws_hold"]


def test_sampled_analysis_is_seeded():
    ring = ROOT / "corpus" / "z12.ring"
    a = run("analyze", ring, "--max-enum", 4, "--seed", 7, check_code=0).stdout
    b = run("analyze", ring, "--max-enum", 4, "--seed", 7, check_code=0).stdout
    assert a == b
    report = json.loads(a)
    jsonschema.validate(report, schema("analysis_report.schema.json"))
    assert report["verification"]["certifying"] is False


def test_z6_max_den():
    report = json.loads(run("analyze", ROOT / "corpus" / "z6.ring", "--side", "both", "--out", "json").stdout)
    for side in ("left", "right"):
        assert report["sides"][side]["max_den"] == [[1, 3, 5], [1, 2, 4, 5]]
        assert report["sides"][side]["ass"] == [[0], [0, 2, 4], [0, 3]]


def test_m2f2_ass():
    report = json.loads(run("analyze", ROOT / "corpus" / "m2f2.ring", check_code=0).stdout)
    assert report["sides"]["left"]["ass"] == [[0]]


def test_malformed_table_names_axiom(tmp_path):
    bad = tmp_path / "bad.ring"
    bad.write_text("table{elements=[a,b]; add=[[a,b],[b,a]]; mul=[[a,a],[a,a]]; one=b; zero=a}\n")
    proc = run("analyze", bad, check_code=2)
    assert "multiplicative identity" in proc.stderr


def test_parse_error_reports_position(tmp_path):
    bad = tmp_path / "bad.ring"
    bad.write_text("zmod(6\n")
    proc = run("analyze", bad, check_code=2)
    assert "parse error" in proc.stderr and "position 6" in proc.stderr


def test_budget_refusal():
    run("analyze", ROOT / "corpus" / "t2z4.ring", "--max-enum", 64, "--lattice", check_code=3)
    run("golden", ROOT / "corpus" / "z12.ring", "--max-enum", 4, check_code=3)


def test_injected_join_fault_fails_with_witness():
    proc = run("verify", ROOT / "corpus" / "z6.ring", "--inject-fault", "join", check_code=1)
    assert "FAIL join_theorem" in proc.stdout


def test_golden_files_reproduce():
    for g in sorted((ROOT / "golden").glob("*.golden")):
        out = run("golden", ROOT / "corpus" / (g.stem + ".ring"), "--max-enum", 36, check_code=0).stdout
        assert out == g.read_text(), g.name


@pytest.mark.parametrize(
    "args, expected",
    [
        (["normalize", "I*D"], "1 - e(0,0)"),
        (["fredholm", "D"], "ker=1 coker=0 index=1"),
        (["fredholm", "I"], "ker=0 coker=1 index=-1"),
        (["fredholm", "e(0,0)"], "ker=inf coker=inf index=undefined"),
        (["member", "H", "--set", "S0"], "true"),
        (["member", "H - 1", "--set", "S0"], "false"),
        (["member", "H - 1 + e(0,0)", "--set", "S0"], "true"),
        (["member", "D", "--set", "Sr0"], "false"),
        (["star", "D*e(1,2)"], "e(2,0)"),
    ],
)
def test_i1_examples(args, expected):
    assert run("i1", *args, check_code=0).stdout.strip() == expected


def test_i1_ore_prints_verified_identity():
    out = run("i1", "ore", "D", "H", check_code=0).stdout
    assert out.strip().splitlines()[-1] == "u*D == v*H : true"


def test_i1_error_exit_codes():
    run("i1", "normalize", "D^-1", check_code=2)
    run("i1", "normalize", "D*(H", check_code=2)
    run("i1", "factor", "D", check_code=4)
    run("i1", "ore", "0", "H", check_code=4)
