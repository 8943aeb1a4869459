import json
import subprocess
import sys

import pytest

from polysect.errors import ResourceLimit, UnknownId, UnknownSuite
from polysect.report import (
    COUNTEREXAMPLE_IDS,
    Report,
    SuiteConfig,
    SUITE_IDS,
    counterexample,
    emit,
    run_suite,
)

_FAST = SuiteConfig(directions=40)


def test_unknown_suite():
    with pytest.raises(UnknownSuite):
        run_suite("unknown-id")


def test_unknown_counterexample():
    with pytest.raises(UnknownId):
        counterexample("nope")


def test_resource_limits():
    with pytest.raises(ResourceLimit):
        run_suite("thm1", (3, 13), _FAST)
    with pytest.raises(ResourceLimit):
        run_suite("prop44", (9, 9), _FAST)


def test_thm1_all_pass():
    rep = run_suite("thm1", (3, 4), _FAST)
    assert rep.all_passed
    assert rep.summary["failed"] == 0
    assert rep.seed == 42


def test_prop44_records_bounds_and_minimizer():
    rep = run_suite("prop44", (3, 4), _FAST)
    assert rep.all_passed
    lbs = [c for c in rep.cases if c.method == "exact-lb"]
    assert lbs and all(c.bound == pytest.approx(c.n / 17) for c in lbs)
    assert sum(1 for c in rep.cases if c.method == "minimizer") == 2


def test_thm3_n3_has_evidence_rows():
    rep = run_suite("thm3", (3, 3), _FAST)
    methods = {c.method for c in rep.cases}
    assert "evidence" in methods


def test_row_count_matches_samples():
    cfg = SuiteConfig(directions=25, spot_check_rate=0.0)
    rep = run_suite("thm4", (4, 4), cfg)
    assert len(rep.cases) == 25 * cfg.t_count


def test_report_determinism_and_roundtrip(tmp_path):
    a = run_suite("xpoly-volume", (3, 4), _FAST)
    b = run_suite("xpoly-volume", (3, 4), _FAST)
    assert a.to_csv() == b.to_csv()
    ja = json.loads(a.to_json())
    jb = json.loads(b.to_json())
    ja.pop("runtime_ms"), jb.pop("runtime_ms")
    assert ja == jb
    # lossless serialization round-trip
    back = Report.from_json(a.to_json())
    assert back.cases == a.cases
    assert back.suite == a.suite and back.seed == a.seed


def test_emit_files(tmp_path):
    rep = run_suite("prop1", (3, 3), _FAST)
    csv_path = tmp_path / "r.csv"
    json_path = tmp_path / "r.json"
    emit(rep, "csv", str(csv_path))
    emit(rep, "json", str(json_path))
    lines = csv_path.read_text().splitlines()
    assert lines[0] == "suite,body,n,t,a_canonical,method,value,bound,pass"
    assert len(lines) == len(rep.cases) + 1
    data = json.loads(json_path.read_text())
    assert set(data) == {"suite", "seed", "tol", "cases", "summary", "runtime_ms"}


def test_empty_report_csv():
    rep = Report(suite="x", seed=0, tol=0.0, cases=(), runtime_ms=0)
    assert rep.to_csv() == "suite,body,n,t,a_canonical,method,value,bound,pass\n"


def test_counterexamples_confirm():
    for cid in COUNTEREXAMPLE_IDS:
        rep = counterexample(cid)
        assert rep.all_passed, cid


def test_tilde_example_values():
    rep = counterexample("xpoly-explicit-tilde")
    by_method = {c.method: c for c in rep.cases}
    assert by_method["exact-lb"].value == pytest.approx(18 / 125, rel=1e-12)
    assert by_method["exact"].value == pytest.approx(81 / 625 * 2 / 3, rel=1e-12)


def _cli(*argv):
    return subprocess.run(
        [sys.executable, "-m", "polysect.cli", *argv],
        capture_output=True,
        text=True,
    )


def test_cli_eval():
    r = _cli("eval", "--body", "cube", "--n", "3", "--t", "0.8", "--method", "exact")
    assert r.returncode == 0
    assert r.stdout.startswith("volume = ")


def test_cli_exit_codes():
    assert _cli("eval", "--body", "cube").returncode == 2
    assert _cli("verify", "--suite", "bogus").returncode == 2
    assert _cli("counterexample", "--id", "bogus").returncode == 2
    ok = _cli(
        "verify", "--suite", "prop3", "--n-min", "3", "--n-max", "3", "--samples", "10"
    )
    assert ok.returncode == 0


def test_cli_byte_determinism(tmp_path):
    args = (
        "verify", "--suite", "thm4", "--n-min", "3", "--n-max", "3",
        "--samples", "30", "--seed", "7", "--format", "csv",
    )
    a = _cli(*args)
    b = _cli(*args)
    assert a.returncode == 0
    assert a.stdout == b.stdout


def test_cli_sweep_csv():
    r = _cli(
        "sweep", "--body", "simplex", "--n", "3", "--steps", "4",
        "--functional", "volume", "--method", "exact",
    )
    assert r.returncode == 0
    lines = r.stdout.splitlines()
    assert lines[0] == "t,volume"
    assert len(lines) == 5


def test_cli_plot(tmp_path):
    out = tmp_path / "rep.csv"
    png = tmp_path / "rep.png"
    r = _cli(
        "verify", "--suite", "thm1", "--n-min", "3", "--n-max", "3",
        "--samples", "20", "--format", "csv", "--out", str(out), "--plot", str(png),
    )
    assert r.returncode == 0
    assert out.exists() and png.stat().st_size > 0


def test_suite_ids_exposed():
    for sid in ("thm1", "thm2", "thm3", "thm4", "thm5", "prop32", "prop44"):
        assert sid in SUITE_IDS
