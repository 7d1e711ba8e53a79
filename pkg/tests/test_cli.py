import csv
import io
import json
import subprocess
import sys

import pytest

from gaussperiods.cli import ScanRecord, main, scan


def run(argv):
    out = io.StringIO()
    code = main(argv, out=out)
    return code, out.getvalue()


def run_subprocess(argv):
    return subprocess.run([sys.executable, "-m", "gaussperiods", *argv],
                          capture_output=True, text=True)


def test_classify():
    code, text = run(["classify", "--p", "2", "--n", "5"])
    assert code == 0
    assert json.loads(text.splitlines()[-1])["case"] == "PrimitiveRoot"
    assert json.loads(run(["classify", "--p", "2", "--n", "3"])[1].splitlines()[-1])["case"] == \
        "QuadraticResidue"
    d = json.loads(run(["classify", "--p", "2", "--n", "4"])[1].splitlines()[-1])
    assert d["case"] == "NotApplicable" and d["r"] == 9 and not d["r_is_prime"]


def test_order():
    code, text = run(["order", "--p", "2", "--n", "5"])
    d = json.loads(text)
    assert code == 0
    assert (d["L_n"], d["bound_P"], d["theorem_pass"]) == ("31", "2", True)
    d = json.loads(run(["order", "--p", "3", "--n", "2"])[1])
    assert (d["L_n"], d["bound_P"]) == ("8", "1")


@pytest.mark.parametrize("argv, code", [
    (["order", "--p", "2", "--n", "3"], 3),
    (["verify-distinct", "--p", "2", "--n", "3"], 3),
    (["order", "--p", "2", "--n", "26", "--budget", "1"], 4),
    (["order", "--p", "2", "--n", "14", "--budget", "1"], 0),
    (["classify", "--p", "4", "--n", "2"], 2),
    (["scan", "--n-max", "-1"], 2),
    (["bogus"], 2),
])
def test_exit_codes(argv, code):
    assert run_subprocess(argv).returncode == code


def test_scan_small():
    code, text = run(["scan", "--p", "2", "--n-max", "6"])
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(text)))
    assert [int(r["n"]) for r in rows] == [1, 2, 3, 5, 6]
    case_one = [int(r["n"]) for r in rows if r["case"] == "PrimitiveRoot"]
    assert case_one == [1, 2, 5, 6]
    qr = next(r for r in rows if r["n"] == "3")
    assert qr["case"] == "QuadraticResidue" and qr["L_n"] == ""


def test_scan_header_and_order():
    code, text = run(["scan", "--p", "7,2,5,3", "--n-max", "12", "--k", "2", "--format", "csv"])
    lines = text.splitlines()
    assert lines[0] == ",".join(ScanRecord.field_names())
    rows = list(csv.reader(io.StringIO(text)))[1:]
    keys = [(int(r[2]), int(r[3])) for r in rows]
    assert keys == sorted(keys)
    assert all('"' not in line for line in lines)
    assert {int(r[2]) for r in rows} == {2, 3, 4, 5, 7, 9, 25, 49}


def test_scan_empty():
    code, text = run(["scan", "--n-max", "0"])
    assert code == 0 and text == ""


def test_scan_parallel_matches_serial():
    serial = run(["scan", "--p", "2,3", "--n-max", "15", "--with-distinct"])[1]
    parallel = run(["scan", "--p", "2,3", "--n-max", "15", "--with-distinct", "--jobs", "3"])[1]
    assert serial == parallel


def test_scan_json_round_trip(tmp_path):
    path = tmp_path / "out.jsonl"
    code, _ = run(["scan", "--p", "2,5", "--n-max", "12", "--format", "json", "--with-distinct",
                   "--output", str(path)])
    assert code == 0
    lines = path.read_text().splitlines()
    assert lines
    for line in lines:
        d = json.loads(line)
        assert list(d) == ScanRecord.field_names()
        assert json.dumps(d) == line
        if d["case"] == "PrimitiveRoot":
            assert d["distinct_count"] == d["bound_P"]
            assert int(d["L_n"]) >= int(d["bound_P"])


def test_scan_timing_flag():
    recs = scan([2], 1, 5, timing=True)
    assert all(r.elapsed_ms is not None for r in recs)
    assert all(r.elapsed_ms is None for r in scan([2], 1, 5))


def test_scan_error_column():
    # 2**26 - 1 = 3 * 2731 * 8191 leaves a composite cofactor after trial division
    recs = scan([2], 1, 26, budget=1)
    bad = [r for r in recs if r.error]
    assert bad and all(r.error.startswith("ResourceExceeded") for r in bad)
    assert all("," not in r.error for r in bad)
    good = [r for r in recs if r.case == "PrimitiveRoot" and not r.error]
    assert good and all(r.theorem_pass for r in good)


def test_bound():
    d = json.loads(run(["bound", "--s", "4", "--v", "1", "--format", "json"])[1])
    assert (d["P"], d["Q"]) == ("2", "2")
    d = json.loads(run(["bound", "--s", "0", "--v", "1", "--format", "json"])[1])
    assert d["P"] == "1"
    d = json.loads(run(["bound", "--n", "1", "--ell", "2", "--format", "json"])[1])
    assert d["main_term"] == pytest.approx(6.1337, abs=1e-3)
    assert d["old_bound"] == pytest.approx(2.6651, abs=1e-3)
    d = json.loads(run(["bound", "--n", "1", "--ell", "inf", "--format", "json"])[1])
    assert d["main_term"] == pytest.approx(13.0019, abs=1e-3)
    code, text = run(["bound", "--s", "4", "--v", "1"])
    assert code == 0 and "P(4,1)" in text


def test_verify_distinct():
    d = json.loads(run(["verify-distinct", "--p", "2", "--n", "5"])[1])
    assert d == {"count": "2", "expected": "2", "truncated": False, "collisions": 0, "pass": True}
    d = json.loads(run(["verify-distinct", "--p", "2", "--n", "14"])[1])
    assert d["count"] == "18"
    d = json.loads(run(["verify-distinct", "--p", "3", "--n", "21", "--cap", "10"])[1])
    assert d["truncated"] and d["pass"] and d["count"] == "10"
