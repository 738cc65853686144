import csv
import io
import json
import subprocess
import sys

import pytest

from altperm import cli
from altperm.laurent import Q, from_records, to_records


def call(argv):
    out = io.StringIO()
    code = cli.run(argv, stdout=out)
    return code, out.getvalue()


def call_json(argv):
    code, text = call([*argv, "--format", "json"])
    return code, json.loads(text), text


def test_single_both_json():
    code, recs, _ = call_json("dist single --class ud --length 4 --stat rlmax --method both".split())
    assert code == 0
    (rec,) = recs
    assert rec["result"] == [{"e_q": 1, "c": "2"}, {"e_q": 2, "c": "3"}]
    assert rec["status"] == "verified-agree"
    assert rec["methods"] == ["brute", "gf"]
    assert rec["command"] == "dist single"
    assert rec["params"]["length"] == 4


def test_json_polynomials_round_trip_byte_identical():
    _, recs, text = call_json("dist joint-maxmin --class du --length 5 --method all".split())
    rebuilt = [dict(r, result=to_records(from_records(r["result"]), ("p", "q"))) for r in recs]
    assert json.dumps(rebuilt, indent=2) + "\n" == text


def test_springer_csv():
    code, text = call("springer --max-half-n 6 --format csv".split())
    assert code == 0
    assert "\r" not in text
    rows = list(csv.DictReader(io.StringIO(text)))
    assert [r["result"] for r in rows] == ["1", "1", "3", "11", "57", "361", "2763"]
    assert [r["length"] for r in rows] == ["0", "2", "4", "6", "8", "10", "12"]


def test_springer_all_methods_agree():
    code, recs, _ = call_json("springer --max-half-n 4 --method all".split())
    assert code == 0
    assert {r["status"] for r in recs} == {"verified-agree"}


def test_pop_count_both():
    code, text = call("pop count --variant lambda --k 3 --class du --length 4 --method both".split())
    assert code == 0
    line = text.splitlines()[1]
    assert line.split()[-2:] == ["2", "verified-agree"]


def test_pop_dist_json():
    code, recs, _ = call_json("pop dist --k 3 --length 3 --method both".split())
    assert code == 0
    assert recs[0]["result"] == [{"e_q": 0, "c": "4"}, {"e_q": 1, "c": "2"}]


def test_q_analogue_and_q_deformed_series():
    code, recs, _ = call_json("springer --q-analog lle --max-half-n 4 --method both".split())
    assert code == 0
    assert from_records(recs[-1]["result"]) == 11 + 18 * Q + 12 * Q**2 + 16 * Q**3
    code, recs, _ = call_json("springer --section7 2 --order 4".split())
    assert from_records(recs[4]["result"]) == 5 + 36 * Q**2 + 16 * Q**4


def test_series_show():
    code, recs, _ = call_json("series show --name euler --order 8 --egf".split())
    assert code == 0
    assert [r["result"][0]["c"] if r["result"] else "0" for r in recs] == ["1", "1", "1", "2", "5", "16", "61", "272", "1385"]
    code, recs, _ = call_json("series show --name sec --order 4".split())
    assert recs[4]["result"] == [{"e_p": 0, "e_q": 0, "c": "5/24"}]


def test_table_output_is_default():
    code, text = call("dist joint-mmp --class du --length 3".split())
    assert code == 0
    assert "p*q^2 + p^2*q" in text
    assert "single-method" in text


@pytest.mark.parametrize(
    "argv",
    [
        "frobnicate",
        "dist single --class xy --length 4",
        "dist single --class ud --length 4 --method rec",
        "pop count --k 2 --length 4",
        "springer --section7 9",
        "dist single --class ud --length 0",
    ],
)
def test_usage_errors_exit_1(argv, capsys):
    with pytest.raises(SystemExit) as info:
        code = cli.run(argv.split())
        raise SystemExit(code)
    assert info.value.code == 1
    assert "usage" in capsys.readouterr().err


def test_brute_length_guard(capsys):
    code, _ = call("dist single --class ud --length 14 --method brute".split())
    assert code == 1
    assert "--force" in capsys.readouterr().err


def test_order_cap(monkeypatch, capsys):
    code, _ = call("series show --name sec --order 16".split())
    assert code == 1
    assert "ALTPERM_MAX_ORDER" in capsys.readouterr().err
    monkeypatch.setenv("ALTPERM_MAX_ORDER", "16")
    code, _ = call("series show --name sec --order 16".split())
    assert code == 0


def test_mismatch_exits_2(monkeypatch, capsys):
    monkeypatch.setattr(cli.dist, "gf_single_for", lambda n, cls, kind: Q)
    code, recs, _ = call_json("dist single --class ud --length 4 --method all".split())
    assert code == 2
    assert recs[0]["status"] == "MISMATCH"
    assert recs[0]["by_method"]["gf"] == [{"e_q": 1, "c": "1"}]
    assert "MISMATCH" in capsys.readouterr().err


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "altperm", "springer", "--max-half-n", "3", "--format", "csv"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    rows = list(csv.DictReader(io.StringIO(proc.stdout)))
    assert rows[-1]["result"] == "11"


def test_force_lifts_guard_with_warning(capsys):
    cli.check_brute(["brute", "gf"], 14, force=True)
    assert "warning" in capsys.readouterr().err
    cli.check_brute(["gf"], 20, force=False)  # no brute requested, nothing to guard
