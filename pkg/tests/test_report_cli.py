import json
import subprocess
import sys

import pytest

from eucideal.report_cli import (CSV_HEADER, TABLE2_ROWS, build_report, emit,
                                 parse_reports, poly_to_tex, search_grid,
                                 table2)


def run_cli(*args, **kw):
    return subprocess.run([sys.executable, "-m", "eucideal", *args],
                          capture_output=True, text=True, **kw)


# ------------------------------------------------------------- build_report

def test_build_report_eligible():
    r = build_report("biquadratic", 29, 37, 41)
    assert r.eligible and (r.h_K, r.h_K_source) == (2, "computed-kuroda")
    assert (r.s, r.u, r.ell) == (13, 87999, 703888)
    assert r.diagnostics == ()


def test_build_report_ineligible():
    r = build_report("biquadratic", 29, 37, 53)
    assert not r.eligible and r.h_K == 16
    assert r.s is None and r.u is None and r.ell is None
    assert any("16" in d for d in r.diagnostics)


def test_build_report_cyclic_fixture_source():
    r = build_report("cyclic", 17, 89, 8)
    assert (r.h_K, r.h_K_source, r.eligible) == (26, "fixture", False)


def test_build_report_unknown_family():
    with pytest.raises(ValueError):
        build_report("cubic", 29, 37, 41)


# ---------------------------------------------------------------- emitters

def test_emit_csv_golden_fragment():
    blob = emit([build_report("biquadratic", 29, 37, 41)], "csv").decode()
    header, row, trailer = blob.split("\n")
    assert header == CSV_HEADER
    assert trailer == ""
    assert ",2,computed-kuroda,true,2214144;0;-3092;0;1," in row
    assert row.endswith(",13,87999")
    assert row.startswith("biquadratic,29,37,41,43993,1935384049,")


def test_emit_csv_empty():
    assert emit([], "csv").decode() == CSV_HEADER + "\n"


def test_emit_json_and_round_trip():
    reports = [build_report("cyclic", 17, 41, 4), build_report("cyclic", 17, 89, 8)]
    blob = emit(reports, "json")
    payload = json.loads(blob)
    assert payload[0]["s"] == 5 and payload[0]["u"] == 1399
    assert payload[1]["s"] is None
    assert parse_reports(blob) == reports


def test_emit_latex():
    blob = emit([build_report("biquadratic", 29, 37, 41)], "latex").decode()
    assert "$(29, 37, 41)$ & $2$ &" in blob
    assert "x^{4}-3092x^{2}+2214144" in blob
    assert "$(13, 87999)$" in blob


def test_emit_unknown_format():
    with pytest.raises(ValueError):
        emit([], "yaml")


def test_poly_to_tex():
    assert poly_to_tex((2214144, 0, -3092, 0, 1), "x") == "x^{4}-3092x^{2}+2214144"
    assert poly_to_tex((0, 1), "x") == "x"
    assert poly_to_tex((-1, 1), "x") == "x-1"
    assert poly_to_tex((0,), "x") == "0"


# ------------------------------------------------------------------ search

def test_search_grid_empty_range():
    assert search_grid("biquadratic",
                       {"q_min": 30, "q_max": 30, "kr_min": 29, "kr_max": 41}) == []


def test_search_grid_worker_count_is_invisible():
    ranges = {"q_min": 29, "q_max": 29, "kr_min": 29, "kr_max": 60}
    serial = search_grid("biquadratic", ranges, workers=1)
    parallel = search_grid("biquadratic", ranges, workers=2)
    assert emit(serial, "csv") == emit(parallel, "csv")
    assert [r.eligible for r in serial].count(True) >= 1


def test_table2_presentation_order():
    reports = table2()
    assert len(reports) == len(TABLE2_ROWS) == 38
    assert [(r.q, r.k, r.third) for r in reports] == list(TABLE2_ROWS)
    assert (reports[0].q, reports[0].k, reports[0].third) == (17, 41, 4)


# ------------------------------------------------------------ command line

def test_cli_check_biquadratic():
    proc = run_cli("check", "biq", "--q", "29", "--k", "37", "--r", "41")
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[0] == CSV_HEADER
    assert ",13,87999" in proc.stdout and "computed-kuroda" in proc.stdout


def test_cli_check_rejects_bad_parameters():
    proc = run_cli("check", "biq", "--q", "13", "--k", "37", "--r", "41")
    assert proc.returncode == 2
    assert "below 29" in proc.stderr


def test_cli_check_unknown_class_number():
    proc = run_cli("check", "cyc", "--q", "17", "--k", "137", "--b", "4")
    assert proc.returncode == 3
    assert "no fixture entry" in proc.stderr


def test_cli_check_json_format():
    proc = run_cli("check", "cyc", "--q", "17", "--k", "41", "--b", "4",
                   "--format", "json")
    assert proc.returncode == 0
    payload = json.loads(proc.stdout)
    assert payload[0]["s"] == 5 and payload[0]["u"] == 1399


def test_cli_witness():
    proc = run_cli("witness", "cyc", "--q", "17", "--k", "41", "--b", "4")
    assert proc.returncode == 0
    lines = proc.stdout.splitlines()
    assert lines[:3] == ["s = 5", "u = 1399", "ell = 11152"]
    assert lines[3:] == ["condition (%d): pass" % i for i in (1, 2, 3)]


def test_cli_motzkin():
    proc = run_cli("motzkin", "--c", "1", "--n-max", "16", "--level-cap", "6",
                   "--samples", "100")
    assert proc.returncode == 0
    assert "16\t4" in proc.stdout.splitlines()
    assert "# assigned: 16 of 16" in proc.stderr


def test_cli_motzkin_above_cap():
    proc = run_cli("motzkin", "--c", "1", "--n-max", "20", "--level-cap", "3",
                   "--samples", "50")
    assert proc.returncode == 0
    assert "16\tabove-level-cap" in proc.stdout.splitlines()


def test_cli_table2_latex():
    proc = run_cli("table2", "--format", "latex")
    assert proc.returncode == 0
    assert "$(17, 41, 4)$ & $2$ &" in proc.stdout
    assert proc.stdout.count("\\\\") >= 2 * 38


def test_cli_output_file(tmp_path):
    out = tmp_path / "row.csv"
    proc = run_cli("check", "biq", "--q", "29", "--k", "37", "--r", "41",
                   "--output", str(out))
    assert proc.returncode == 0 and proc.stdout == ""
    assert out.read_text().startswith(CSV_HEADER)


def test_cli_figures(tmp_path):
    figdir = tmp_path / "figs"
    proc = run_cli("check", "biq", "--q", "29", "--k", "37", "--r", "41",
                   "--figures", str(figdir))
    assert proc.returncode == 0
    assert (figdir / "check_class_numbers.png").stat().st_size > 0
    assert (figdir / "check_witnesses.png").stat().st_size > 0
    assert proc.stderr.count("wrote figure") == 2


def test_cli_config(tmp_path):
    cfg = tmp_path / "cfg"
    cfg.write_text("# sweep settings\nworkers = 2\nsearch_bound = 500000\n")
    proc = run_cli("--config", str(cfg), "check", "biq",
                   "--q", "29", "--k", "37", "--r", "41")
    assert proc.returncode == 0 and ",13,87999" in proc.stdout


def test_cli_config_rejects_unknown_key(tmp_path):
    cfg = tmp_path / "cfg"
    cfg.write_text("threads = 2\n")
    proc = run_cli("--config", str(cfg), "table2")
    assert proc.returncode == 2
    assert "unknown config key" in proc.stderr


def test_cli_rejects_unknown_format():
    proc = run_cli("table2", "--format", "yaml")
    assert proc.returncode == 2
