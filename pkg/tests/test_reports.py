"""Output writers for records, count tables, ratios and heuristics."""

import io
import json

import openpyxl
import pytest

import core.reports as reports
from core.dw import build_record
from core.heuristic import GOLDEN, expected_split, heuristic_estimate
from core.models import OutputFormat, PrimePower
from core.polysieve import table_rows
from core.reports import (
    classification_record,
    counts_frame,
    export_counts_xlsx,
    write_count_rows,
    write_heuristic,
    write_ratios,
    write_records,
)


ENTRIES = [PrimePower(2, 7), PrimePower(7, 5)]


def render(records, fmt, **kwargs):
    out = io.StringIO()
    write_records(records, out, fmt, **kwargs)
    return out.getvalue()


def test_classification_record():
    record = classification_record(PrimePower(7, 5))
    assert record["q"] == 16807
    assert record["m"] == 259
    assert record["genus2_reason"] == "SpecialDividesM(Below)"
    assert record["genus3_mrd"] == 3


def test_square_record_skips_genus3():
    record = classification_record(PrimePower(2, 2))
    assert record["genus2_defect"] == 3
    assert record["genus3_mrd"] == ""
    assert record["genus3_reason"] == "NotComputed"


def test_text_output():
    assert render(ENTRIES, OutputFormat.TEXT) == "2^7\n7^5\n"
    assert render(ENTRIES, OutputFormat.TEXT, text_style="base") == "2\n7\n"


def test_csv_output():
    lines = render(ENTRIES, OutputFormat.CSV).splitlines()
    assert lines[0] == "q,p,e,genus2_defect,genus2_reason,genus3_mrd,genus3_reason"
    assert lines[1] == "128,2,7,1,SpecialDividesM(Above),3,DividesM(Below)"
    assert lines[2] == "16807,7,5,2,SpecialDividesM(Below),3,DividesM(Below)"


def test_dw_records_reuse_their_classification(monkeypatch):
    records = [build_record(pp) for pp in ENTRIES]
    expected = render(ENTRIES, OutputFormat.CSV)

    def unexpected(pp):
        raise AssertionError(f"{pp.label} classified again")

    monkeypatch.setattr(reports, "genus2_defect", unexpected)
    monkeypatch.setattr(reports, "genus3_mrd", unexpected)
    assert render(records, OutputFormat.CSV) == expected
    assert render(records, OutputFormat.TEXT) == "2^7\n7^5\n"
    with pytest.raises(AssertionError, match="classified again"):
        render(ENTRIES, OutputFormat.CSV)


def test_csv_output_keeps_huge_q_exact(fixture_entries):
    last = fixture_entries[-1]
    lines = render([last], OutputFormat.CSV).splitlines()
    assert lines[1].startswith(f"{3 ** 229},3,229,")


def test_csv_output_with_square():
    lines = render([PrimePower(2, 2)], OutputFormat.CSV).splitlines()
    assert lines[1] == "4,2,2,3,SquareException(4),,NotComputed"


def test_jsonl_output():
    rows = [json.loads(line) for line in render(ENTRIES + [PrimePower(3, 2)], OutputFormat.JSONL).splitlines()]
    assert rows[1]["q"] == "16807"
    assert rows[1]["m"] == 259
    assert rows[1]["genus3_reason"] == "DividesM(Below)"
    assert rows[2]["genus3_mrd"] is None


def test_empty_record_list():
    assert render([], OutputFormat.TEXT) == ""
    assert render([], OutputFormat.CSV).splitlines() == [
        "q,p,e,genus2_defect,genus2_reason,genus3_mrd,genus3_reason"
    ]


def test_count_rows_and_ratios():
    rows = table_rows(1, 100)
    out = io.StringIO()
    write_count_rows(rows, out)
    assert out.getvalue() == "family,bound,count\nx2+x+1,10,2\nx2+1,10,2\nx2+x+1,100,6\nx2+1,100,4\n"

    out = io.StringIO()
    write_ratios([(10, 1.0), (100, 1.5), (1000, None)], out)
    assert out.getvalue() == "bound,ratio\n10,1.000000\n100,1.500000\n1000,\n"


def test_counts_frame_pivot():
    frame = counts_frame(table_rows(2, 100))
    assert list(frame.columns) == ["bound", "x2+2", "x2+x+3"]
    assert frame.values.tolist() == [[10, 2, 1], [100, 3, 4]]


def test_export_counts_xlsx(tmp_path):
    path = tmp_path / "counts.xlsx"
    export_counts_xlsx(table_rows(1, 100), path, sheet_title="Table 1")

    wb = openpyxl.load_workbook(path)
    ws = wb["Table 1"]
    assert [c.value for c in ws[1]] == ["bound", "x2+x+1", "x2+1"]
    assert [c.value for c in ws[2]] == [10, 2, 2]
    assert [c.value for c in ws[3]] == [100, 6, 4]
    assert ws["A1"].font.bold
    assert ws["A1"].fill.start_color.rgb.endswith("4A90A4")


def test_write_heuristic():
    out = io.StringIO()
    write_heuristic(heuristic_estimate(10 ** 7, 10 ** 16), expected_split(146, GOLDEN), out)
    assert out.getvalue() == "loglog_estimate=0.826679\nexpected_above=55.8\nexpected_below=90.2\n"

    out = io.StringIO()
    write_heuristic(heuristic_estimate(10, 100, exact_sum=True), expected_split(10, GOLDEN), out)
    keys = [line.split("=")[0] for line in out.getvalue().splitlines()]
    assert keys == ["loglog_estimate", "reciprocal_sum", "expected_above", "expected_below"]
