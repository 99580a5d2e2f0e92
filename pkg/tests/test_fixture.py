"""Loading and verifying the published Deuring-Waterhouse list."""

import pytest

import auditor.fixture_auditor as fixture_auditor
from auditor.fixture_auditor import verify_fixture
from config.settings import FIXTURE_PATH
from core.classify import classify_dw_list, genus2_defect, genus3_mrd
from core.errors import FixtureError
from importers.fixture_importer import FixtureImporter, load_fixture


def test_fixture_loads(fixture_entries):
    assert len(fixture_entries) == 146
    assert fixture_entries[0].label == "2^7"
    assert fixture_entries[-1].label == "3^229"


def test_verify_published_fixture():
    report = verify_fixture()
    assert report.ok
    assert report.summary_line == "146 verified; defect1=61 defect2=85 mrd2=26"
    assert report.lines() == [report.summary_line]
    assert len(report.mrd2_entries) == 26
    assert len(report.mrd3_entries) == 120


def counting(fn, calls):
    def wrapper(pp):
        calls.append(pp)
        return fn(pp)
    return wrapper


def test_verify_classifies_each_entry_once(monkeypatch, fixture_entries):
    g2_calls, g3_calls = [], []
    monkeypatch.setattr(fixture_auditor, "genus2_defect", counting(genus2_defect, g2_calls))
    monkeypatch.setattr(fixture_auditor, "genus3_mrd", counting(genus3_mrd, g3_calls))

    report = verify_fixture()
    assert g2_calls == fixture_entries
    assert g3_calls == fixture_entries
    assert report.summary == classify_dw_list(fixture_entries)


def test_verify_details_lists_both_groups():
    lines = verify_fixture().lines(details=True)
    assert lines[1].startswith("mrd2: ")
    assert lines[2].startswith("mrd3: 2^7 ")


def test_verify_flags_injected_non_dw_entry(tmp_path):
    path = tmp_path / "fixture.csv"
    path.write_text(FIXTURE_PATH.read_text().rstrip("\n") + "\n2,9\n")
    report = verify_fixture(path)
    assert not report.ok
    assert report.verified == 146
    assert report.rejections == ["entry 146 (2^9) is not a Deuring-Waterhouse number"]
    assert "rejected: entry 146 (2^9) is not a Deuring-Waterhouse number" in report.lines()


def test_verify_flags_changed_counts(tmp_path):
    path = tmp_path / "fixture.csv"
    path.write_text("p,e\n2,7\n2,11\n")
    report = verify_fixture(path)
    assert not report.ok
    assert report.verified == 2
    assert any(d.startswith("count=2") for d in report.discrepancies)


def test_verify_flags_order(tmp_path):
    path = tmp_path / "fixture.csv"
    path.write_text("p,e\n2,11\n2,7\n")
    report = verify_fixture(path)
    assert any("ascending order" in d for d in report.discrepancies)


@pytest.mark.parametrize("content", ["", "p,e\n"])
def test_empty_fixture_is_not_ok(tmp_path, content):
    path = tmp_path / "fixture.csv"
    path.write_text(content)
    report = verify_fixture(path)
    assert not report.ok
    assert report.verified == 0
    assert "fixture is empty" in report.lines()


def test_bad_rows_are_all_reported(tmp_path):
    path = tmp_path / "fixture.csv"
    path.write_text("p,e\n7,5\nx,5\n4,5\n")
    with pytest.raises(FixtureError) as info:
        load_fixture(path)
    assert len(info.value.problems) == 2
    assert info.value.problems[0].startswith("row 3")
    assert info.value.problems[1] == "row 4: 4 is not prime"


def test_missing_columns_and_files(tmp_path):
    path = tmp_path / "fixture.csv"
    path.write_text("base,exponent\n7,5\n")
    with pytest.raises(FixtureError, match="lacks columns"):
        load_fixture(path)
    with pytest.raises(FixtureError, match="not found"):
        load_fixture(tmp_path / "absent.csv")
    with pytest.raises(FixtureError, match="Unsupported"):
        other = tmp_path / "fixture.txt"
        other.write_text("p,e\n")
        FixtureImporter(other).load()


def test_xlsx_fixture(tmp_path):
    import openpyxl

    path = tmp_path / "fixture.xlsx"
    wb = openpyxl.Workbook()
    ws = wb.active
    ws.append(["p", "e"])
    ws.append([7, 5])
    ws.append([2, 7])
    wb.save(path)
    assert [pp.label for pp in load_fixture(path)] == ["7^5", "2^7"]
