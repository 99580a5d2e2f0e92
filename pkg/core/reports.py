"""
Reports - CSV, JSONL, text and Excel output for every subcommand

Classification rows share one schema:
    q,p,e,genus2_defect,genus2_reason,genus3_mrd,genus3_reason
JSONL adds m, and writes q as a decimal string since it outgrows 64 bits.
"""

import json
import logging
from pathlib import Path
from typing import Iterable, Optional, TextIO, Union

import pandas as pd

from core.arith import hasse_m
from core.classify import genus2_defect, genus3_mrd
from core.models import (
    CountRow,
    DWRecord,
    Genus2Result,
    Genus3Result,
    HeuristicEstimate,
    OutputFormat,
    PrimePower,
)


logger = logging.getLogger(__name__)

RECORD_COLUMNS = ["q", "p", "e", "genus2_defect", "genus2_reason", "genus3_mrd", "genus3_reason"]
COUNT_COLUMNS = ["family", "bound", "count"]

HEADER_COLOR = "4A90A4"


# ==================== CLASSIFICATION RECORDS ====================

def classification_record(
    pp: PrimePower,
    genus2: Optional[Genus2Result] = None,
    genus3: Optional[Genus3Result] = None,
) -> dict:
    """
    One output record for q = p^e.

    Results already computed (as carried by a DWRecord) are reused.
    Square q gets its genus 2 defect; the genus 3 columns stay empty with
    reason NotComputed.
    """
    g2 = genus2 or genus2_defect(pp)
    record = {
        "q": pp.q,
        "p": pp.p,
        "e": pp.e,
        "m": hasse_m(pp.q),
        "genus2_defect": g2.defect,
        "genus2_reason": g2.reason_label,
        "genus3_mrd": "",
        "genus3_reason": "NotComputed",
    }
    if not pp.is_square:
        g3 = genus3 or genus3_mrd(pp)
        record["genus3_mrd"] = g3.mrd
        record["genus3_reason"] = g3.reason_label
    return record


def _record_of(item: Union[PrimePower, DWRecord]) -> dict:
    if isinstance(item, DWRecord):
        return classification_record(item.pp, item.genus2, item.genus3)
    return classification_record(item)


def write_records(
    records: Iterable[Union[PrimePower, DWRecord]],
    out: TextIO,
    fmt: OutputFormat,
    text_style: str = "label",
):
    """
    Classification output for a list of prime powers or DW records.

    In text format one line per entry: the base p (text_style="base") or
    the p^e label.
    """
    records = list(records)
    if fmt is OutputFormat.TEXT:
        for item in records:
            pp = item.pp if isinstance(item, DWRecord) else item
            out.write(f"{pp.p if text_style == 'base' else pp.label}\n")
        return

    rows = [_record_of(item) for item in records]
    if fmt is OutputFormat.JSONL:
        for row in rows:
            row["q"] = str(row["q"])
            if row["genus3_mrd"] == "":
                row["genus3_mrd"] = None
            out.write(json.dumps(row) + "\n")
        return

    frame = pd.DataFrame(rows, columns=RECORD_COLUMNS + ["m"])[RECORD_COLUMNS]
    frame["q"] = frame["q"].astype(str)
    frame.to_csv(out, index=False, lineterminator="\n")


# ==================== COUNT TABLES ====================

def write_count_rows(rows: Iterable[CountRow], out: TextIO):
    """CSV with header family,bound,count."""
    frame = pd.DataFrame(
        [(row.family.label, row.bound, row.count) for row in rows],
        columns=COUNT_COLUMNS,
    )
    frame.to_csv(out, index=False, lineterminator="\n")


def write_ratios(ratios: Iterable[tuple[int, Optional[float]]], out: TextIO):
    """CSV with header bound,ratio; six decimals, empty where undefined."""
    out.write("bound,ratio\n")
    for bound, ratio in ratios:
        out.write(f"{bound},{'' if ratio is None else f'{ratio:.6f}'}\n")


def counts_frame(rows: Iterable[CountRow]) -> pd.DataFrame:
    """One row per bound, one column per family (in first-seen order)."""
    rows = list(rows)
    order = list(dict.fromkeys(row.family.label for row in rows))
    frame = pd.DataFrame(
        [(row.bound, row.family.label, row.count) for row in rows],
        columns=["bound", "family", "count"],
    )
    if frame.empty:
        return pd.DataFrame(columns=["bound"])
    table = frame.pivot(index="bound", columns="family", values="count")[order]
    table.columns.name = None
    return table.reset_index()


def export_counts_xlsx(rows: Iterable[CountRow], path: Path, sheet_title: str = "Prime Counts"):
    """Write the count table to an Excel workbook with a styled header row."""
    import openpyxl
    from openpyxl.styles import Font, PatternFill

    frame = counts_frame(rows)

    wb = openpyxl.Workbook()
    ws = wb.active
    ws.title = sheet_title

    header_fill = PatternFill(start_color=HEADER_COLOR, end_color=HEADER_COLOR, fill_type="solid")
    header_font = Font(bold=True, color="FFFFFF")

    for col, header in enumerate(frame.columns, 1):
        cell = ws.cell(row=1, column=col, value=str(header))
        cell.fill = header_fill
        cell.font = header_font

    for row_idx, values in enumerate(frame.itertuples(index=False), 2):
        for col, value in enumerate(values, 1):
            ws.cell(row=row_idx, column=col, value=int(value))

    for col in ws.columns:
        width = max(len(str(cell.value)) for cell in col)
        ws.column_dimensions[col[0].column_letter].width = min(width + 2, 30)

    wb.save(path)
    logger.info("wrote %d table rows to %s", len(frame), path)


# ==================== HEURISTIC ====================

def write_heuristic(estimate: HeuristicEstimate, split: tuple[float, float], out: TextIO):
    """key=value lines."""
    out.write(f"loglog_estimate={estimate.loglog_value:.6f}\n")
    if estimate.reciprocal_sum is not None:
        out.write(f"reciprocal_sum={estimate.reciprocal_sum:.6f}\n")
    above, below = split
    out.write(f"expected_above={above:.1f}\n")
    out.write(f"expected_below={below:.1f}\n")
