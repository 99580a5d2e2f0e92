"""
Fixture Auditor - Recompute the published Deuring-Waterhouse list

Every entry is re-tested with is_dw and reclassified; the genus 2 and
genus 3 splits are compared with the published figures.
"""

import logging
from dataclasses import dataclass, field
from pathlib import Path

from config.settings import FIXTURE_EXPECTED, FIXTURE_PATH
from core.classify import genus2_defect, genus3_mrd
from core.dw import is_dw
from core.models import ClassificationSummary, Genus2Reason, PrimePower
from importers.fixture_importer import load_fixture


logger = logging.getLogger(__name__)


@dataclass
class FixtureReport:
    """Outcome of one fixture verification."""
    path: Path
    entries: list[PrimePower] = field(default_factory=list)
    summary: ClassificationSummary = field(default_factory=ClassificationSummary)
    rejections: list[str] = field(default_factory=list)
    discrepancies: list[str] = field(default_factory=list)
    mrd2_entries: list[PrimePower] = field(default_factory=list)
    mrd3_entries: list[PrimePower] = field(default_factory=list)

    @property
    def verified(self) -> int:
        return self.summary.total

    @property
    def ok(self) -> bool:
        return self.verified > 0 and not self.rejections and not self.discrepancies

    @property
    def summary_line(self) -> str:
        s = self.summary
        return f"{self.verified} verified; defect1={s.defect1_count} defect2={s.defect2_count} mrd2={s.mrd2_count}"

    def lines(self, details: bool = False) -> list[str]:
        """Report text, one item per line."""
        out = [self.summary_line]
        if not self.entries:
            out.append("fixture is empty")
        out.extend(f"rejected: {r}" for r in self.rejections)
        out.extend(f"mismatch: {d}" for d in self.discrepancies)
        if details:
            out.append("mrd2: " + " ".join(pp.label for pp in self.mrd2_entries))
            out.append("mrd3: " + " ".join(pp.label for pp in self.mrd3_entries))
        return out


def _compare_with_published(report: FixtureReport):
    s = report.summary
    observed = {
        "count": s.total,
        "defect1": s.defect1_count,
        "defect2": s.defect2_count,
        "mrd2": s.mrd2_count,
    }
    for key, expected in FIXTURE_EXPECTED.items():
        if observed[key] != expected:
            report.discrepancies.append(f"{key}={observed[key]}, published {expected}")


def verify_fixture(path: Path = FIXTURE_PATH) -> FixtureReport:
    """
    Re-test and reclassify every fixture entry.

    Raises FixtureError if the file cannot be parsed; entries that are not
    DW numbers are listed in `rejections` and left out of the counts.
    """
    report = FixtureReport(path=Path(path), entries=load_fixture(path))

    summary = report.summary
    last_q = 0
    for index, pp in enumerate(report.entries):
        if not is_dw(pp.p, pp.e):
            report.rejections.append(f"entry {index} ({pp.label}) is not a Deuring-Waterhouse number")
            continue
        if pp.q <= last_q:
            report.discrepancies.append(f"entry {index} ({pp.label}) is out of ascending order")
        last_q = max(last_q, pp.q)

        g2 = genus2_defect(pp)
        # p | m is what makes it a DW number
        if g2.reason is not Genus2Reason.SPECIAL_DIVIDES_M:
            report.discrepancies.append(f"entry {index} ({pp.label}) is not special by p | m")
        if g2.defect == 1:
            summary.defect1_count += 1
        else:
            summary.defect2_count += 1

        if genus3_mrd(pp).mrd == 2:
            summary.mrd2_count += 1
            report.mrd2_entries.append(pp)
        else:
            summary.mrd3_count += 1
            report.mrd3_entries.append(pp)

    if report.entries:
        _compare_with_published(report)

    logger.info("fixture %s: %s", path, report.summary_line)
    return report
