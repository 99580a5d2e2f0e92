"""
Fixture Importer - Read the published Deuring-Waterhouse list from CSV

The file has two columns, p and e, one row per entry in published order.
Supports .csv and .xlsx files.
"""

import logging
from pathlib import Path

import pandas as pd

from core.errors import FixtureError
from core.models import PrimePower
from core.primes import is_prime


logger = logging.getLogger(__name__)

FIXTURE_COLUMNS = ("p", "e")


class FixtureImporter:
    """Load (p, e) entries, collecting every bad row before failing."""

    def __init__(self, path: Path):
        self.path = Path(path)
        self.problems: list[str] = []

    # ==================== FILE READING HELPERS ====================

    def _read_file(self) -> pd.DataFrame:
        """Read the file as strings, supporting both CSV and Excel."""
        suffix = self.path.suffix.lower()
        try:
            if suffix == ".csv":
                return pd.read_csv(self.path, dtype=str, comment="#", skipinitialspace=True)
            elif suffix in (".xlsx", ".xls"):
                return pd.read_excel(self.path, dtype=str)
        except pd.errors.EmptyDataError:
            return pd.DataFrame(columns=list(FIXTURE_COLUMNS))
        raise FixtureError(f"Unsupported fixture format: {suffix}")

    def _parse_int(self, value, row: int, column: str):
        """Exact integer from a cell; records a problem and returns None if it is not one."""
        if pd.isna(value):
            self.problems.append(f"row {row}: missing {column}")
            return None
        text = str(value).strip()
        if not text.isdigit():
            self.problems.append(f"row {row}: {column}={text!r} is not a positive integer")
            return None
        return int(text)

    # ==================== IMPORT ====================

    def load(self) -> list[PrimePower]:
        """Entries in file order; raises FixtureError listing every bad row."""
        if not self.path.exists():
            raise FixtureError(f"Fixture file not found: {self.path}")

        df = self._read_file()
        df.columns = [str(c).strip().lower() for c in df.columns]
        missing = [c for c in FIXTURE_COLUMNS if c not in df.columns]
        if missing:
            raise FixtureError(f"Fixture {self.path} lacks columns: {', '.join(missing)}")

        entries = []
        for idx, row in df.iterrows():
            line = idx + 2  # header is line 1
            p = self._parse_int(row["p"], line, "p")
            e = self._parse_int(row["e"], line, "e")
            if p is None or e is None:
                continue
            if e < 1:
                self.problems.append(f"row {line}: exponent must be at least 1")
                continue
            if not is_prime(p):
                self.problems.append(f"row {line}: {p} is not prime")
                continue
            entries.append(PrimePower(p, e))

        if self.problems:
            raise FixtureError(
                f"Fixture {self.path} has {len(self.problems)} bad rows", self.problems
            )

        logger.info("loaded %d fixture entries from %s", len(entries), self.path)
        return entries


def load_fixture(path: Path) -> list[PrimePower]:
    return FixtureImporter(path).load()
