"""
Deuring-Waterhouse Tab - The published list with its classifications

Features:
- One row per fixture entry: p^e, m mod p, genus 2 defect, genus 3 mrd
- Verify button running the same audit as `main.py verify`
"""

from PyQt6.QtWidgets import (
    QWidget,
    QVBoxLayout,
    QHBoxLayout,
    QTableWidget,
    QTableWidgetItem,
    QHeaderView,
    QLabel,
    QPushButton,
    QAbstractItemView,
    QMessageBox,
)
from PyQt6.QtCore import Qt

from auditor.fixture_auditor import verify_fixture
from config.settings import FIXTURE_PATH
from core.arith import frac_2sqrt_approx
from core.errors import FixtureError
from core.reports import classification_record
from importers.fixture_importer import load_fixture


class DWTab(QWidget):
    """Table of the fixture entries and a verify action."""

    COLUMNS = ["p^e", "digits of q", "{2√q}", "Genus 2 defect", "Genus 2 reason", "Genus 3 mrd", "Genus 3 reason"]

    def __init__(self, main_window=None):
        super().__init__()
        self.main_window = main_window
        self._setup_ui()
        self.load_entries()

    def _setup_ui(self):
        layout = QVBoxLayout(self)
        layout.setContentsMargins(5, 5, 5, 5)

        header = QHBoxLayout()
        self.summary_label = QLabel("")
        header.addWidget(self.summary_label)
        header.addStretch()

        verify_btn = QPushButton("✔ Verify")
        verify_btn.clicked.connect(self._on_verify)
        header.addWidget(verify_btn)
        layout.addLayout(header)

        self.table = QTableWidget(0, len(self.COLUMNS))
        self.table.setHorizontalHeaderLabels(self.COLUMNS)
        self.table.setEditTriggers(QAbstractItemView.EditTrigger.NoEditTriggers)
        self.table.setSelectionBehavior(QAbstractItemView.SelectionBehavior.SelectRows)
        self.table.horizontalHeader().setSectionResizeMode(QHeaderView.ResizeMode.ResizeToContents)
        layout.addWidget(self.table)

    def load_entries(self):
        """Fill the table from the fixture file."""
        try:
            entries = load_fixture(FIXTURE_PATH)
        except FixtureError as e:
            self.summary_label.setText(f"Cannot load fixture: {e}")
            return

        self.table.setRowCount(len(entries))
        for row, pp in enumerate(entries):
            record = classification_record(pp)
            values = [
                pp.label,
                str(len(str(pp.q))),
                f"{frac_2sqrt_approx(pp.q):.4f}",
                str(record["genus2_defect"]),
                record["genus2_reason"],
                str(record["genus3_mrd"]),
                record["genus3_reason"],
            ]
            for col, value in enumerate(values):
                item = QTableWidgetItem(value)
                if col in (1, 2, 3, 5):
                    item.setTextAlignment(Qt.AlignmentFlag.AlignRight | Qt.AlignmentFlag.AlignVCenter)
                self.table.setItem(row, col, item)

        self.summary_label.setText(f"{len(entries)} entries from {FIXTURE_PATH.name}")

    def _on_verify(self):
        try:
            report = verify_fixture(FIXTURE_PATH)
        except FixtureError as e:
            QMessageBox.warning(self, "Fixture Error", "\n".join([str(e)] + e.problems))
            return

        text = "\n".join(report.lines())
        if report.ok:
            QMessageBox.information(self, "Verify", text)
        else:
            QMessageBox.warning(self, "Verify", text)
        if self.main_window is not None:
            self.main_window.show_status(report.summary_line)
