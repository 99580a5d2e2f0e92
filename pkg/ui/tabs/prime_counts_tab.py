"""
Prime Counts Tab - Table 1 / Table 2 rows computed on demand
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
    QComboBox,
    QSpinBox,
    QAbstractItemView,
    QApplication,
)
from PyQt6.QtCore import Qt
from PyQt6.QtGui import QColor

from core.models import CountRow
from core.polysieve import TABLE_FAMILIES, known_erratum, published_count, table_rows


class PrimeCountsTab(QWidget):
    """Counted versus published prime counts, one row per bound."""

    MISMATCH_COLOR = QColor("#F8D7DA")
    ERRATUM_COLOR = QColor("#FFF3CD")

    def __init__(self, main_window=None):
        super().__init__()
        self.main_window = main_window
        self.rows: list[CountRow] = []
        self._setup_ui()

    def _setup_ui(self):
        layout = QVBoxLayout(self)
        layout.setContentsMargins(5, 5, 5, 5)

        controls = QHBoxLayout()
        controls.addWidget(QLabel("Table:"))
        self.table_combo = QComboBox()
        self.table_combo.addItem("1: x²+x+1, x²+1", 1)
        self.table_combo.addItem("2: x²+2, x²+x+3", 2)
        controls.addWidget(self.table_combo)

        controls.addWidget(QLabel("Up to 10^"))
        self.exponent_spin = QSpinBox()
        self.exponent_spin.setRange(1, 10)
        self.exponent_spin.setValue(6)
        controls.addWidget(self.exponent_spin)

        compute_btn = QPushButton("▶ Compute")
        compute_btn.clicked.connect(self._on_compute)
        controls.addWidget(compute_btn)
        controls.addStretch()
        layout.addLayout(controls)

        self.table = QTableWidget(0, 0)
        self.table.setEditTriggers(QAbstractItemView.EditTrigger.NoEditTriggers)
        self.table.horizontalHeader().setSectionResizeMode(QHeaderView.ResizeMode.Stretch)
        layout.addWidget(self.table)

        self.note_label = QLabel("Red cells differ from the published figure; yellow cells are known errata.")
        layout.addWidget(self.note_label)

    def _on_compute(self):
        table = self.table_combo.currentData()
        max_bound = 10 ** self.exponent_spin.value()
        if self.main_window is not None:
            self.main_window.show_status(f"Counting table {table} up to {max_bound}...")
        QApplication.processEvents()

        self.rows = table_rows(table, max_bound)
        self._populate(table)

        if self.main_window is not None:
            self.main_window.show_status(f"Table {table}: {len(self.rows)} counts")

    def _populate(self, table: int):
        families = TABLE_FAMILIES[table]
        headers = ["Bound"]
        for family in families:
            headers += [f"π {family.display}", "published"]
        self.table.setColumnCount(len(headers))
        self.table.setHorizontalHeaderLabels(headers)

        by_bound: dict[int, dict] = {}
        for row in self.rows:
            by_bound.setdefault(row.bound, {})[row.family] = row.count

        self.table.setRowCount(len(by_bound))
        for r, bound in enumerate(sorted(by_bound)):
            self.table.setItem(r, 0, QTableWidgetItem(f"10^{len(str(bound)) - 1}"))
            for i, family in enumerate(families):
                count = by_bound[bound].get(family)
                published = published_count(family, bound)
                count_item = QTableWidgetItem("" if count is None else str(count))
                published_item = QTableWidgetItem("" if published is None else str(published))
                for item in (count_item, published_item):
                    item.setTextAlignment(Qt.AlignmentFlag.AlignRight | Qt.AlignmentFlag.AlignVCenter)
                if published is not None and count is not None and published != count:
                    if known_erratum(family, bound) == count:
                        count_item.setBackground(self.ERRATUM_COLOR)
                        count_item.setToolTip(f"published {published} is a known erratum")
                    else:
                        count_item.setBackground(self.MISMATCH_COLOR)
                self.table.setItem(r, 1 + 2 * i, count_item)
                self.table.setItem(r, 2 + 2 * i, published_item)
