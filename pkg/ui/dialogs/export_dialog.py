"""
Export Dialog - Export prime-count tables to Excel/CSV
"""
from PyQt6.QtWidgets import (
    QDialog, QVBoxLayout, QHBoxLayout, QGroupBox, QLabel,
    QPushButton, QRadioButton, QFileDialog, QMessageBox,
)

from core.models import CountRow
from core.reports import export_counts_xlsx, write_count_rows


class ExportDialog(QDialog):
    """Dialog for exporting the computed count rows."""

    def __init__(self, main_window, rows: list[CountRow]):
        super().__init__(main_window)
        self.main_window = main_window
        self.rows = rows
        self.setWindowTitle("📤 Export Tables")
        self.setMinimumWidth(400)
        self._setup_ui()

    def _setup_ui(self):
        layout = QVBoxLayout(self)

        if self.rows:
            desc = QLabel(f"Export {len(self.rows)} computed counts.")
        else:
            desc = QLabel("Nothing to export yet: compute a table on the Prime Counts tab first.")
        desc.setWordWrap(True)
        layout.addWidget(desc)

        format_group = QGroupBox("Format")
        format_layout = QHBoxLayout(format_group)
        self.csv_radio = QRadioButton("CSV")
        self.xlsx_radio = QRadioButton("Excel (.xlsx)")
        self.xlsx_radio.setChecked(True)
        format_layout.addWidget(self.csv_radio)
        format_layout.addWidget(self.xlsx_radio)
        format_layout.addStretch()
        layout.addWidget(format_group)

        buttons = QHBoxLayout()
        export_btn = QPushButton("📤 Export")
        export_btn.setEnabled(bool(self.rows))
        export_btn.clicked.connect(self._export)
        buttons.addWidget(export_btn)

        close_btn = QPushButton("Close")
        close_btn.clicked.connect(self.close)
        buttons.addWidget(close_btn)
        layout.addLayout(buttons)

    def _export(self):
        if self.xlsx_radio.isChecked():
            path, _ = QFileDialog.getSaveFileName(self, "Export Tables", "prime_counts.xlsx", "Excel (*.xlsx)")
        else:
            path, _ = QFileDialog.getSaveFileName(self, "Export Tables", "prime_counts.csv", "CSV (*.csv)")
        if not path:
            return

        try:
            if self.xlsx_radio.isChecked():
                export_counts_xlsx(self.rows, path)
            else:
                with open(path, "w", newline="") as f:
                    write_count_rows(self.rows, f)
        except OSError as e:
            QMessageBox.critical(self, "Export Failed", str(e))
            return

        QMessageBox.information(self, "Export Complete", f"Saved to:\n{path}")
        self.accept()
