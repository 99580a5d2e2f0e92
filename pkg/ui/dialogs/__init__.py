"""
UI Dialogs Module

Contains dialog windows for the application.
"""

from ui.dialogs.export_dialog import ExportDialog

__all__ = [
    "ExportDialog",
]
