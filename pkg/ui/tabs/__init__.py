"""
UI Tabs Module

Contains all tab widgets for the main application.
"""

from ui.tabs.dw_tab import DWTab
from ui.tabs.prime_counts_tab import PrimeCountsTab

__all__ = [
    "DWTab",
    "PrimeCountsTab",
]
