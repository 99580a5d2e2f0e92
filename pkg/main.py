#!/usr/bin/env python3
"""
Hasse Defect Explorer
=====================
Exact computations around the Hasse-Weil bound for curves over F_q.

Features:
- Serre prime / Deuring-Waterhouse range searches with checkpoints
- Genus 2 defect and genus 3 minimal relative defect classification
- Prime counts of x^2+1, x^2+x+1, x^2+2, x^2+x+3 (triple sieve)
- Heuristic estimates and verification of the published list
- A PyQt6 viewer for the list and the count tables

Usage:
    python main.py serre --max 1e7 --exp 5
    python main.py verify
    python main.py gui
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import Optional

from config.settings import APP_NAME, APP_VERSION, default_threads
from core.models import OutputFormat, PolyFamily, RunConfig, Subcommand
from utils.parsing import parse_bound


def _family(text: str) -> PolyFamily:
    return PolyFamily.from_label(text)


def build_parser() -> argparse.ArgumentParser:
    """Command-line surface: one subparser per subcommand."""
    parser = argparse.ArgumentParser(prog="main.py", description=APP_NAME)
    parser.add_argument("--version", action="version", version=f"{APP_NAME} {APP_VERSION}")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v for INFO, -vv for DEBUG")

    sub = parser.add_subparsers(dest="subcommand", required=True)
    formats = [f.value for f in OutputFormat]

    def threads(p):
        p.add_argument("--threads", type=int, default=None, help="worker processes (default: $HASSE_THREADS or 1)")

    p = sub.add_parser(Subcommand.SERRE.value, help="search lo < p < hi for p^e Deuring-Waterhouse")
    p.add_argument("--min", dest="range_lo", type=parse_bound, default=1)
    p.add_argument("--max", dest="range_hi", type=parse_bound, required=True)
    p.add_argument("--exp", dest="exponent", type=int, default=5)
    p.add_argument("--checkpoint", type=Path, default=None)
    p.add_argument("--format", choices=formats, default="text")
    p.add_argument("--progress", action="store_true")
    threads(p)

    p = sub.add_parser(Subcommand.DW_ENUM.value, help="all Deuring-Waterhouse numbers q < bound")
    p.add_argument("--bound", type=parse_bound, required=True)
    p.add_argument("--format", choices=formats, default="text")
    p.add_argument("--progress", action="store_true")
    threads(p)

    p = sub.add_parser(Subcommand.POLYSIEVE.value, help="count prime values of one quadratic family")
    p.add_argument("--family", type=_family, required=True, help="x2+1, x2+x+1, x2+2 or x2+x+3")
    p.add_argument("--bound", type=parse_bound, required=True)
    p.add_argument("--emit-x", dest="emit_x_path", type=Path, default=None)
    threads(p)

    p = sub.add_parser(Subcommand.CLASSIFY.value, help="genus 2 / genus 3 classification of prime powers")
    source = p.add_mutually_exclusive_group(required=True)
    source.add_argument("--input", dest="input_path", type=Path)
    source.add_argument("--q", dest="q_value")
    p.add_argument("--format", choices=["csv", "jsonl"], default="csv")

    p = sub.add_parser(Subcommand.HEURISTIC.value, help="log log estimate and expected splits")
    p.add_argument("--from", dest="range_lo", type=parse_bound, required=True)
    p.add_argument("--to", dest="range_hi", type=parse_bound, required=True)
    p.add_argument("--exact-sum", action="store_true")
    p.add_argument("--count", type=int, default=146)
    p.add_argument("--threshold", dest="threshold_name", choices=["golden", "tau"], default="golden")
    p.add_argument("--progress", action="store_true")

    p = sub.add_parser(Subcommand.TABLES.value, help="reproduce a published prime-count table")
    p.add_argument("--table", type=int, choices=[1, 2], required=True)
    p.add_argument("--max-bound", type=parse_bound, required=True)
    p.add_argument("--ratio", action="store_true")
    p.add_argument("--xlsx", dest="xlsx_path", type=Path, default=None)
    threads(p)

    p = sub.add_parser(Subcommand.VERIFY.value, help="recompute the published list")
    p.add_argument("--fixture", dest="fixture_path", type=Path, default=None)
    p.add_argument("--details", action="store_true")

    sub.add_parser(Subcommand.GUI.value, help="open the viewer")
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    """Copy parsed arguments onto a RunConfig; absent flags keep its defaults."""
    config = RunConfig(subcommand=Subcommand(args.subcommand))
    values = vars(args)

    for name in (
        "range_lo", "range_hi", "exponent", "checkpoint_path", "progress", "bound",
        "family", "emit_x_path", "input_path", "q_value", "count", "threshold_name",
        "exact_sum", "table", "max_bound", "ratio", "xlsx_path", "fixture_path", "details",
    ):
        if name in values:
            setattr(config, name, values[name])
    if "checkpoint" in values:
        config.checkpoint_path = values["checkpoint"]
    if "format" in values:
        config.output_format = OutputFormat(values["format"])
    if "threads" in values:
        config.parallelism = values["threads"] if values["threads"] is not None else default_threads()
    return config


def setup_logging(verbosity: int):
    """WARNING by default, INFO with -v, DEBUG with -vv; always to stderr."""
    level = logging.WARNING
    if verbosity == 1:
        level = logging.INFO
    elif verbosity >= 2:
        level = logging.DEBUG
    logging.basicConfig(
        level=level,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )


def launch_gui() -> int:
    """Start the viewer and run the Qt event loop."""
    from PyQt6.QtWidgets import QApplication

    from ui.main_window import MainWindow

    app = QApplication(sys.argv)
    app.setApplicationName(APP_NAME)
    app.setStyle("Fusion")

    window = MainWindow()
    window.show()
    return app.exec()


def main(argv: Optional[list[str]] = None) -> int:
    """Application entry point."""
    args = build_parser().parse_args(argv)
    setup_logging(args.verbose)

    if args.subcommand == Subcommand.GUI.value:
        return launch_gui()

    from core.runner import run

    return run(config_from_args(args))


if __name__ == "__main__":
    sys.exit(main())
