"""
Runner - Dispatch one validated RunConfig to the library and write its output

Exit codes:
    0  success
    2  invalid parameters (ConfigError)
    3  computation refused its input (DomainError, CheckpointError)
    4  fixture unreadable or failed verification
"""

import logging
import sys
from functools import partial
from typing import Optional, TextIO

from config.settings import FIXTURE_PATH
from core.errors import DomainError, FixtureError, HasseError
from core.models import CountRow, PrimePower, RunConfig, Subcommand


logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VERIFY_FAILED = 4


def _run_serre(config: RunConfig, out: TextIO) -> int:
    from core.checkpoint import load_checkpoint, save_checkpoint
    from core.dw import search_serre_range
    from core.reports import write_records

    checkpoint = None
    on_segment = None
    if config.checkpoint_path is not None:
        path = config.checkpoint_path
        checkpoint = load_checkpoint(path)
        on_segment = partial(save_checkpoint, path=path)

    hits = search_serre_range(
        config.range_lo,
        config.range_hi,
        config.exponent,
        parallelism=config.parallelism,
        checkpoint=checkpoint,
        on_segment=on_segment,
        progress=config.progress,
    )
    write_records(hits, out, config.output_format, text_style="base")
    return EXIT_OK


def _run_dw_enum(config: RunConfig, out: TextIO) -> int:
    from core.dw import enumerate_dw
    from core.reports import write_records

    records = enumerate_dw(config.bound, parallelism=config.parallelism, progress=config.progress)
    write_records(records, out, config.output_format)
    return EXIT_OK


def _run_polysieve(config: RunConfig, out: TextIO) -> int:
    from core.polysieve import emit_prime_x_values, triple_sieve_count
    from core.reports import write_count_rows

    if config.emit_x_path is not None:
        with open(config.emit_x_path, "w") as sink:
            count = emit_prime_x_values(config.family, config.bound, sink, config.parallelism)
        row = CountRow(config.family, config.bound, count)
    else:
        row = triple_sieve_count(config.family, config.bound, config.parallelism)
    write_count_rows([row], out)
    return EXIT_OK


def _classify_inputs(config: RunConfig) -> list[PrimePower]:
    from utils.parsing import parse_classify_line

    if config.q_value is not None:
        lines = [config.q_value]
    else:
        with open(config.input_path, "r") as f:
            lines = f.read().splitlines()

    entries = []
    for number, line in enumerate(lines, 1):
        try:
            pp = parse_classify_line(line)
        except DomainError as e:
            raise DomainError(f"line {number}: {e}") from e
        if pp is not None:
            entries.append(pp)
    return entries


def _run_classify(config: RunConfig, out: TextIO) -> int:
    from core.reports import write_records

    write_records(_classify_inputs(config), out, config.output_format)
    return EXIT_OK


def _run_heuristic(config: RunConfig, out: TextIO) -> int:
    from core.heuristic import THRESHOLDS, expected_split, heuristic_estimate
    from core.reports import write_heuristic

    estimate = heuristic_estimate(
        config.range_lo, config.range_hi, exact_sum=config.exact_sum, progress=config.progress
    )
    split = expected_split(config.count, THRESHOLDS[config.threshold_name])
    write_heuristic(estimate, split, out)
    return EXIT_OK


def _run_tables(config: RunConfig, out: TextIO) -> int:
    from core.polysieve import count_ratios, known_erratum, published_count, table_rows
    from core.reports import export_counts_xlsx, write_count_rows, write_ratios

    rows = table_rows(config.table, config.max_bound, config.parallelism)
    for row in rows:
        published = published_count(row.family, row.bound)
        if published is None or published == row.count:
            continue
        if known_erratum(row.family, row.bound) == row.count:
            logger.info(
                "%s at %d: counted %d, published %d (known erratum)",
                row.family.label, row.bound, row.count, published,
            )
        else:
            logger.warning(
                "%s at %d: counted %d, published %d", row.family.label, row.bound, row.count, published
            )

    if config.ratio:
        write_ratios(count_ratios(rows), out)
    else:
        write_count_rows(rows, out)

    if config.xlsx_path is not None:
        export_counts_xlsx(rows, config.xlsx_path, sheet_title=f"Table {config.table}")
    return EXIT_OK


def _run_verify(config: RunConfig, out: TextIO) -> int:
    from auditor.fixture_auditor import verify_fixture

    report = verify_fixture(config.fixture_path or FIXTURE_PATH)
    for line in report.lines(details=config.details):
        out.write(line + "\n")
    return EXIT_OK if report.ok else EXIT_VERIFY_FAILED


HANDLERS = {
    Subcommand.SERRE: _run_serre,
    Subcommand.DW_ENUM: _run_dw_enum,
    Subcommand.POLYSIEVE: _run_polysieve,
    Subcommand.CLASSIFY: _run_classify,
    Subcommand.HEURISTIC: _run_heuristic,
    Subcommand.TABLES: _run_tables,
    Subcommand.VERIFY: _run_verify,
}


def run(config: RunConfig, out: Optional[TextIO] = None, err: Optional[TextIO] = None) -> int:
    """Validate, dispatch and return the exit status; errors go to `err` (stderr)."""
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        config.validate()
        handler = HANDLERS.get(config.subcommand)
        if handler is None:
            raise DomainError(f"{config.subcommand.value} is not a batch subcommand")
        return handler(config, out)
    except FixtureError as e:
        err.write(f"error: {e}\n")
        for problem in e.problems:
            err.write(f"  {problem}\n")
        return e.exit_code
    except HasseError as e:
        logger.debug("run failed", exc_info=True)
        err.write(f"error: {e}\n")
        return e.exit_code
    except OSError as e:
        err.write(f"error: {e}\n")
        return 2 if isinstance(e, FileNotFoundError) else 3
