"""
Checkpoint Persistence - save and resume range searches as JSON.

File keys: range_lo, range_hi, exponent, segment_size,
completed_segments (ascending block indices) and hits ([p, e] pairs).
"""

import json
import logging
import os
from pathlib import Path
from typing import Optional

from core.errors import CheckpointError
from core.models import PrimePower, SearchCheckpoint


logger = logging.getLogger(__name__)

REQUIRED_KEYS = ("range_lo", "range_hi", "exponent", "segment_size", "completed_segments", "hits")


def checkpoint_to_dict(checkpoint: SearchCheckpoint) -> dict:
    return {
        "range_lo": checkpoint.range_lo,
        "range_hi": checkpoint.range_hi,
        "exponent": checkpoint.exponent,
        "segment_size": checkpoint.segment_size,
        "completed_segments": sorted(checkpoint.completed_segments),
        "hits": [[pp.p, pp.e] for pp in sorted(checkpoint.hits, key=lambda pp: pp.p)],
    }


def checkpoint_from_dict(data: dict) -> SearchCheckpoint:
    """Rebuild a checkpoint, raising CheckpointError on anything malformed."""
    if not isinstance(data, dict):
        raise CheckpointError("Checkpoint must be a JSON object")
    missing = [key for key in REQUIRED_KEYS if key not in data]
    if missing:
        raise CheckpointError(f"Checkpoint is missing keys: {', '.join(missing)}")

    try:
        return SearchCheckpoint(
            range_lo=int(data["range_lo"]),
            range_hi=int(data["range_hi"]),
            exponent=int(data["exponent"]),
            segment_size=int(data["segment_size"]),
            completed_segments={int(k) for k in data["completed_segments"]},
            hits=[PrimePower(int(p), int(e)) for p, e in data["hits"]],
        )
    except (TypeError, ValueError) as e:
        raise CheckpointError(f"Checkpoint has invalid values: {e}") from e


def save_checkpoint(checkpoint: SearchCheckpoint, path: Path):
    """Write via a temporary file and rename, so a crash never leaves half a file."""
    path = Path(path)
    tmp = path.with_name(path.name + ".tmp")
    try:
        with open(tmp, "w") as f:
            json.dump(checkpoint_to_dict(checkpoint), f, indent=2)
        os.replace(tmp, path)
    except OSError as e:
        raise CheckpointError(f"Cannot write checkpoint {path}: {e}") from e
    logger.debug("checkpoint saved: %d segments done", len(checkpoint.completed_segments))


def load_checkpoint(path: Path) -> Optional[SearchCheckpoint]:
    """The checkpoint stored at `path`, or None if there is no file yet."""
    path = Path(path)
    if not path.exists():
        return None
    try:
        with open(path, "r") as f:
            data = json.load(f)
    except json.JSONDecodeError as e:
        raise CheckpointError(f"Checkpoint {path} is not valid JSON: {e}") from e
    except OSError as e:
        raise CheckpointError(f"Cannot read checkpoint {path}: {e}") from e

    checkpoint = checkpoint_from_dict(data)
    logger.info("resuming from %s: %d segments done", path, len(checkpoint.completed_segments))
    return checkpoint
