"""Checkpoint files: round trip, atomic replacement, malformed input and resuming a search."""

import json

import pytest

from core.checkpoint import checkpoint_from_dict, checkpoint_to_dict, load_checkpoint, save_checkpoint
from core.dw import search_serre_range
from core.errors import CheckpointError
from core.models import PrimePower, SearchCheckpoint


@pytest.fixture
def checkpoint():
    return SearchCheckpoint(
        range_lo=1,
        range_hi=10 ** 7,
        exponent=9,
        segment_size=510510,
        completed_segments={3, 0, 1},
        hits=[PrimePower(113, 9), PrimePower(5, 9)],
    )


def test_file_layout(checkpoint):
    data = checkpoint_to_dict(checkpoint)
    assert data["completed_segments"] == [0, 1, 3]
    assert data["hits"] == [[5, 9], [113, 9]]


def test_save_and_load(tmp_path, checkpoint):
    path = tmp_path / "cp.json"
    save_checkpoint(checkpoint, path)
    assert not (tmp_path / "cp.json.tmp").exists()

    loaded = load_checkpoint(path)
    assert loaded.matches(1, 10 ** 7, 9, 510510)
    assert loaded.completed_segments == {0, 1, 3}
    assert loaded.hits == [PrimePower(5, 9), PrimePower(113, 9)]


def test_save_overwrites(tmp_path, checkpoint):
    path = tmp_path / "cp.json"
    save_checkpoint(checkpoint, path)
    checkpoint.completed_segments.add(4)
    save_checkpoint(checkpoint, path)
    assert load_checkpoint(path).completed_segments == {0, 1, 3, 4}


def test_missing_file_means_fresh_start(tmp_path):
    assert load_checkpoint(tmp_path / "none.json") is None


def test_invalid_json(tmp_path):
    path = tmp_path / "cp.json"
    path.write_text("{not json")
    with pytest.raises(CheckpointError, match="not valid JSON"):
        load_checkpoint(path)


def test_missing_keys(tmp_path):
    path = tmp_path / "cp.json"
    path.write_text(json.dumps({"range_lo": 1, "range_hi": 10}))
    with pytest.raises(CheckpointError, match="missing keys"):
        load_checkpoint(path)


def test_bad_values():
    data = {
        "range_lo": 1, "range_hi": 100, "exponent": 5, "segment_size": 510510,
        "completed_segments": ["zero"], "hits": [],
    }
    with pytest.raises(CheckpointError):
        checkpoint_from_dict(data)
    with pytest.raises(CheckpointError):
        checkpoint_from_dict([1, 2, 3])


def test_unwritable_location(tmp_path, checkpoint):
    with pytest.raises(CheckpointError):
        save_checkpoint(checkpoint, tmp_path / "missing" / "cp.json")


# ==================== RESUMING A SEARCH ====================

def run_from(checkpoint, **kwargs):
    return search_serre_range(1, 10 ** 6, 9, checkpoint=checkpoint, segment_size=510510, **kwargs)


@pytest.mark.parametrize("hits", [
    [PrimePower(11, 9)],
    [PrimePower(7, 5)],
    [PrimePower(4, 9)],
    [PrimePower(11, 9), PrimePower(7, 5), PrimePower(4, 9)],
    [PrimePower(1000003, 9)],
])
def test_search_rejects_hits_that_are_not_results(hits):
    forged = SearchCheckpoint(1, 10 ** 6, 9, 510510, completed_segments={0, 1}, hits=hits)
    with pytest.raises(CheckpointError):
        run_from(forged)


def test_search_rejects_hit_in_unfinished_segment():
    early = SearchCheckpoint(1, 10 ** 6, 9, 510510, completed_segments={1}, hits=[PrimePower(113, 9)])
    with pytest.raises(CheckpointError, match="not marked complete"):
        run_from(early)


def test_search_rejects_bad_hits_read_from_file(tmp_path):
    path = tmp_path / "cp.json"
    path.write_text(json.dumps({
        "range_lo": 1, "range_hi": 10 ** 6, "exponent": 9, "segment_size": 510510,
        "completed_segments": [0, 1], "hits": [[11, 9], [7, 5], [4, 9]],
    }))
    with pytest.raises(CheckpointError):
        run_from(load_checkpoint(path))


def test_search_keeps_valid_hits():
    below = [PrimePower(p, 9) for p in (5, 113, 239, 43783)]
    partial = SearchCheckpoint(1, 10 ** 6, 9, 510510, completed_segments={0}, hits=below)
    found = run_from(partial)
    assert [pp.p for pp in found] == [5, 113, 239, 43783]
    assert partial.completed_segments == {0, 1}


class Stop(Exception):
    pass


def stop_after_first(seen):
    def on_segment(checkpoint):
        seen.append(set(checkpoint.completed_segments))
        raise Stop()
    return on_segment


@pytest.mark.parametrize("parallelism", [1, 2])
def test_wide_search_stops_after_first_block(parallelism):
    seen = []
    with pytest.raises(Stop):
        search_serre_range(
            1, 10 ** 15, 5,
            parallelism=parallelism,
            on_segment=stop_after_first(seen),
            segment_size=510510,
        )
    assert len(seen) == 1
    assert len(seen[0]) == 1


def test_wide_checkpoint_resumes_without_listing_blocks():
    far = SearchCheckpoint(1, 10 ** 15, 5, 510510, completed_segments={10 ** 8})
    seen = []
    with pytest.raises(Stop):
        search_serre_range(1, 10 ** 15, 5, checkpoint=far, on_segment=stop_after_first(seen), segment_size=510510)
    assert seen == [{0, 10 ** 8}]
    assert far.completed_segments == {0, 10 ** 8}
    assert PrimePower(7, 5) in far.hits
