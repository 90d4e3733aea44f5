"""Entry cache: round-trips, corruption handling, CLI integration."""

import json

from thetares import DELTA256, THETA2, rec_sequence
from thetares.cache import SeqCache, cached_sequence
from thetares.cli import main


def test_round_trip(tmp_path):
    cache = SeqCache(tmp_path)
    seq = cached_sequence(DELTA256, 4, cache)
    fresh = rec_sequence(DELTA256, 4)
    assert seq.entries == fresh.entries
    # second run is served from disk and identical
    again = cached_sequence(DELTA256, 4, cache)
    assert again.entries == seq.entries


def test_cache_files_are_versioned(tmp_path):
    cache = SeqCache(tmp_path)
    cached_sequence(THETA2, 2, cache)
    path = cache.entry_path(THETA2, 1)
    data = json.loads(path.read_text())
    assert data["format"] == 1
    assert data["family"] == "mult:0,0,2"
    assert data["m"] == 1
    assert set(data) == {"format", "engine", "family", "m", "entry"}


def test_corrupt_entries_are_recomputed(tmp_path):
    cache = SeqCache(tmp_path)
    cached_sequence(THETA2, 3, cache)
    good = cache.read(THETA2, 2)
    cache.entry_path(THETA2, 2).write_text("{not json")
    assert cache.read(THETA2, 2) is None
    seq = cached_sequence(THETA2, 3, cache)
    assert seq.entries[2] == good
    assert cache.read(THETA2, 2) == good  # rewritten


def test_mismatched_header_rejected(tmp_path):
    cache = SeqCache(tmp_path)
    cached_sequence(THETA2, 1, cache)
    path = cache.entry_path(THETA2, 1)
    data = json.loads(path.read_text())
    data["family"] = "mult:9,9,9"
    path.write_text(json.dumps(data))
    assert cache.read(THETA2, 1) is None


def test_distinct_families_do_not_collide(tmp_path):
    cache = SeqCache(tmp_path)
    cached_sequence(THETA2, 1, cache)
    cached_sequence(DELTA256, 1, cache)
    assert cache.read(THETA2, 1) != cache.read(DELTA256, 1)


def test_cli_uses_cache_dir(tmp_path, capsys):
    argv = ["compute", "--family", "mult:0,0,2", "--m-max", "2",
            "--format", "json", "--cache-dir", str(tmp_path)]
    assert main(argv) == 0
    first = capsys.readouterr().out
    assert len(list(tmp_path.glob("*.json"))) == 3
    assert main(argv) == 0
    assert capsys.readouterr().out == first


def test_cli_cache_env_var(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("THETARES_CACHE_DIR", str(tmp_path))
    assert main(["compute", "--family", "mult:0,0,2", "--m-max", "1"]) == 0
    capsys.readouterr()
    assert len(list(tmp_path.glob("*.json"))) == 2
