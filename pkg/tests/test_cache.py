import pytest

from magicount.cache import (
    CacheFormatError,
    format_record,
    load_cache,
    parse_record,
    save_cache,
)


def test_round_trip(tmp_path):
    path = tmp_path / "cache.ndjson"
    records = {
        ("u", 3, 1): "1",
        ("u", 3, 6): "820150272000",
        ("w", 2, 0): "1",
    }
    save_cache(path, records)
    assert load_cache(path) == records
    first = path.read_bytes()
    save_cache(path, records)
    assert path.read_bytes() == first


def test_missing_file_loads_empty(tmp_path):
    assert load_cache(tmp_path / "absent.ndjson") == {}


def test_records_are_sorted_on_disk(tmp_path):
    path = tmp_path / "cache.ndjson"
    save_cache(path, {("w", 3, 2): "12", ("u", 2, 1): "1"})
    lines = path.read_text().splitlines()
    assert lines == [
        format_record(("u", 2, 1), "1"),
        format_record(("w", 3, 2), "12"),
    ]


def test_parse_record_round_trip():
    key, value = ("w01", 3, 4), "366336"
    assert parse_record(format_record(key, value)) == (key, value)


@pytest.mark.parametrize(
    "line",
    [
        "not json",
        '{"kind": "u", "d": 2}',
        '{"kind": "x", "d": 2, "n": 1, "value": "1"}',
        '{"kind": "u", "d": "2", "n": 1, "value": "1"}',
        '{"kind": "u", "d": 2, "n": 1, "value": 1}',
        '{"kind": "u", "d": 2, "n": 1, "value": "-4"}',
        '{"kind": "u", "d": 2, "n": 1, "value": "1.5"}',
    ],
)
def test_parse_record_rejects_malformed(line):
    with pytest.raises(CacheFormatError):
        parse_record(line)


def test_load_rejects_conflicting_duplicates(tmp_path):
    path = tmp_path / "cache.ndjson"
    path.write_text(
        format_record(("u", 2, 3), "6") + "\n" + format_record(("u", 2, 3), "7") + "\n"
    )
    with pytest.raises(CacheFormatError):
        load_cache(path)


def test_no_temp_files_left_behind(tmp_path):
    path = tmp_path / "cache.ndjson"
    save_cache(path, {("v", 2, 1): "1"})
    leftovers = [p for p in tmp_path.iterdir() if p.name != "cache.ndjson"]
    assert leftovers == []
