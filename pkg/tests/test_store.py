import os

from shared.characters import char_table, clear_memo, compute_char_table
from shared.parallel import parallel_map
from store.char_tables import (
    delete_table,
    get_table,
    list_tables,
    parse_table,
    serialize_table,
    upsert_table,
)
from store.db import get_cache


def test_round_trip_is_byte_identical(cache):
    table = compute_char_table(5)
    path = upsert_table(cache, table)
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    assert text == serialize_table(table)
    assert serialize_table(parse_table(text, 5)) == text
    assert get_table(cache, 5) == table


def test_missing_table_is_none(cache):
    assert get_table(cache, 4) is None


def test_corrupt_file_is_rebuilt(cache):
    with open(cache.table_path(4), "w", encoding="utf-8") as fh:
        fh.write('{"format": 1, "d": 4}\n{"lambda": "4", "mu": "4", "chi": "1"}\n')
    assert get_table(cache, 4) is None
    clear_memo()
    assert char_table(4, cache) == compute_char_table(4)
    assert get_table(cache, 4) == compute_char_table(4)


def test_wrong_degree_header_is_rejected(cache):
    text = serialize_table(compute_char_table(3))
    with open(cache.table_path(4), "w", encoding="utf-8") as fh:
        fh.write(text)
    assert get_table(cache, 4) is None


def test_list_and_delete(cache):
    for d in (3, 1, 2):
        char_table(d, cache)
    listed = list_tables(cache)
    assert [t["d"] for t in listed] == [1, 2, 3]
    assert all(t["bytes"] > 0 for t in listed)
    assert delete_table(cache, 2)
    assert not delete_table(cache, 2)
    assert not os.path.exists(cache.table_path(2))
    assert [t["d"] for t in list_tables(cache)] == [1, 3]


def test_garbled_partition_field_is_rebuilt(cache):
    text = serialize_table(compute_char_table(3))
    with open(cache.table_path(3), "w", encoding="utf-8") as fh:
        fh.write(text.replace('"lambda": "2,1"', '"lambda": "x"', 1))
    assert get_table(cache, 3) is None
    clear_memo()
    assert char_table(3, cache) == compute_char_table(3)


def _upsert_same_table(args):
    path, d = args
    return upsert_table(get_cache(path), compute_char_table(d))


def test_concurrent_writers_of_one_degree(cache):
    paths = parallel_map(_upsert_same_table, [(cache.path, 6)] * 8, jobs=8)
    assert set(paths) == {cache.table_path(6)}
    assert get_table(cache, 6) == compute_char_table(6)
    assert not [name for name in os.listdir(cache.path) if name.endswith(".tmp")]
