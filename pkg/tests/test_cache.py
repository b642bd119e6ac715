import json
import threading

import pytest

from dlchow import permgroup as pg
from dlchow import schubert as sc
from dlchow.cache import FORMAT, ProductCache, cache_file_for


S1 = (2, 1, 3)
S2 = (1, 3, 2)


def test_put_get_round_trip(tmp_path):
    cache = ProductCache(cache_file_for(tmp_path, 3), 3)
    cache.put((S1, S2), {(2, 3, 1): 1})
    assert cache.get((S1, S2)) == {(2, 3, 1): 1}
    assert cache.get((S2, S1)) == {(2, 3, 1): 1}
    cache.close()

    again = ProductCache(cache_file_for(tmp_path, 3), 3)
    assert again.get((S1, S2)) == {(2, 3, 1): 1}
    assert not again.corruption_seen


def test_header_first_line(tmp_path):
    path = cache_file_for(tmp_path, 3)
    cache = ProductCache(path, 3)
    cache.put((S1, S1), {(3, 1, 2): 1})
    cache.close()
    first = path.read_text().splitlines()[0]
    assert json.loads(first) == {"format": FORMAT, "version": 1, "n": 3}


def test_corrupt_tail_ignored(tmp_path):
    path = cache_file_for(tmp_path, 3)
    cache = ProductCache(path, 3)
    cache.put((S1, S1), {(3, 1, 2): 1})
    cache.close()
    with open(path, "a") as handle:
        handle.write('{"u": "s1", "v":\n')
        handle.write('{"u": "s2", "v": "s2", "expansion": [["s1 s2 s1", "9"]]}\n')

    again = ProductCache(path, 3)
    assert again.corruption_seen
    assert again.get((S1, S1)) == {(3, 1, 2): 1}
    # everything after the first bad line is dropped, even if well formed
    assert again.get((S2, S2)) is None

    again.compact()
    rebuilt = ProductCache(path, 3)
    assert not rebuilt.corruption_seen
    assert rebuilt.get((S1, S1)) == {(3, 1, 2): 1}


def test_new_records_survive_a_corrupt_tail(tmp_path):
    path = cache_file_for(tmp_path, 3)
    cache = ProductCache(path, 3)
    cache.put((S1, S1), {(3, 1, 2): 1})
    cache.close()
    with open(path, "a") as handle:
        handle.write("garbage tail\n")

    # a put after loading a corrupt file must not hide behind the bad line,
    # even if the process never reaches the clean-shutdown compaction
    hurt = ProductCache(path, 3)
    hurt.put((S2, S2), {(1, 3, 2): 9})
    hurt.close()

    reloaded = ProductCache(path, 3)
    assert not reloaded.corruption_seen
    assert reloaded.get((S1, S1)) == {(3, 1, 2): 1}
    assert reloaded.get((S2, S2)) == {(1, 3, 2): 9}


def test_mismatched_rank_header(tmp_path):
    path = cache_file_for(tmp_path, 3)
    cache = ProductCache(path, 3)
    cache.put((S1, S1), {(3, 1, 2): 1})
    cache.close()
    wrong = ProductCache(path, 4)
    assert wrong.corruption_seen
    assert wrong.records == {}


def test_concurrent_inserts(tmp_path):
    path = cache_file_for(tmp_path, 3)
    cache = ProductCache(path, 3)
    engine = sc.Engine(3)
    elems = list(pg.all_elements(3))
    pairs = [(u, v) for u in elems for v in elems]

    def worker(chunk):
        for u, v in chunk:
            cache.put((u, v), engine.product_expansion(u, v))

    threads = [
        threading.Thread(target=worker, args=(pairs[k::4],)) for k in range(4)
    ]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    cache.compact()

    reloaded = ProductCache(path, 3)
    assert not reloaded.corruption_seen
    assert len(reloaded.records) == len({tuple(sorted((u, v))) for u, v in pairs})
    for u, v in pairs:
        assert reloaded.get((u, v)) == engine.product_expansion(u, v)


def test_engine_reads_cache_without_solving(tmp_path, monkeypatch):
    path = cache_file_for(tmp_path, 3)
    warm = sc.Engine(3, product_cache=ProductCache(path, 3))
    expected = warm.product_expansion(S1, S2)
    warm.product_cache.compact()

    cold = sc.Engine(3, product_cache=ProductCache(path, 3))
    monkeypatch.setattr(
        cold,
        "solve_staircase",
        lambda *_: pytest.fail("cache miss: product was recomputed"),
    )
    assert cold.product_expansion(S1, S2) == expected
    assert cold.product_expansion(S2, S1) == expected
