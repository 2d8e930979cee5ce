import json

import pytest

from repstab import cache as diskcache
from repstab.symfunc import CONFIG, SymFn, e, h, plethysm, schur


@pytest.fixture
def store(tmp_path):
    saved = CONFIG.cache
    yield diskcache.enable(tmp_path)
    CONFIG.cache = saved


def _clear_memo():
    from repstab import symfunc

    symfunc._pleth_memo.clear()


def test_round_trip(store):
    f, g = h(2), e(2)
    store.put(f, g, plethysm(f, g))
    assert store.get(f, g) == schur([2, 2]) + schur([1, 1, 1, 1])
    assert store.info()["entries"] == 1 and store.hits == 1


def test_plethysm_writes_and_reads_through(store):
    _clear_memo()
    first = plethysm(h(3), h(2))
    assert store.info()["entries"] >= 1
    _clear_memo()
    assert plethysm(h(3), h(2)) == first and store.hits >= 1


def test_corrupted_entries_are_rejected(store):
    f, g = h(2), h(2)
    store.put(f, g, plethysm(f, g))
    path = store.entries()[0]
    data = json.loads(path.read_text())
    data["result"] = [[[5], "1/1"]]  # wrong degree
    path.write_text(json.dumps(data))
    assert store.get(f, g) is None and store.rejected == 1
    assert not path.exists()
    store.put(f, g, plethysm(f, g))
    store.entries()[0].write_text("{not json")
    assert store.get(f, g) is None


def test_mismatched_inputs_are_rejected(store):
    store.put(h(2), h(2), plethysm(h(2), h(2)))
    path = store.entries()[0]
    data = json.loads(path.read_text())
    data["g"] = data["f"] = [[[1], "1/1"]]
    path.write_text(json.dumps(data))
    assert store.get(h(2), h(2)) is None


def test_info_and_clear(tmp_path):
    store = diskcache.PlethysmCache(tmp_path / "sub")
    assert store.info()["entries"] == 0 and store.clear() == 0
    store.put(h(1), h(2), h(2))
    store.put(h(2), h(1), h(2))
    assert store.info()["entries"] == 2
    assert store.clear() == 2 and store.entries() == []


def test_enable_disable(tmp_path, monkeypatch):
    saved = CONFIG.cache
    try:
        monkeypatch.setenv(diskcache.ENV_VAR, str(tmp_path))
        assert diskcache.default_dir() == tmp_path
        assert diskcache.enable().directory == tmp_path
        diskcache.disable()
        assert CONFIG.cache is None
    finally:
        CONFIG.cache = saved


def test_degree_guard():
    assert diskcache._degrees_ok(h(2), h(3), schur([6]))
    assert not diskcache._degrees_ok(h(2), h(3), schur([5]))
    assert diskcache._degrees_ok(h(2), h(3), SymFn.zero())
