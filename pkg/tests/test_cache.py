import pytest

from sl213.cache import CacheError, PolyCache, budget_pairs, default_cache_dir, warm
from sl213.invariants import InvariantSpec, build_invariant, power_sum_polynomial


def test_budget_pairs():
    assert budget_pairs(12) == [(1, 0), (0, 1), (2, 0), (1, 1), (0, 2), (3, 0)]
    assert all(4 * m + 6 * n <= 30 for m, n in budget_pairs(30))


def test_default_dir_from_env(tmp_path, monkeypatch):
    monkeypatch.setenv("SL213_CACHE_DIR", str(tmp_path / "x"))
    assert default_cache_dir() == tmp_path / "x"


def test_roundtrip(tmp_path):
    cache = PolyCache(tmp_path)
    p = power_sum_polynomial(3, 0)
    path = cache.put_power_sum(3, 0, p)
    assert path.name == "powersum_m3_n0_raw.mpoly"
    assert cache.get_power_sum(3, 0) == p
    assert cache.get_power_sum(2, 0) is None


def test_corrupt_entry_is_skipped(tmp_path):
    cache = PolyCache(tmp_path)
    cache.put_power_sum(1, 0, power_sum_polynomial(1, 0))
    (tmp_path / "powersum_m1_n0_raw.mpoly").write_text("MPOLY v1 6 5\n1 2 3\n")
    assert cache.get_power_sum(1, 0) is None
    assert cache.problems and "powersum_m1_n0_raw.mpoly" in cache.problems[0]


def test_wrong_degree_entry_is_rejected(tmp_path):
    cache = PolyCache(tmp_path)
    cache.put_power_sum(2, 0, power_sum_polynomial(1, 0))
    assert cache.get_power_sum(2, 0) is None
    assert cache.validate()


def test_build_invariant_fills_cache(tmp_path):
    cache = PolyCache(tmp_path)
    spec = InvariantSpec.of(3, 0)
    first = build_invariant(spec, cache=cache)
    assert [e.m for e in cache.entries()] == [3]
    assert build_invariant(spec, cache=cache) == first


def test_warm_and_clear(tmp_path):
    cache = PolyCache(tmp_path)
    stored = warm(cache, 12)
    assert len(stored) == 6
    assert len(cache.entries()) == 6
    assert cache.validate() == []
    assert cache.clear() == 6
    assert cache.entries() == []


def test_unwritable_directory(tmp_path):
    blocker = tmp_path / "file"
    blocker.write_text("not a directory")
    cache = PolyCache(blocker / "sub")
    with pytest.raises(CacheError):
        cache.put_power_sum(1, 0, power_sum_polynomial(1, 0))
