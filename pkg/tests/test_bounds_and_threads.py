"""Environment-variable bound override and concurrent query safety."""

import random
import threading

import pytest

from matroid_forge import BoundError, GraphicMatroid, UniformMatroid, check_base_axioms
from matroid_forge.core import exhaustive_bound


class TestBoundOverride:
    def test_lowers_only(self, monkeypatch):
        monkeypatch.setenv("MATROID_FORGE_MAX_GROUND", "8")
        assert exhaustive_bound(12) == 8
        monkeypatch.setenv("MATROID_FORGE_MAX_GROUND", "40")
        assert exhaustive_bound(12) == 12

    def test_axiom_check_respects_override(self, monkeypatch):
        ground = set(range(1, 10))
        fam = [frozenset(ground)]
        assert check_base_axioms(ground, fam).ok
        monkeypatch.setenv("MATROID_FORGE_MAX_GROUND", "8")
        with pytest.raises(BoundError):
            check_base_axioms(ground, fam)


def test_concurrent_queries_agree():
    # one matroid queried from many threads: results match a serial pass
    m = GraphicMatroid(
        [("a", "b"), ("b", "c"), ("c", "a"), ("c", "d"), ("d", "a"), ("b", "d")]
    )
    rng = random.Random(0)
    queries = [
        frozenset(e for e in m.ground if rng.random() < 0.5) for _ in range(400)
    ]
    expected = [m.rank(q) for q in queries]
    results: dict[int, list[int]] = {}

    def worker(idx: int) -> None:
        results[idx] = [m.rank(q) for q in queries]

    threads = [threading.Thread(target=worker, args=(i,)) for i in range(8)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    for got in results.values():
        assert got == expected

    u = UniformMatroid(2, 4)
    assert u.rank({1, 2, 3}) == 2  # unrelated instance unaffected
