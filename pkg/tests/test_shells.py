from itertools import product
from math import comb

import pytest

from apcqc.shells import first_hit, shell_pairs, worker_count


@pytest.mark.parametrize("p, n", [(2, 3), (3, 2), (5, 2), (2, 4)])
def test_shells_partition_and_order(p, n):
    seen = []
    for w in range(n + 1):
        A, B = shell_pairs(p, n, w)
        assert A.shape[0] == comb(n, w) * (p * p - 1) ** w
        rows = [tuple(a) + tuple(b) for a, b in zip(A.tolist(), B.tolist())]
        assert rows == sorted(rows)
        for r in rows:
            assert sum(1 for i in range(n) if r[i] or r[n + i]) == w
        seen.extend(rows)
    assert sorted(seen) == list(product(range(p), repeat=2 * n))


def test_first_hit_is_serial_answer():
    A, B = shell_pairs(3, 3, 2)
    hits = {5, 100, 101, 190}

    def search(a, b):
        for i in range(a.shape[0]):
            key = (tuple(a[i]), tuple(b[i]))
            if key in keyed:
                return i
        return -1

    keyed = {(tuple(A[i]), tuple(B[i])) for i in hits}
    for workers in (1, 2, 4, 9):
        assert first_hit(search, A, B, cost=1 << 20, workers=workers) == 5


def test_worker_count_env(monkeypatch):
    monkeypatch.setenv("APCQC_THREADS", "3")
    assert worker_count() == 3
    assert worker_count(1) == 1
    monkeypatch.setenv("APCQC_THREADS", "many")
    with pytest.raises(ValueError):
        worker_count()
