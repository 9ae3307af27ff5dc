"""Weight-shell enumeration of (a, b) pairs and the parallel first-hit driver.

Shell w holds every (a, b) in F_p^n x F_p^n with ws(a, b) = w, sorted
lexicographically on the concatenation (a_1..a_n, b_1..b_n). Searches walk
shells w = 1, 2, ... and stop at the first shell containing a hit; inside a
shell the lexicographically first hit wins, so the answer does not depend on
how many workers split the shell.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from functools import lru_cache
from itertools import combinations
from typing import Callable

import numpy as np

# below this many (pair x table entry) operations a shell is searched inline
PARALLEL_THRESHOLD = 1 << 18


def worker_count(workers: int | None = None) -> int:
    if workers is not None:
        return max(1, int(workers))
    env = os.environ.get("APCQC_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            raise ValueError(f"APCQC_THREADS must be an integer, got {env!r}") from None
    return os.cpu_count() or 1


@lru_cache(maxsize=128)
def shell_pairs(p: int, n: int, w: int) -> tuple[np.ndarray, np.ndarray]:
    """All (a, b) with ws(a, b) = w as two read-only (M, n) arrays in lex order."""
    if not 0 <= w <= n:
        raise ValueError(f"shell weight {w} outside 0..{n}")
    nz = np.array([(x, y) for x in range(p) for y in range(p) if x or y], dtype=np.int64)
    blocks = []
    for support in combinations(range(n), w):
        if w:
            grid = np.stack(np.meshgrid(*([np.arange(len(nz))] * w), indexing="ij"), -1).reshape(-1, w)
        else:
            grid = np.zeros((1, 0), dtype=np.int64)
        rows = np.zeros((grid.shape[0], 2 * n), dtype=np.int64)
        for k, pos in enumerate(support):
            rows[:, pos] = nz[grid[:, k], 0]
            rows[:, n + pos] = nz[grid[:, k], 1]
        blocks.append(rows)
    rows = np.concatenate(blocks) if blocks else np.zeros((0, 2 * n), dtype=np.int64)
    order = np.lexsort(rows.T[::-1])
    rows = rows[order]
    A = np.ascontiguousarray(rows[:, :n])
    B = np.ascontiguousarray(rows[:, n:])
    A.setflags(write=False)
    B.setflags(write=False)
    return A, B


def first_hit(
    search: Callable[[np.ndarray, np.ndarray], int],
    A: np.ndarray,
    B: np.ndarray,
    cost: int,
    workers: int | None = None,
) -> int:
    """Index of the first row for which ``search`` reports a hit, or -1.

    ``search(A_chunk, B_chunk)`` returns the first hit index inside the chunk
    or -1. Chunks are contiguous and reduced in order, so the result equals
    the serial answer for every worker count.
    """
    m = A.shape[0]
    nw = worker_count(workers)
    if nw == 1 or m < 2 or m * cost < PARALLEL_THRESHOLD:
        return search(A, B)
    bounds = np.linspace(0, m, min(nw, m) + 1, dtype=np.int64)
    spans = [(int(lo), int(hi)) for lo, hi in zip(bounds[:-1], bounds[1:]) if hi > lo]
    with ThreadPoolExecutor(max_workers=len(spans)) as pool:
        results = list(pool.map(lambda s: search(A[s[0]:s[1]], B[s[0]:s[1]]), spans))
    for (lo, _), r in zip(spans, results):
        if r >= 0:
            return lo + r
    return -1
