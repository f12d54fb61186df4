"""Set partitions of {0..n-1}: restricted-growth enumeration, exact-uniform sampling."""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator

import numpy as np

from .graphs import VertexPartition

# uniform sampling draws a random integer below a completion count; keep
# counts inside int64 so the draw stays exact
_MAX_SAMPLE_N = 25


def bell_number(n: int) -> int:
    """Number of set partitions of an n-element set (Bell triangle)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    row = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for x in row:
            nxt.append(nxt[-1] + x)
        row = nxt
    return row[0]


def iter_rgs(n: int) -> Iterator[tuple[int, ...]]:
    """Restricted growth strings of length n in lexicographic order.

    A string ``a`` encodes the partition where vertices share a part iff they
    share a label; ``a[0] = 0`` and ``a[i] <= max(a[:i]) + 1``.  Lexicographic
    order starts at the single-part string (all zeros) and ends at the
    all-singletons string ``0, 1, ..., n-1``.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    a = [0] * n
    # b[i] = max(a[:i]) + 1, the largest label allowed at position i
    b = [1] * n
    while True:
        yield tuple(a)
        i = n - 1
        while i > 0 and a[i] == b[i]:
            i -= 1
        if i == 0:
            return
        a[i] += 1
        bi = b[i] if a[i] < b[i] else a[i] + 1
        for j in range(i + 1, n):
            a[j] = 0
            b[j] = bi


def iter_partitions(n: int) -> Iterator[VertexPartition]:
    """All set partitions of {0..n-1} in canonical (restricted-growth) order."""
    for labels in iter_rgs(n):
        yield VertexPartition.from_labels(labels)


@lru_cache(maxsize=64)
def _completion_counts(n: int) -> tuple[tuple[int, ...], ...]:
    # A[m][k] = number of ways to partition m further elements given k open
    # blocks: A[0][k] = 1, A[m][k] = k*A[m-1][k] + A[m-1][k+1]
    size = n + 2
    rows = [tuple([1] * size)]
    for _ in range(n):
        prev = rows[-1]
        rows.append(tuple(k * prev[k] + prev[k + 1] for k in range(size - 1)) + (0,))
    return tuple(rows)


def random_rgs(n: int, rng: np.random.Generator) -> list[int]:
    """Exactly uniform random set partition of {0..n-1}, as a growth string.

    Walks left to right; at each position the element either joins one of the
    k existing blocks or opens a new one, with probabilities proportional to
    the completion counts of the resulting state.
    """
    if not (1 <= n <= _MAX_SAMPLE_N):
        raise ValueError(f"n must be in 1..{_MAX_SAMPLE_N}")
    counts = _completion_counts(n)
    labels: list[int] = []
    k = 0
    for m in range(n, 0, -1):
        total = counts[m][k]
        r = int(rng.integers(0, total))
        join_weight = counts[m - 1][k]
        if r < k * join_weight:
            labels.append(r // join_weight)
        else:
            labels.append(k)
            k += 1
    return labels


def random_vertex_partition(n: int, rng: np.random.Generator) -> VertexPartition:
    return VertexPartition.from_labels(random_rgs(n, rng))
